#include "rlwstab/linalg.hpp"
#include "rlwstab/errors.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

namespace rlwstab::linalg {

namespace {

std::vector<cplx> dgeev(Eigen::MatrixXd& A)
{
    const auto n = static_cast<lapack_int>(A.rows());
    std::vector<double> wr(static_cast<std::size_t>(n)), wi(static_cast<std::size_t>(n));
    const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, A.data(), n, wr.data(),
                                          wi.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw NumericalError("dgeev failed to converge (info = " + std::to_string(info) + ")");
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = {wr[i], wi[i]};
    return out;
}

// Some optimized BLAS builds return garbage from dgeev once n exceeds ~150
// (OpenBLAS 0.3.20 with its Cooperlake kernels does). Check a known spectrum once.
void self_test()
{
    constexpr int n = 200;
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; i += 2) {
        const double re = 0.01 * i, im = 1.0 + i;
        D(i, i) = D(i + 1, i + 1) = re;
        D(i, i + 1) = im * (1.0 + i);
        D(i + 1, i) = -im / (1.0 + i);
    }
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
        v(i) = std::sin(1.0 + 0.7 * i);
    v.normalize();
    const Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n) - 2.0 * v * v.transpose();
    Eigen::MatrixXd A = H * D * H;
    double worst = 0.0;
    for (const cplx& z : dgeev(A)) {
        // z should be 0.01i' ± (1+i')j for an even i'
        const int i = std::clamp(static_cast<int>(std::lround((std::abs(z.imag()) - 1.0) / 2.0)) * 2, 0, n - 2);
        worst = std::max(worst, std::abs(z - cplx(0.01 * i, std::copysign(1.0 + i, z.imag()))));
    }
    if (!(worst < 1e-6))
        throw NumericalError("the linked LAPACK returns wrong eigenvalues on a known test matrix "
                             "(error " + std::to_string(worst) + "); rebuild with "
                             "RLWSTAB_REFERENCE_LAPACK=ON or pin OPENBLAS_CORETYPE");
}

void ensure_backend()
{
    static std::once_flag once;
    static bool ok = false;
    std::call_once(once, [] {
        try {
            self_test();
            ok = true;
        } catch (const NumericalError&) {
        }
    });
    if (!ok)
        self_test(); // rethrow with the diagnostic
}

} // namespace

std::vector<cplx> eigenvalues(Eigen::MatrixXd A)
{
    ensure_backend();
    return dgeev(A);
}

std::vector<cplx> eigenvalues_general(Eigen::MatrixXcd A)
{
    ensure_backend();
    const auto n = static_cast<lapack_int>(A.rows());
    std::vector<cplx> w(static_cast<std::size_t>(n));
    const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, A.data(), n, w.data(),
                                          nullptr, 1, nullptr, 1);
    if (info != 0)
        throw NumericalError("zgeev failed to converge (info = " + std::to_string(info) + ")");
    return w;
}

std::vector<cplx> eigenvalues(const Eigen::MatrixXcd& A, double purely_imaginary_tol)
{
    if (A.real().cwiseAbs().maxCoeff() <= purely_imaginary_tol) {
        // A = iR  ⇒  spec(A) = i·spec(R)
        auto w = eigenvalues(Eigen::MatrixXd(A.imag()));
        for (auto& z : w)
            z = cplx(-z.imag(), z.real());
        return w;
    }
    return eigenvalues_general(A);
}

} // namespace rlwstab::linalg
