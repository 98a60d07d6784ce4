#include "rlwstab/gkdv.hpp"
#include "rlwstab/errors.hpp"
#include "rlwstab/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rlwstab::gkdv {

namespace {

void require_speed(double c)
{
    if (c == -1.0)
        throw DomainError("gKdV speed c = -1 is excluded");
}

} // namespace

cplx Coefficients::operator[](int n) const noexcept
{
    const int M = order();
    if (n < -M || n > M)
        return 0.0;
    return hat[static_cast<std::size_t>(n + M)];
}

double Coefficients::l1_norm() const
{
    double s = 0.0;
    for (const cplx& z : hat)
        s += std::abs(z);
    return s;
}

Coefficients Coefficients::zero()
{
    return {{0.0}};
}

Coefficients Coefficients::cosine(double amplitude)
{
    return {{0.5 * amplitude, 0.0, 0.5 * amplitude}};
}

Coefficients Coefficients::from_series(const CosineSeries& s)
{
    const int M = s.terms();
    Coefficients out;
    out.hat.resize(static_cast<std::size_t>(2 * M + 1));
    for (int n = -M; n <= M; ++n)
        out.hat[static_cast<std::size_t>(n + M)] = s.hat(n);
    return out;
}

DiskFamily disks(const Coefficients& u, double c, int K_max)
{
    require_speed(c);
    if (K_max < 1)
        throw DomainError("K_max must be positive");
    DiskFamily f{c, u.l1_norm(), {}, 0, 0.0};
    for (int k = -K_max; k <= K_max; ++k) {
        const double kk = k;
        f.disks.push_back({k, cplx(0.0, -kk * kk * kk - c * kk), std::abs(kk) * f.fourier_l1});
    }
    const auto isolated = [&f](const Disk& d) {
        for (const Disk& e : f.disks)
            if (e.k != d.k && std::abs(e.center - d.center) <= e.radius + d.radius)
                return false;
        return true;
    };
    f.k0 = K_max + 1;
    for (int k = K_max; k >= 0; --k) {
        const Disk& pos = f.disks[static_cast<std::size_t>(k + K_max)];
        const Disk& neg = f.disks[static_cast<std::size_t>(-k + K_max)];
        if (!isolated(pos) || !isolated(neg))
            break;
        f.k0 = k;
    }
    for (const Disk& d : f.disks)
        if (std::abs(d.k) < f.k0)
            f.im_threshold = std::max(f.im_threshold, std::abs(d.center.imag()) + d.radius);
    return f;
}

std::vector<cplx> spectrum(const Coefficients& u, double c, int Nk)
{
    require_speed(c);
    const int n = 2 * Nk + 1;
    Eigen::MatrixXcd L(n, n);
    for (int i = 0; i < n; ++i) {
        const double k = i - Nk;
        for (int j = 0; j < n; ++j)
            L(i, j) = cplx(0.0, k) * u[i - j];
        L(i, i) += cplx(0.0, -k * k * k - c * k);
    }
    return linalg::eigenvalues(L);
}

Report check(const Coefficients& u, double c, int Nk, int K_report)
{
    Report r;
    r.family = disks(u, c, Nk);
    r.eigenvalues = spectrum(u, c, Nk);
    std::ostringstream msg;
    msg.precision(12);
    for (const cplx& z : r.eigenvalues) {
        if (std::abs(z.imag()) <= r.family.im_threshold)
            continue;
        ++r.n_checked;
        r.max_abs_real = std::max(r.max_abs_real, std::abs(z.real()));
        const auto hits = std::count_if(r.family.disks.begin(), r.family.disks.end(),
                                        [&z](const Disk& d) { return d.contains(z); });
        if (hits != 1) {
            r.contained = false;
            msg.str("");
            msg << "eigenvalue " << z << " lies in " << hits << " disks";
            r.failures.push_back(msg.str());
        }
        if (std::abs(z.real()) > 1e-8) {
            r.on_axis = false;
            msg.str("");
            msg << "eigenvalue " << z << " has |Re| = " << std::abs(z.real());
            r.failures.push_back(msg.str());
        }
    }
    for (const Disk& d : r.family.disks) {
        if (std::abs(d.k) < r.family.k0 || std::abs(d.k) > K_report)
            continue;
        const auto inside = std::count_if(r.eigenvalues.begin(), r.eigenvalues.end(),
                                          [&d](const cplx& z) { return d.contains(z); });
        if (inside != 1) {
            r.one_per_disk = false;
            msg.str("");
            msg << "disk k = " << d.k << " (center " << d.center << ", radius " << d.radius
                << ") holds " << inside << " eigenvalues";
            r.failures.push_back(msg.str());
        }
    }
    return r;
}

} // namespace rlwstab::gkdv
