#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace rlwstab::linalg {

using cplx = std::complex<double>;

// Dense nonsymmetric eigenvalues (LAPACK). Matrices of the form i·R with R real
// take the real dgeev path on R, several times cheaper than zgeev.
std::vector<cplx> eigenvalues(const Eigen::MatrixXcd& A, double purely_imaginary_tol = 0.0);
std::vector<cplx> eigenvalues(Eigen::MatrixXd A);
std::vector<cplx> eigenvalues_general(Eigen::MatrixXcd A);

} // namespace rlwstab::linalg
