#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "rmtk/rng.hpp"

namespace rmtk {

// Pfaffian of an even-dimensional skew-symmetric matrix via skew
// tridiagonalization with partial pivoting (Parlett-Reid), O(n^3).
// Pf of the empty matrix is 1. Works for real and complex scalars.
template <typename Scalar>
Scalar pfaffian(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A) {
  using std::abs;
  const Eigen::Index n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("pfaffian: matrix not square");
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (n == 0) return Scalar(1);
  const double scale = A.cwiseAbs().maxCoeff();
  if ((A + A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("pfaffian: matrix not skew-symmetric");

  Scalar pf(1);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = k + 1;
    double best = abs(A(k + 1, k));
    for (Eigen::Index i = k + 2; i < n; ++i)
      if (abs(A(i, k)) > best) {
        best = abs(A(i, k));
        kp = i;
      }
    if (kp != k + 1) {
      A.row(kp).swap(A.row(k + 1));
      A.col(kp).swap(A.col(k + 1));
      pf = -pf;
    }
    if (A(k + 1, k) == Scalar(0)) return Scalar(0);
    pf *= A(k, k + 1);
    if (k + 2 < n) {
      const auto tau = (A.row(k).segment(k + 2, n - k - 2) / A(k, k + 1)).eval();
      const auto col = A.col(k + 1).segment(k + 2, n - k - 2).eval();
      A.bottomRightCorner(n - k - 2, n - k - 2) +=
          tau.transpose() * col.transpose() - col * tau;
    }
  }
  return pf;
}

// Eigenvalues of a Hermitian matrix, ascending. Throws if the input is not
// Hermitian within 1e-12 of its magnitude.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& H);

// Singular values of a square complex matrix, ascending, clamped at zero.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& W);

// GUE draw with weight exp(-Tr H^2 / 2): diagonal variance 1, off-diagonal
// real/imaginary variances 1/2.
Eigen::MatrixXcd sample_gue(int n, RngStream& rng);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the R-diagonal
// phases divided out.
Eigen::MatrixXcd sample_haar_unitary(int n, RngStream& rng);

} // namespace rmtk
