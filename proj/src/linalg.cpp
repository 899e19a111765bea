#include "rmtk/linalg.hpp"

#include <algorithm>

namespace rmtk {

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& H) {
  if (H.rows() != H.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& W) {
  if (W.rows() != W.cols())
    throw std::invalid_argument("singular_values: matrix not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      (W.adjoint() * W).eval(), Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    ev(i) = std::sqrt(std::max(0.0, ev(i)));
  std::sort(ev.data(), ev.data() + ev.size());
  return ev;
}

Eigen::MatrixXcd sample_gue(int n, RngStream& rng) {
  Eigen::MatrixXcd H(n, n);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    H(i, i) = rng.normal();
    for (int j = i + 1; j < n; ++j) {
      const std::complex<double> z(s * rng.normal(), s * rng.normal());
      H(i, j) = z;
      H(j, i) = std::conj(z);
    }
  }
  return H;
}

Eigen::MatrixXcd sample_haar_unitary(int n, RngStream& rng) {
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G(i, j) = std::complex<double>(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = R(j, j);
    const double a = std::abs(d);
    Q.col(j) *= (a > 0.0) ? d / a : std::complex<double>(1.0, 0.0);
  }
  return Q;
}

} // namespace rmtk
