#include <cmath>
#include <complex>

#include <doctest.h>

#include "rmtk/linalg.hpp"
#include "rmtk/rng.hpp"

using namespace rmtk;

namespace {

Eigen::MatrixXd random_skew(int n, RngStream& rng) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      A(i, j) = rng.normal();
      A(j, i) = -A(i, j);
    }
  return A;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("pfaffian 4x4 closed form") {
  // Pf = a f - b e + c d for upper entries (a b c; d e; f).
  const double a = 1.3, b = -0.7, c = 2.1, d = 0.4, e = -1.9, f = 0.8;
  Eigen::MatrixXd A(4, 4);
  A << 0, a, b, c, -a, 0, d, e, -b, -d, 0, f, -c, -e, -f, 0;
  CHECK(pfaffian<double>(A) ==
        doctest::Approx(a * f - b * e + c * d).epsilon(1e-13));
}

TEST_CASE("pfaffian squared equals determinant") {
  RngStream rng(42, 0);
  for (int n : {2, 4, 6, 8, 10}) {
    const Eigen::MatrixXd A = random_skew(n, rng);
    const double pf = pfaffian<double>(A);
    CHECK(pf * pf ==
          doctest::Approx(A.determinant()).epsilon(1e-10));
  }
}

TEST_CASE("pfaffian sign flips under symplectic-odd permutation") {
  RngStream rng(7, 1);
  Eigen::MatrixXd A = random_skew(6, rng);
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(6, 6);
  P.row(0).swap(P.row(1));  // odd permutation: Pf(P A P^T) = -Pf(A)
  const Eigen::MatrixXd B = P * A * P.transpose();
  CHECK(pfaffian<double>(B) ==
        doctest::Approx(-pfaffian<double>(A)).epsilon(1e-12));
}

TEST_CASE("complex pfaffian") {
  RngStream rng(11, 2);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      A(i, j) = std::complex<double>(rng.normal(), rng.normal());
      A(j, i) = -A(i, j);
    }
  const std::complex<double> pf = pfaffian<std::complex<double>>(A);
  CHECK(std::abs(pf * pf - A.determinant()) <
        1e-10 * std::abs(A.determinant()));
}

TEST_CASE("pfaffian input validation") {
  Eigen::MatrixXd odd = Eigen::MatrixXd::Zero(3, 3);
  CHECK_THROWS_AS(pfaffian<double>(odd), std::invalid_argument);
  Eigen::MatrixXd sym = Eigen::MatrixXd::Ones(4, 4);
  CHECK_THROWS_AS(pfaffian<double>(sym), std::invalid_argument);
  Eigen::MatrixXd empty(0, 0);
  CHECK(pfaffian<double>(empty) == 1.0);
}

TEST_CASE("hermitian eigenvalues") {
  Eigen::MatrixXcd H(2, 2);
  H << std::complex<double>(2, 0), std::complex<double>(0, -1),
      std::complex<double>(0, 1), std::complex<double>(2, 0);
  const Eigen::VectorXd ev = hermitian_eigenvalues(H);
  CHECK(ev(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(3.0).epsilon(1e-12));
  Eigen::MatrixXcd notH = H;
  notH(0, 1) = 5.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(notH), std::invalid_argument);
}

TEST_CASE("singular values") {
  Eigen::MatrixXcd W(2, 2);
  W << 3, 0, 0, std::complex<double>(0, -4);
  const Eigen::VectorXd sv = singular_values(W);
  CHECK(sv(0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sv(1) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("GUE sampler moments") {
  RngStream rng(123, 0);
  const int n = 4;
  const int draws = 4000;
  double tr2 = 0.0;
  for (int s = 0; s < draws; ++s) {
    const Eigen::MatrixXcd H = sample_gue(n, rng);
    CHECK((H - H.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    tr2 += std::real((H * H).trace());
  }
  tr2 /= draws;
  // E Tr H^2 = n^2; SE of the mean of Tr H^2 is about sqrt(2) n / sqrt(draws).
  CHECK(std::abs(tr2 - n * n) < 4.0 * std::sqrt(2.0) * n / std::sqrt(draws));
}

TEST_CASE("Haar sampler unitarity and phase invariance") {
  RngStream rng(5, 3);
  const Eigen::MatrixXcd U = sample_haar_unitary(5, rng);
  CHECK((U * U.adjoint() - Eigen::MatrixXcd::Identity(5, 5))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  // First-moment check: E |U_00|^2 = 1/n.
  const int draws = 4000;
  double m = 0.0;
  for (int s = 0; s < draws; ++s)
    m += std::norm(sample_haar_unitary(3, rng)(0, 0));
  m /= draws;
  CHECK(std::abs(m - 1.0 / 3.0) < 0.02);
}

}
