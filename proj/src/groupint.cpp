#include "rmtk/groupint.hpp"

#include <cmath>
#include <stdexcept>

#include "rmtk/ensemble.hpp"
#include "rmtk/linalg.hpp"
#include "rmtk/specfun.hpp"

namespace rmtk {

namespace {

const double kSqrtPi = std::sqrt(M_PI);

double bessel_i0(double x) {
  return bessel_i0_scaled(x) * std::exp(std::abs(x));
}
double bessel_i1(double x) {
  return bessel_i1_scaled(x) * std::exp(std::abs(x));
}

// B_0(p, q) e^{-2(p^2 + q^2)}: the theta integrand is damped so that its
// combined exponent stays <= 0 and never overflows.
double weight_B0_stripped(double p, double q, const QuadratureSpec& spec) {
  const double A = p * p - q * q;
  const double B = 2.0 * p * q;
  auto F = [&](double s, double co) {
    const double as = A * s;
    const double bc = B * co;
    const double sh = 0.5 * (1.0 - std::exp(-2.0 * std::abs(as)));
    const double e = -(p * p + q * q) + std::abs(as) + std::abs(bc);
    return (as < 0.0 ? -sh : sh) * bessel_i0_scaled(bc) * std::exp(e);
  };
  QuadratureResult r = theta_integral(F, spec);
  if (!r.converged)
    throw ConvergenceError("weight_B: theta integral did not converge");
  return 4.0 * r.value;
}

double weight_B_2d(double xi, double p, double q, const QuadratureSpec& spec) {
  const double cut = semi_infinite_cutoff();
  auto integrand = [&](double x, double y) {
    const double gauss =
        std::exp(-0.5 * ((x - xi) * (x - xi) + (y - xi) * (y - xi)));
    const double s = x + y;
    if (std::abs(s) < 1e-6) {
      // Removable line: bracket ~ s * d(bracket)/ds.
      const double d = 2.0 * q * bessel_i0(2.0 * p * x) * bessel_i1(2.0 * q * x) -
                       2.0 * p * bessel_i1(2.0 * p * x) * bessel_i0(2.0 * q * x);
      return (x - y) * (-d) * gauss;
    }
    const double br = bessel_i0(2.0 * p * x) * bessel_i0(2.0 * q * y) -
                      bessel_i0(2.0 * p * y) * bessel_i0(2.0 * q * x);
    return (x - y) / s * br * gauss;
  };
  QuadratureResult r = integrate_2d(integrand, Range::finite(xi - cut, xi + cut),
                                    Range::finite(xi - cut, xi + cut), spec);
  if (!r.converged)
    throw ConvergenceError("weight_B: 2-D quadrature did not converge");
  return r.value;
}

} // namespace

double weight_B(double xi, double p, double q, const QuadratureSpec& spec) {
  if (p == q) return 0.0;
  if (xi == 0.0)
    return std::exp(2.0 * (p * p + q * q)) * weight_B0_stripped(p, q, spec);
  return weight_B_2d(xi, p, q, spec);
}

double weight_C(double xi, double a, const QuadratureSpec& spec) {
  if (xi == 0.0) return 2.0 * kSqrtPi * std::exp(a * a) * bessel_i0(a * a);
  const double cut = semi_infinite_cutoff();
  QuadratureResult r = integrate_finite(
      [&](double x) {
        return std::exp(-0.5 * (x - xi) * (x - xi)) * bessel_i0(2.0 * a * x);
      },
      xi - cut, xi + cut, spec);
  if (!r.converged)
    throw ConvergenceError("weight_C: quadrature did not converge");
  return std::sqrt(2.0) * r.value;
}

double group_integral(const std::vector<double>& a, double xi,
                      const QuadratureSpec& spec) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw std::invalid_argument("group_integral: empty input");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a[i] * a[i] - a[j] * a[j]) < 1e-6)
        throw std::domain_error(
            "group_integral: degenerate a values (confluent case out of scope)");

  double log_pref = 0.0;
  for (int j = 0; j < n; ++j)
    log_pref += std::lgamma(j + 1.0) - 0.5 * std::log(4.0 * M_PI);

  double vand = 1.0;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) vand *= a[l] * a[l] - a[k] * a[k];

  double tra2 = 0.0;
  for (double v : a) tra2 += v * v;

  const bool odd = n % 2 != 0;
  const int dim = odd ? n + 1 : n;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
  if (xi == 0.0) {
    // Rescaled entries B_0(p, q) e^{-(p^2 + q^2)}: the e^{a_k^2} row/column
    // factors reassemble to e^{Tr a^2} in the Pfaffian and cancel the global
    // e^{-Tr a^2} prefactor exactly.
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l) {
        M(k, l) = weight_B0_stripped(a[l], a[k], spec) *
                  std::exp(a[l] * a[l] + a[k] * a[k]);
        M(l, k) = -M(k, l);
      }
    if (odd)
      for (int k = 0; k < n; ++k) {
        M(k, n) = 2.0 * kSqrtPi * bessel_i0(a[k] * a[k]);
        M(n, k) = -M(k, n);
      }
    return std::exp(log_pref) * pfaffian<double>(M) / vand;
  }
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      M(k, l) = weight_B(xi, a[l], a[k], spec);
      M(l, k) = -M(k, l);
    }
  if (odd)
    for (int k = 0; k < n; ++k) {
      M(k, n) = weight_C(xi, a[k], spec);
      M(n, k) = -M(k, n);
    }
  return std::exp(log_pref - tra2) * pfaffian<double>(M) / vand;
}

std::pair<double, double> mc_group_integral(const Eigen::MatrixXcd& A,
                                            const Eigen::MatrixXcd& B,
                                            double xi, long samples,
                                            RngStream& rng) {
  const int n = static_cast<int>(A.rows());
  if (A.cols() != n || B.rows() != n || B.cols() != n)
    throw std::invalid_argument("mc_group_integral: A, B must be square, equal size");
  if (samples < 1000)
    throw std::invalid_argument("mc_group_integral: need at least 1000 samples");
  double sum = 0.0, sumsq = 0.0;
  for (long s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd U = sample_haar_unitary(n, rng);
    const Eigen::MatrixXcd AU = A * U;
    const Eigen::MatrixXcd UB = U.adjoint() * B;
    const std::complex<double> t =
        xi * (AU.trace() + UB.trace()) +
        0.5 * ((AU * AU).trace() + (UB * UB).trace());
    const double v = std::real(std::exp(t));
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / samples;
  const double var = std::max(0.0, sumsq / samples - mean * mean);
  return {mean, std::sqrt(var / samples)};
}

std::pair<double, double> leutwyler_smilga_check(double m1, double m2) {
  if (!(m1 > 0.0) || !(m2 > 0.0) || m1 == m2)
    throw std::invalid_argument("leutwyler_smilga_check: need distinct m1, m2 > 0");
  auto f = [&](double xi) {
    return xi * xi * weight_B(xi, m1 / xi, m2 / xi) /
           (4.0 * M_PI * (m1 * m1 - m2 * m2));
  };
  const double f1 = f(20.0), f2 = f(40.0), f3 = f(80.0);
  // O(1/xi^2) convergence: two Richardson levels.
  const double r1 = (4.0 * f2 - f1) / 3.0;
  const double r2 = (4.0 * f3 - f2) / 3.0;
  const double extrap = (16.0 * r2 - r1) / 15.0;
  const double ref =
      (m1 * bessel_i1(2.0 * m1) * bessel_i0(2.0 * m2) -
       m2 * bessel_i0(2.0 * m1) * bessel_i1(2.0 * m2)) /
      (m1 * m1 - m2 * m2);
  return {extrap, ref};
}

} // namespace rmtk
