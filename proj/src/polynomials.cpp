#include "rmtk/polynomials.hpp"

#include <cmath>
#include <stdexcept>

namespace rmtk {

namespace {

constexpr int kMaxDegree = 16;

void check_degree(int j) {
  if (j < 0) throw std::invalid_argument("polynomial index j < 0");
  if (j > kMaxDegree)
    throw std::invalid_argument(
        "polynomial degree capped at 16: double-precision coefficient "
        "cancellation dominates beyond");
}

double factorial(int n) { return std::tgamma(n + 1.0); }

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

// Coefficients of L_n^{(alpha)}(y) in ascending powers of y.
std::vector<double> laguerre_coeffs(int n, double alpha) {
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double lg = std::lgamma(n + alpha + 1.0) -
                      std::lgamma(k + alpha + 1.0) -
                      std::lgamma(n - k + 1.0) - std::lgamma(k + 1.0);
    c[k] = ((k % 2) ? -1.0 : 1.0) * std::exp(lg);
  }
  return c;
}

// p += f * L_n(scale * y) expressed in y, with L_n plain Laguerre.
void add_scaled_laguerre(std::vector<double>& p, int n, double scale,
                         double f) {
  const auto lc = laguerre_coeffs(n, 0.0);
  double sk = 1.0;
  for (int k = 0; k <= n; ++k) {
    p[k] += f * lc[k] * sk;
    sk *= scale;
  }
}

PolynomialCoeffs finish_monic(std::vector<double> c, int degree) {
  // Guard against rounding drift in the leading coefficient.
  const double lead = c[degree];
  for (auto& v : c) v /= lead;
  c[degree] = 1.0;
  return {degree, std::move(c)};
}

} // namespace

double poly_eval_x2(const PolynomialCoeffs& p, double x2) {
  double v = 0.0;
  for (int k = p.degree; k >= 0; --k) v = v * x2 + p.coeffs[k];
  return v;
}

PolynomialCoeffs poly_q(int j, const Coupling& c) {
  check_degree(j);
  const double m2 = c.mu * c.mu;
  const double scale = 1.0 / (1.0 + m2);
  const double ratio = (1.0 - m2) / (2.0 * (1.0 + m2));
  std::vector<double> out(j + 1, 0.0);
  for (int l = 0; 2 * l <= j; ++l) {
    const double pref = factorial(j) * std::pow(1.0 + m2, j) * binom(2 * l, l) *
                        std::pow(ratio, 2 * l);
    add_scaled_laguerre(out, j - 2 * l, scale, pref);
  }
  // The printed sum has leading coefficient (-1)^j; flip to monic.
  if (j % 2)
    for (auto& v : out) v = -v;
  return finish_monic(std::move(out), j);
}

PolynomialCoeffs poly_q_tilde(int j, const Coupling& c, double c_tilde) {
  check_degree(j + 1);  // the companion polynomial has degree j + 1
  const double m2 = c.mu * c.mu;
  const double scale = 1.0 / (1.0 + m2);
  const double ratio = (1.0 - m2) / (2.0 * (1.0 + m2));
  const double ba2 = std::pow((1.0 - m2) / (1.0 + m2), 2);
  std::vector<double> out(j + 2, 0.0);
  for (int l = 0; 2 * l <= j; ++l) {
    const double pref = factorial(j) * std::pow(1.0 + m2, j + 1) *
                        binom(2 * l, l) * std::pow(ratio, 2 * l);
    if (j - 2 * l - 1 >= 0)
      add_scaled_laguerre(out, j - 2 * l - 1, scale, pref * ba2 * (j - 2 * l));
    add_scaled_laguerre(out, j - 2 * l + 1, scale, -pref * (j - 2 * l + 1));
  }
  if (j % 2)
    for (auto& v : out) v = -v;
  PolynomialCoeffs qt = finish_monic(std::move(out), j + 1);
  if (c_tilde != 0.0) {
    const PolynomialCoeffs qq = poly_q(j, c);
    for (int k = 0; k <= j; ++k) qt.coeffs[k] += c_tilde * qq.coeffs[k];
  }
  return qt;
}

PolynomialCoeffs q_limit_mu0(int j) {
  check_degree(j);
  const int p = (j + 1) / 2, m = j / 2;
  const auto a = laguerre_coeffs(p, -0.5);
  const auto b = laguerre_coeffs(m, 0.5);
  std::vector<double> prod(j + 1, 0.0);
  for (int u = 0; u <= p; ++u)
    for (int v = 0; v <= m; ++v) prod[u + v] += a[u] * b[v];
  const double pref =
      std::pow(-2.0, j) * factorial(p) * factorial(m);
  double sk = 1.0;
  for (int k = 0; k <= j; ++k) {
    prod[k] *= pref * sk;
    sk *= 0.5;
  }
  return finish_monic(std::move(prod), j);
}

PolynomialCoeffs q_limit_mu1(int j) {
  check_degree(j);
  std::vector<double> out(j + 1, 0.0);
  add_scaled_laguerre(out, j, 0.5, std::pow(-2.0, j) * factorial(j));
  return finish_monic(std::move(out), j);
}

PolynomialCoeffs q_via_contour(int j, const Coupling& c) {
  check_degree(j);
  const double m2 = c.mu * c.mu;
  // Series of (1 - 2(1+mu^2) z + 4 mu^2 z^2)^{-1/2} from its first-order ODE.
  const double a = -2.0 * (1.0 + m2);
  const double b = 4.0 * m2;
  std::vector<double> s(j + 1, 0.0);
  s[0] = 1.0;
  if (j >= 1) s[1] = -0.5 * a;
  for (int n = 1; n < j; ++n)
    s[n + 1] =
        -((2.0 * n + 1.0) * a * s[n] + 2.0 * b * n * s[n - 1]) / (2.0 * n + 2.0);
  // Multiply by (1 - (1+mu^2) z)^{j+1}, truncated at z^j.
  std::vector<double> A(j + 1, 0.0);
  for (int n = 0; n <= j; ++n)
    for (int mth = 0; mth <= std::min(n, j + 1); ++mth)
      A[n] += binom(j + 1, mth) * std::pow(-(1.0 + m2), mth) * s[n - mth];
  std::vector<double> out(j + 1, 0.0);
  for (int k = 0; k <= j; ++k) out[k] = factorial(j) * A[j - k] / factorial(k);
  return {j, std::move(out)};
}

double skew_product(const PolynomialCoeffs& f1, const PolynomialCoeffs& f2,
                    const SkewProductSpec& spec) {
  const bool even = spec.parity == Parity::even;
  const Coupling& c = spec.coupling;
  // For the odd-sector weight, H of the fixed outer argument is hoisted out
  // of the inner integral.
  const double gb = gbar(c);
  auto inner_weight = [&](double l1, double h1, double l2) {
    double w = weight_G(l1, l2, c, spec.quad);
    if (!even)
      w += -weight_g(l1, c) * weight_H(l2, c, spec.quad) / gb +
           h1 * weight_g(l2, c) / gb;
    return w;
  };
  const double cut = semi_infinite_cutoff();
  QuadratureSpec inner_spec = spec.quad;
  inner_spec.abs_tol *= 0.1;
  inner_spec.rel_tol *= 0.1;
  bool ok = true;
  auto outer = [&](double l1) {
    const double h1 = even ? 0.0 : weight_H(l1, c, spec.quad);
    QuadratureResult r = integrate_finite(
        [&](double l2) {
          return inner_weight(l1, h1, l2) * poly_eval_x2(f1, l2 * l2) *
                 poly_eval_x2(f2, l1 * l1);
        },
        0.0, cut, inner_spec);
    ok = ok && r.converged;
    return r.value;
  };
  QuadratureResult res = integrate_finite(outer, 0.0, cut, spec.quad);
  if (!res.converged || !ok)
    throw ConvergenceError("skew_product: quadrature did not converge");
  return res.value;
}

} // namespace rmtk
