#include "rmtk/ensemble.hpp"

#include <algorithm>
#include <cmath>

#include "rmtk/linalg.hpp"
#include "rmtk/specfun.hpp"

namespace rmtk {

namespace {

const double kSqrtPi = std::sqrt(M_PI);

// sinh(x) e^{-|x|} = sign(x) (1 - e^{-2|x|}) / 2
double sinh_scaled(double x) {
  const double v = 0.5 * (1.0 - std::exp(-2.0 * std::abs(x)));
  return x < 0.0 ? -v : v;
}

void check(const QuadratureResult& r, const char* what) {
  if (!r.converged) throw ConvergenceError(what);
}

// The theta integrals are cheap one-dimensional Bessel integrands but their
// results feed outer adaptive quadratures; keeping them near machine accuracy
// stops those outer integrals from resolving the inner noise floor. The
// absolute tolerance must track the integrand's natural magnitude `scale`
// (= e^{-(l1^2+l2^2)/2} for the two-point weight): the kernel x-integrals
// multiply these weights by polynomially huge K values at large argument, so
// a flat absolute floor would turn exponentially small weights into noise
// that the polynomial growth then amplifies.
QuadratureSpec tight_theta(QuadratureSpec spec, double scale) {
  spec.abs_tol = std::min(spec.abs_tol, 1e-13 * scale);
  // Small mu concentrates the integrand into an O(mu)-wide peak; the panel
  // count then scales like 1/mu and the rounding floor of the summed panel
  // deltas sits near 1e-12 relative, so 1e-12 itself is not reliably
  // reachable there. 1e-11 is, and is ~1000x tighter than the callers need.
  spec.rel_tol = std::min(spec.rel_tol, 1e-11);
  return spec;
}

} // namespace

Coupling make_coupling(double mu) {
  if (!(mu > 0.0) || !(mu <= 1.0))
    throw std::domain_error(
        "make_coupling: mu must lie in (0, 1]; the model's mu -> -mu and "
        "mu -> 1/mu symmetries reduce the parameter range to [0, 1]");
  const double m2 = mu * mu;
  return {mu, (1.0 + m2) / (4.0 * m2), (1.0 - m2) / (4.0 * m2)};
}

double weight_g(double lam, const Coupling& c) {
  // e^{-eta+ l^2} I0(eta- l^2) = e^{-l^2/2} [e^{-x} I0(x)] with x = eta- l^2.
  return 2.0 * kSqrtPi * lam * std::exp(-0.5 * lam * lam) *
         bessel_i0_scaled(c.eta_minus * lam * lam);
}

double weight_G(double l1, double l2, const Coupling& c,
                const QuadratureSpec& spec) {
  if (l1 == l2) return 0.0;
  const double A = c.eta_minus * (l1 * l1 - l2 * l2);
  const double B = 2.0 * c.eta_minus * l1 * l2;
  const double E0 = -c.eta_plus * (l1 * l1 + l2 * l2);
  // max over theta of |A sin| + |B cos| is eta- (l1^2 + l2^2), so the
  // integrand peaks at e^{-(l1^2 + l2^2)/2}.
  const double peak = std::exp(-0.5 * (l1 * l1 + l2 * l2));
  auto F = [&](double s, double co) {
    const double as = A * s;
    const double bc = B * co;
    // Combined exponent is bounded by -(l1^2 + l2^2)/2.
    return sinh_scaled(as) * bessel_i0_scaled(bc) *
           std::exp(E0 + std::abs(as) + std::abs(bc));
  };
  QuadratureResult r = theta_integral(F, tight_theta(spec, peak));
  check(r, "weight_G: theta integral did not converge");
  return 4.0 * l1 * l2 * r.value;
}

double weight_H(double lam, const Coupling& c, const QuadratureSpec& spec) {
  const double l2 = lam * lam;
  const double ep = c.eta_plus, em = c.eta_minus;
  auto F = [&](double s, double) {
    const double d1 = ep - em * s;
    const double d2 = ep + em * s;
    const double r1 = (em - ep * s) / d1;
    const double r2 = (em + ep * s) / d2;
    // r1,2 <= 1, so both exponents are <= -l^2/2.
    return std::exp((r1 * em - ep) * l2) / d1 -
           std::exp((r2 * em - ep) * l2) / d2;
  };
  // Both exponents are <= -l^2/2, so that sets the integrand's scale.
  QuadratureResult r =
      theta_integral(F, tight_theta(spec, std::exp(-0.5 * l2)));
  check(r, "weight_H: theta integral did not converge");
  return lam * r.value;
}

double weight_Gtilde(double l1, double l2, const Coupling& c,
                     const QuadratureSpec& spec) {
  const double gb = gbar(c);
  return weight_G(l1, l2, c, spec) - weight_g(l1, c) * weight_H(l2, c, spec) / gb +
         weight_H(l1, c, spec) * weight_g(l2, c) / gb;
}

double gbar(const Coupling& c) { return 2.0 * kSqrtPi * c.mu; }

double log_norm_constant(int N, const Coupling& c) {
  if (N < 0) throw std::invalid_argument("log_norm_constant: N < 0");
  if (c.mu == 1.0 && N >= 2)
    throw DegenerateEndpointError(
        "norm_constant: C_N diverges at mu = 1; use the mu -> 1 limit "
        "routines");
  const double log1m = N >= 2 ? std::log1p(-c.mu * c.mu) : 0.0;
  double s = 0.0;
  for (int j = 0; j < N; ++j)
    s -= std::log(2.0 * kSqrtPi * c.mu) + j * log1m + std::lgamma(j + 1.0);
  return s;
}

double norm_constant(int N, const Coupling& c) {
  return std::exp(log_norm_constant(N, c));
}

double h_norm(int j, const Coupling& c) {
  if (j < 0) throw std::invalid_argument("h_norm: j < 0");
  if (c.mu == 1.0)
    throw DegenerateEndpointError(
        "h_norm: h_j vanishes at mu = 1; use the mu -> 1 limit routines");
  const double om = 1.0 - c.mu * c.mu;
  return 4.0 * M_PI * c.mu * c.mu * std::pow(om, 2 * j + 1) *
         std::tgamma(j + 1.0) * std::tgamma(j + 2.0);
}

double jpdf(const std::vector<double>& lam, const Coupling& c,
            const QuadratureSpec& spec) {
  const int N = static_cast<int>(lam.size());
  if (N < 1) throw std::invalid_argument("jpdf: empty spectrum");
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (lam[a] == lam[b]) return 0.0;

  double vand = 1.0;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      vand *= lam[b] * lam[b] - lam[a] * lam[a];

  Eigen::MatrixXd M;
  if (N % 2 == 0) {
    M = Eigen::MatrixXd::Zero(N, N);
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) {
        M(a, b) = weight_G(lam[b], lam[a], c, spec);
        M(b, a) = -M(a, b);
      }
  } else {
    M = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int a = 0; a < N; ++a) {
      for (int b = a + 1; b < N; ++b) {
        M(a, b) = weight_Gtilde(lam[b], lam[a], c, spec);
        M(b, a) = -M(a, b);
      }
      M(a, N) = weight_g(lam[a], c);
      M(N, a) = -M(a, N);
    }
  }
  const double pf = pfaffian<double>(M);
  return norm_constant(N, c) / std::tgamma(N + 1.0) * vand * pf;
}

} // namespace rmtk
