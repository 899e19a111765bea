#include "rmtk/kernels.hpp"

#include <cmath>

#include "kernel_extended.hpp"
#include "rmtk/linalg.hpp"
#include "rmtk/specfun.hpp"

namespace rmtk {

KernelSet::KernelSet(int n, const Coupling& c, const QuadratureSpec& quad)
    : n_(n), c_(c), quad_(quad), odd_(n % 2 != 0) {
  if (n < 1) throw std::invalid_argument("KernelSet: n < 1");
  const int first = odd_ ? 1 : 0;
  for (int j = first; j <= n - 2; j += 2) {
    q_.push_back(poly_q(j, c_));
    qt_.push_back(poly_q_tilde(j, c_));
    h_.push_back(h_norm(j, c_));
  }
}

double KernelSet::K_poly(double x2, double y2) const {
  double s = 0.0;
  for (std::size_t j = 0; j < q_.size(); ++j)
    s += (poly_eval_x2(q_[j], y2) * poly_eval_x2(qt_[j], x2) -
          poly_eval_x2(q_[j], x2) * poly_eval_x2(qt_[j], y2)) /
         h_[j];
  return s;
}

double KernelSet::K(double l1, double l2) const {
  return K_poly(l1 * l1, l2 * l2);
}

double KernelSet::g_term(double l) const {
  return l / c_.mu * std::exp(-0.5 * l * l) *
         bessel_i0_scaled(c_.eta_minus * l * l);
}

double KernelSet::weight(double x, double l, double h_l) const {
  double w = weight_G(x, l, c_, quad_);
  if (odd_) {
    const double gb = gbar(c_);
    w += -weight_g(x, c_) * h_l / gb +
         weight_H(x, c_, quad_) * weight_g(l, c_) / gb;
  }
  return w;
}

double KernelSet::G(double l1, double l2) const {
  // Near mu = 1 the h_j shrink like (1-mu^2)^{2j+1} and the double-precision
  // quadrature loses the kernel sum to cancellation; switch to the
  // long double fixed-panel evaluation.
  if (detail::needs_extended_kernel(n_, c_))
    return detail::kernel_G_extended(n_, c_, l1, l2);
  double v = odd_ ? g_term(l1) : 0.0;
  if (q_.empty()) return v;
  const double h_l1 = odd_ ? weight_H(l1, c_, quad_) : 0.0;
  QuadratureResult r = integrate_semi_infinite(
      [&](double x) { return weight(x, l1, h_l1) * K_poly(x * x, l2 * l2); },
      quad_);
  if (!r.converged) throw ConvergenceError("kernel_G: quadrature failed");
  return v + r.value;
}

double KernelSet::moment(double l, const PolynomialCoeffs& p,
                         double h_l) const {
  QuadratureResult r = integrate_semi_infinite(
      [&](double x) { return weight(x, l, h_l) * poly_eval_x2(p, x * x); },
      quad_);
  if (!r.converged) throw ConvergenceError("kernel_W: quadrature failed");
  return r.value;
}

double KernelSet::W(double l1, double l2) const {
  if (l1 == l2) return 0.0;
  const double h1 = odd_ ? weight_H(l1, c_, quad_) : 0.0;
  const double h2 = odd_ ? weight_H(l2, c_, quad_) : 0.0;
  double w = odd_ ? weight_Gtilde(l1, l2, c_, quad_)
                  : weight_G(l1, l2, c_, quad_);
  double sum = 0.0;
  for (std::size_t j = 0; j < q_.size(); ++j) {
    const double mq1 = moment(l1, q_[j], h1);
    const double mq2 = moment(l2, q_[j], h2);
    const double mt1 = moment(l1, qt_[j], h1);
    const double mt2 = moment(l2, qt_[j], h2);
    sum += (mt1 * mq2 - mq1 * mt2) / h_[j];
  }
  return -w - sum;
}

double KernelSet::density(double lam) const { return G(lam, lam) / n_; }

double correlation(const KernelSet& ks, const std::vector<double>& points) {
  const int k = static_cast<int>(points.size());
  if (k < 1) throw std::invalid_argument("correlation: no points");
  if (k > ks.n()) throw std::invalid_argument("correlation: k > N");
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (points[a] == points[b]) return 0.0;

  if (k == 1) return ks.G(points[0], points[0]);

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * k, 2 * k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      M(a, b) = ks.W(points[a], points[b]);
      M(b, a) = -M(a, b);
    }
  for (int a = 0; a < k; ++a)
    for (int cidx = 0; cidx < k; ++cidx) {
      M(a, k + cidx) = ks.G(points[a], points[cidx]);
      M(k + cidx, a) = -M(a, k + cidx);
    }
  for (int d = 0; d < k; ++d)
    for (int cidx = d + 1; cidx < k; ++cidx) {
      M(k + d, k + cidx) = ks.K(points[cidx], points[d]);
      M(k + cidx, k + d) = -M(k + d, k + cidx);
    }
  return pfaffian<double>(M);
}

double partition_Z01(int n, const Coupling& c, double kappa) {
  return poly_eval_x2(poly_q(n, c), kappa * kappa);
}

double partition_Z0f(int n, const Coupling& c,
                     const std::vector<double>& masses,
                     const QuadratureSpec& quad) {
  const int kf = static_cast<int>(masses.size());
  if (kf < 2 || kf % 2 != 0)
    throw std::invalid_argument("partition_Z0f: need an even number >= 2 of masses");
  std::vector<double> m2(kf);
  for (int i = 0; i < kf; ++i) m2[i] = masses[i] * masses[i];
  for (int a = 0; a < kf; ++a)
    for (int b = a + 1; b < kf; ++b)
      if (std::abs(m2[a] - m2[b]) < 1e-8)
        throw DegenerateMassError(
            "partition_Z0f: nearly degenerate squared masses");

  const KernelSet ks(n + kf, c, quad);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(kf, kf);
  for (int cc = 0; cc < kf; ++cc)
    for (int d = cc + 1; d < kf; ++d) {
      M(cc, d) = ks.K_poly(m2[d], m2[cc]);
      M(d, cc) = -M(cc, d);
    }
  double vand = 1.0;
  for (int a = 0; a < kf; ++a)
    for (int b = a + 1; b < kf; ++b) vand *= m2[b] - m2[a];
  const double cratio =
      std::exp(log_norm_constant(n, c) - log_norm_constant(n + kf, c));
  return cratio * pfaffian<double>(M) / vand;
}

} // namespace rmtk
