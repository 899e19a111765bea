#pragma once

#include <functional>

// Deterministic quadrature: globally adaptive bisection with 15-point
// Gauss-Legendre panels, two-estimate (split vs unsplit) error control and
// worst-panel-first refinement. Semi-infinite integrals are cut off where the
// caller-declared Gaussian envelope e^{-x^2/(2 s^2)} drops below 1e-18.

namespace rmtk {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 60;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  static Range finite(double a, double b) { return {a, b}; }
  // [0, cutoff(scale)] for integrands with a e^{-x^2/(2 scale^2)} envelope.
  static Range semi(double decay_scale = 1.0);
};

double semi_infinite_cutoff(double decay_scale = 1.0);

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureSpec& spec = {});

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec = {},
                                         double decay_scale = 1.0);

QuadratureResult integrate_2d(
    const std::function<double(double, double)>& f, const Range& x_range,
    const Range& y_range, const QuadratureSpec& spec = {});

// \int_0^pi tan(t) F(sin 2t, cos 2t) dt for F vanishing linearly in its first
// argument; evaluated through the substitution cos 2t = -cos psi, which turns
// the integrand into the analytic F(sin psi, -cos psi) cot(psi/2). Throws
// std::domain_error if F(0, -1) != 0 beyond tolerance (the tangent pole is
// then not removable).
QuadratureResult theta_integral(
    const std::function<double(double, double)>& F,
    const QuadratureSpec& spec = {});

} // namespace rmtk
