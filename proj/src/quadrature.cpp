#include "rmtk/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <queue>
#include <vector>

namespace rmtk {

namespace {

struct Node {
  double x, w;
};

constexpr Node kGL15[15] = {
    {-9.87992518020485377e-01, 3.07532419961186465e-02},
    {-9.37273392400705951e-01, 7.03660474881080689e-02},
    {-8.48206583410427206e-01, 1.07159220467171773e-01},
    {-7.24417731360170070e-01, 1.39570677926153908e-01},
    {-5.70972172608538830e-01, 1.66269205816993781e-01},
    {-3.94151347077563385e-01, 1.86161000015561878e-01},
    {-2.01194093997434514e-01, 1.98431485327111246e-01},
    {0.00000000000000000e+00, 2.02578241925560898e-01},
    {2.01194093997434514e-01, 1.98431485327111246e-01},
    {3.94151347077563385e-01, 1.86161000015561878e-01},
    {5.70972172608538830e-01, 1.66269205816993781e-01},
    {7.24417731360170070e-01, 1.39570677926153908e-01},
    {8.48206583410427206e-01, 1.07159220467171773e-01},
    {9.37273392400705951e-01, 7.03660474881080689e-02},
    {9.87992518020485377e-01, 3.07532419961186465e-02},
};

double gl15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (const auto& n : kGL15) s += n.w * f(c + h * n.x);
  return s * h;
}

// Globally adaptive panel: the [a, b] coarse estimate plus the two half
// estimates give both the refined value (left + right) and the local error
// surrogate |left + right - coarse|. Panels are refined worst-first so steep
// but harmless tails (tiny deltas) never starve genuinely unresolved regions
// of the subdivision budget.
struct Panel {
  double a, b, coarse, left, right;
  int depth;
  double refined() const { return left + right; }
  double delta() const { return std::abs(refined() - coarse); }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b,
                 double coarse, int depth) {
  const double m = 0.5 * (a + b);
  return {a, b, coarse, gl15(f, a, m), gl15(f, m, b), depth};
}

struct PanelOrder {
  bool operator()(const Panel& p, const Panel& q) const {
    return p.delta() < q.delta();
  }
};

} // namespace

double semi_infinite_cutoff(double decay_scale) {
  // e^{-x^2/(2 s^2)} = 1e-18  =>  x = s sqrt(36 ln 10)
  return decay_scale * std::sqrt(36.0 * std::log(10.0));
}

Range Range::semi(double decay_scale) {
  return {0.0, semi_infinite_cutoff(decay_scale)};
}

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureSpec& spec) {
  if (!(a < b)) return {0.0, 0.0, true};
  // Split budget: past it the remaining deltas are booked as error and the
  // convergence check reports the failure promptly instead of grinding.
  constexpr long kSplitBudget = 20000;
  const double span = b - a;
  const double width_floor = 1e-10 * span;

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> active;
  std::vector<Panel> frozen;  // width/depth-limited; no further refinement
  double value = 0.0, err = 0.0;

  const Panel root = make_panel(f, a, b, gl15(f, a, b), 0);
  value += root.refined();
  err += root.delta();
  active.push(root);

  for (long splits = 0; !active.empty() && splits < kSplitBudget; ++splits) {
    if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) break;
    const Panel worst = active.top();
    active.pop();
    if (worst.depth >= spec.max_subdivisions ||
        worst.b - worst.a <= width_floor) {
      frozen.push_back(worst);  // keeps its delta in the error budget
      continue;
    }
    value -= worst.refined();
    err -= worst.delta();
    const double m = 0.5 * (worst.a + worst.b);
    for (const Panel& child :
         {make_panel(f, worst.a, m, worst.left, worst.depth + 1),
          make_panel(f, m, worst.b, worst.right, worst.depth + 1)}) {
      value += child.refined();
      err += child.delta();
      active.push(child);
    }
  }

  QuadratureResult res;
  res.value = value;
  res.error_estimate = err;
  res.converged =
      err <= 2.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
  return res;
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec,
                                         double decay_scale) {
  return integrate_finite(f, 0.0, semi_infinite_cutoff(decay_scale), spec);
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const Range& x_range, const Range& y_range,
                              const QuadratureSpec& spec) {
  QuadratureSpec inner = spec;
  inner.abs_tol = 0.1 * spec.abs_tol;
  inner.rel_tol = 0.1 * spec.rel_tol;
  double inner_err = 0.0;
  bool inner_ok = true;
  auto outer = [&](double x) {
    QuadratureResult r = integrate_finite(
        [&](double y) { return f(x, y); }, y_range.lo, y_range.hi, inner);
    inner_err = std::max(inner_err, r.error_estimate);
    inner_ok = inner_ok && r.converged;
    return r.value;
  };
  QuadratureResult res =
      integrate_finite(outer, x_range.lo, x_range.hi, spec);
  res.error_estimate += inner_err * (x_range.hi - x_range.lo);
  res.converged = res.converged && inner_ok;
  return res;
}

QuadratureResult theta_integral(
    const std::function<double(double, double)>& F,
    const QuadratureSpec& spec) {
  // Substituting cos 2theta = -cos psi turns the tan(theta)-weighted integral
  // over [0, pi] into Int_0^pi F(sin psi, -cos psi) cot(psi/2) dpsi. The
  // integrand is analytic on the whole closed interval: F must vanish at a
  // zero first argument (checked below), which makes the psi -> 0 endpoint
  // removable, and the tan(theta) pole disappears entirely.
  const double probe =
      std::abs(F(2.0e-4, -1.0)) + std::abs(F(-2.0e-4, -1.0));
  if (std::abs(F(0.0, -1.0)) > 1e-8 * std::max(1.0, probe))
    throw std::domain_error(
        "theta_integral: integrand singularity at theta = pi/2 is not removable");

  auto h = [&](double psi) {
    return F(std::sin(psi), -std::cos(psi)) / std::tan(0.5 * psi);
  };
  return integrate_finite(h, 0.0, M_PI, spec);
}

} // namespace rmtk
