#pragma once

#include <vector>

#include "rmtk/ensemble.hpp"
#include "rmtk/polynomials.hpp"

// Correlation kernels K_N, G_N, W_N, the level density, k-point correlation
// Pfaffians, and fermionic partition functions at finite N.

namespace rmtk {

// Nearly coincident squared masses; confluent limits are out of scope.
struct DegenerateMassError : std::domain_error {
  using std::domain_error::domain_error;
};

class KernelSet {
 public:
  KernelSet(int n, const Coupling& c, const QuadratureSpec& quad = {});

  int n() const { return n_; }
  const Coupling& coupling() const { return c_; }
  const QuadratureSpec& quad() const { return quad_; }

  // Polynomial kernel sum over the parity-appropriate index set.
  double K(double l1, double l2) const;
  // int w(x, l1) K(x, l2) dx, plus the one-point term for odd n.
  double G(double l1, double l2) const;
  // -w(l1, l2) - int int w(x1, l1) w(x2, l2) K(x1, x2), evaluated through the
  // separable form of K (cross-checked against the literal 2-D quadrature in
  // the tests).
  double W(double l1, double l2) const;
  // rho_n(l) = G(l, l) / n, normalized to 1.
  double density(double lam) const;

  // Same sum as K but in the squared variables (a polynomial), used by the
  // partition functions at real masses.
  double K_poly(double x2, double y2) const;

 private:
  double weight(double x, double l, double h_l) const;
  double g_term(double l) const;
  double moment(double l, const PolynomialCoeffs& p, double h_l) const;

  int n_;
  Coupling c_;
  QuadratureSpec quad_;
  bool odd_;
  std::vector<PolynomialCoeffs> q_, qt_;
  std::vector<double> h_;
};

inline double kernel_K(const KernelSet& ks, double l1, double l2) {
  return ks.K(l1, l2);
}
inline double kernel_G(const KernelSet& ks, double l1, double l2) {
  return ks.G(l1, l2);
}
inline double kernel_W(const KernelSet& ks, double l1, double l2) {
  return ks.W(l1, l2);
}
inline double level_density(const KernelSet& ks, double lam) {
  return ks.density(lam);
}

// k-point correlation function R^(k), normalized so that R^(1) = G_N(l, l)
// integrates to N. Duplicate points return 0 (the analytic value).
double correlation(const KernelSet& ks, const std::vector<double>& points);

// One-flavor fermionic partition function: q_N evaluated at kappa^2.
double partition_Z01(int n, const Coupling& c, double kappa);

// k_f-flavor (even count) fermionic partition function via the Pfaffian of
// kernel entries at squared masses, divided by the mass Vandermonde.
double partition_Z0f(int n, const Coupling& c,
                     const std::vector<double>& masses,
                     const QuadratureSpec& quad = {});

} // namespace rmtk
