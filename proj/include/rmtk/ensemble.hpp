#pragma once

#include <stdexcept>
#include <vector>

#include "rmtk/quadrature.hpp"

// Coupling constants, normalization constants, the one-/two-point Pfaffian
// weights g, G, H, G-tilde, and the joint singular-value density at finite N.

namespace rmtk {

// Quadrature failed to reach its tolerance inside an analytic evaluation.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mu = 1 endpoint where C_N diverges and h_j vanishes; use the limit routines.
struct DegenerateEndpointError : std::domain_error {
  using std::domain_error::domain_error;
};

struct Coupling {
  double mu = 0.0;
  double eta_plus = 0.0;   // (1 + mu^2) / (4 mu^2)
  double eta_minus = 0.0;  // (1 - mu^2) / (4 mu^2); eta_plus - eta_minus = 1/2
};

// mu must lie in (0, 1]; the model's symmetry folds everything else onto it.
Coupling make_coupling(double mu);

// One-point weight g(l) = 2 sqrt(pi) l e^{-eta+ l^2} I0(eta- l^2).
double weight_g(double lam, const Coupling& c);

// Two-point weight G(l1, l2): antisymmetric theta-integral form, evaluated
// with a combined exponent so no factor overflows at small mu.
double weight_G(double l1, double l2, const Coupling& c,
                const QuadratureSpec& spec = {});

// H(l) = int_0^inf G(x, l) dx in its closed single-theta-integral form.
double weight_H(double lam, const Coupling& c,
                const QuadratureSpec& spec = {});

// G-tilde(l1, l2) = G(l1, l2) - g(l1) H(l2)/gbar + H(l1) g(l2)/gbar;
// satisfies int_0^inf G-tilde(x, l) dx = 0.
double weight_Gtilde(double l1, double l2, const Coupling& c,
                     const QuadratureSpec& spec = {});

// gbar = int_0^inf g(l) dl = 2 sqrt(pi) mu = 1/C_1.
double gbar(const Coupling& c);

// log C_N with C_N = prod_{j=0}^{N-1} 1 / (2 sqrt(pi) mu (1-mu^2)^j j!).
double log_norm_constant(int N, const Coupling& c);
double norm_constant(int N, const Coupling& c);

// h_j = C_j / C_{j+2} = 4 pi mu^2 (1-mu^2)^{2j+1} j! (j+1)!.
double h_norm(int j, const Coupling& c);

// Joint probability density of the N singular values (symmetric, normalized
// to 1 over the full positive orthant). Tied inputs return 0 exactly.
double jpdf(const std::vector<double>& lam, const Coupling& c,
            const QuadratureSpec& spec = {});

struct WeightSet {
  Coupling coupling;
  QuadratureSpec quad;

  double g(double lam) const { return weight_g(lam, coupling); }
  double G(double l1, double l2) const {
    return weight_G(l1, l2, coupling, quad);
  }
  double H(double lam) const { return weight_H(lam, coupling, quad); }
  double Gtilde(double l1, double l2) const {
    return weight_Gtilde(l1, l2, coupling, quad);
  }
};

} // namespace rmtk
