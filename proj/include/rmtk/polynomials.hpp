#pragma once

#include <vector>

#include "rmtk/ensemble.hpp"

// Skew-orthogonal polynomial families q_j (degree j in x^2) and q~_j
// (degree j+1), their mu -> 0 and mu -> 1 limit forms, and the antisymmetric
// products they are orthogonal under. All polynomials are monic in x^2.

namespace rmtk {

struct PolynomialCoeffs {
  int degree = 0;                // degree in x^2
  std::vector<double> coeffs;    // ascending powers of x^2, coeffs.back() == 1
};

double poly_eval_x2(const PolynomialCoeffs& p, double x2);

// Finite Laguerre-sum construction, sign-normalized to monic.
PolynomialCoeffs poly_q(int j, const Coupling& c);

// Companion family; the free constant shifts q~_j by c_tilde * q_j and drops
// out of every antisymmetrized combination.
PolynomialCoeffs poly_q_tilde(int j, const Coupling& c, double c_tilde = 0.0);

// mu = 0: product of two half-integer Laguerre polynomials (equivalently a
// monic Hermite product), rendered monic.
PolynomialCoeffs q_limit_mu0(int j);

// mu = 1: (-2)^j j! L_j(x^2/2), manifestly monic.
PolynomialCoeffs q_limit_mu1(int j);

// Independent second construction of q: residue extraction from the
// generating-function contour form by truncated series expansion.
PolynomialCoeffs q_via_contour(int j, const Coupling& c);

enum class Parity { even, odd };

struct SkewProductSpec {
  Parity parity = Parity::even;  // even: weight G; odd: weight G-tilde
  Coupling coupling;
  QuadratureSpec quad;
};

// <f1|f2> = int int w(l1, l2) f1(l2^2) f2(l1^2) dl1 dl2, antisymmetric.
double skew_product(const PolynomialCoeffs& f1, const PolynomialCoeffs& f2,
                    const SkewProductSpec& spec);

} // namespace rmtk
