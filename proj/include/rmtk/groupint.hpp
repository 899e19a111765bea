#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "rmtk/quadrature.hpp"
#include "rmtk/rng.hpp"

// Unitary group integral over U(N) of
//   exp[ xi Tr(AU + U^dag B) + (1/2) Tr((AU)^2 + (U^dag B)^2) ],
// reduced to a Pfaffian of two-point weights B_xi with a bordered C_xi column
// for odd N, plus a Haar Monte Carlo oracle and the large-xi limit check.

namespace rmtk {

// Two-point weight B_xi(p, q), antisymmetric in (p, q). xi = 0 takes the
// single-theta-integral fast path; general xi the 2-D integral over
// [xi - cut, xi + cut]^2 whose x + y = 0 line is removable.
double weight_B(double xi, double p, double q, const QuadratureSpec& spec = {});

// One-point weight C_xi(a); closed Bessel form at xi = 0.
double weight_C(double xi, double a, const QuadratureSpec& spec = {});

// Full group integral for A = B = diag(a), a distinct nonnegative. The
// e^{-Tr a^2} prefactor is cancelled analytically against the weight growth
// at xi = 0 (diagonal rescaling of the Pfaffian).
double group_integral(const std::vector<double>& a, double xi,
                      const QuadratureSpec& spec = {});

// Monte Carlo mean and standard error of the defining Haar integral.
std::pair<double, double> mc_group_integral(const Eigen::MatrixXcd& A,
                                            const Eigen::MatrixXcd& B,
                                            double xi, long samples,
                                            RngStream& rng);

// Large-xi limit at N = 2 against the closed Bessel reference:
// evaluates xi^2 B_xi(m1/xi, m2/xi)/(4 pi (m1^2 - m2^2)) at xi = 20, 40, 80
// with Richardson extrapolation in 1/xi^2. Returns (extrapolated, reference).
std::pair<double, double> leutwyler_smilga_check(double m1, double m2);

} // namespace rmtk
