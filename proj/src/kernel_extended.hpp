#pragma once

// Extended-precision (long double) evaluation of the one-point kernel sum,
// used near the mu -> 1 endpoint where h_j ~ (1 - mu^2)^{2j+1} makes the
// double-precision polynomial sum lose up to (1 - mu^2)^{-2(N-2)} digits to
// cancellation. Internal to the library; not part of the public API.

#include "rmtk/ensemble.hpp"

namespace rmtk::detail {

// True when the double-precision kernel quadratures can no longer reach
// 1e-5-level accuracy for this (N, mu).
bool needs_extended_kernel(int n, const Coupling& c);

// G_N(l1, l2) evaluated with long double weights, polynomial coefficients,
// and fixed-panel Gauss-Legendre quadrature.
double kernel_G_extended(int n, const Coupling& c, double l1, double l2);

} // namespace rmtk::detail
