#pragma once

// Scaled special functions. All Bessel access goes through the scaled forms
// e^{-|x|} I_nu(x); the unscaled functions overflow for the argument ranges
// that appear at small coupling (exponents up to ~3000).

namespace rmtk {

// e^{-|x|} I_0(x); strictly positive, <= 1, even in x.
double bessel_i0_scaled(double x);

// e^{-|x|} I_1(x); odd in x.
double bessel_i1_scaled(double x);

// Generalized Laguerre polynomial L_n^{(alpha)}(y), forward recurrence.
double laguerre(int n, double alpha, double y);

// Monic (probabilists') Hermite polynomial He_n(x).
double hermite_monic(int n, double x);

} // namespace rmtk
