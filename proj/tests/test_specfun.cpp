#include <cmath>
#include <initializer_list>

#include <doctest.h>

#include "rmtk/specfun.hpp"

using namespace rmtk;

TEST_SUITE("specfun") {

TEST_CASE("scaled I0 against tabulated values") {
  CHECK(bessel_i0_scaled(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bessel_i0_scaled(1.0) * std::exp(1.0) ==
        doctest::Approx(1.2660658777520084).epsilon(1e-14));
  // Large argument: I0(x) ~ e^x / sqrt(2 pi x).
  const double x = 500.0;
  CHECK(bessel_i0_scaled(x) * std::sqrt(2.0 * M_PI * x) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(bessel_i0_scaled(-3.0) == bessel_i0_scaled(3.0));
}

TEST_CASE("scaled I1 against tabulated values") {
  CHECK(bessel_i1_scaled(0.0) == doctest::Approx(0.0));
  CHECK(bessel_i1_scaled(1.0) * std::exp(1.0) ==
        doctest::Approx(0.5651591039924851).epsilon(1e-14));
  CHECK(bessel_i1_scaled(-2.0) == -bessel_i1_scaled(2.0));
}

TEST_CASE("series and asymptotic branches agree at the crossover") {
  // Reference values straddle the branch switch at |x| = 18.
  CHECK(bessel_i0_scaled(17.999999999) ==
        doctest::Approx(0.094706295215433596).epsilon(1e-13));
  CHECK(bessel_i0_scaled(18.000000001) ==
        doctest::Approx(0.094706295210094599).epsilon(1e-13));
  CHECK(bessel_i1_scaled(17.999999999) ==
        doctest::Approx(0.092036796874464234).epsilon(1e-13));
  CHECK(bessel_i1_scaled(18.000000001) ==
        doctest::Approx(0.092036796869576919).epsilon(1e-13));
}

TEST_CASE("Laguerre recurrence") {
  const double y = 1.7;
  CHECK(laguerre(0, 0.0, y) == doctest::Approx(1.0));
  CHECK(laguerre(1, 0.0, y) == doctest::Approx(1.0 - y));
  CHECK(laguerre(2, 0.0, y) ==
        doctest::Approx(1.0 - 2.0 * y + 0.5 * y * y).epsilon(1e-14));
  CHECK(laguerre(1, 0.5, y) == doctest::Approx(1.5 - y).epsilon(1e-14));
}

TEST_CASE("monic Hermite") {
  const double x = 0.9;
  CHECK(hermite_monic(0, x) == doctest::Approx(1.0));
  CHECK(hermite_monic(1, x) == doctest::Approx(x));
  CHECK(hermite_monic(2, x) == doctest::Approx(x * x - 1.0).epsilon(1e-14));
  CHECK(hermite_monic(3, x) ==
        doctest::Approx(x * x * x - 3.0 * x).epsilon(1e-14));
}

}
