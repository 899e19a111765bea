#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "rmtk/quadrature.hpp"

using namespace rmtk;

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre panel is exact for high-degree polynomials") {
  const auto r = integrate_finite([](double x) { return std::pow(x, 14); },
                                  0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("oscillatory finite integral") {
  const auto r = integrate_finite([](double x) { return std::sin(10.0 * x); },
                                  0.0, M_PI);
  CHECK(r.converged);
  CHECK(r.value ==
        doctest::Approx((1.0 - std::cos(10.0 * M_PI)) / 10.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite Gaussian") {
  const auto r = integrate_semi_infinite(
      [](double x) { return std::exp(-0.5 * x * x); });
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-12));
}

TEST_CASE("semi-infinite with explicit decay scale") {
  const double s = 3.0;
  const auto r = integrate_semi_infinite(
      [&](double x) { return std::exp(-0.5 * x * x / (s * s)); }, {}, s);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(s * std::sqrt(M_PI / 2.0)).epsilon(1e-12));
}

TEST_CASE("two-dimensional product integral") {
  const auto r = integrate_2d([](double x, double y) { return x * y; },
                              Range::finite(0.0, 1.0), Range::finite(0.0, 1.0));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("theta integral with removable tangent singularity") {
  // F(s, c) = s: int_0^pi tan(t) sin(2t) dt = pi.
  const auto r = theta_integral([](double s, double) { return s; });
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("theta integral rejects non-removable integrands") {
  const std::function<double(double, double)> bad = [](double, double c) {
    return c;
  };
  CHECK_THROWS_AS(theta_integral(bad), std::domain_error);
}

TEST_CASE("unreachable tolerance reports non-convergence") {
  QuadratureSpec tight;
  tight.abs_tol = 1e-30;
  tight.rel_tol = 1e-30;
  tight.max_subdivisions = 3;
  const auto r = integrate_finite(
      [](double x) { return std::sqrt(std::abs(x - 0.3141)); }, 0.0, 1.0,
      tight);
  CHECK_FALSE(r.converged);
}

}
