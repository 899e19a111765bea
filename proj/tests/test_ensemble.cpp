#include <cmath>

#include <doctest.h>

#include "rmtk/ensemble.hpp"

using namespace rmtk;

TEST_SUITE("ensemble") {

TEST_CASE("coupling constants") {
  for (double mu : {0.05, 0.1, 0.5, 0.9, 1.0}) {
    const Coupling c = make_coupling(mu);
    CHECK(c.eta_plus - c.eta_minus == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c.eta_plus ==
          doctest::Approx((1.0 + mu * mu) / (4.0 * mu * mu)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(make_coupling(0.0), std::domain_error);
  CHECK_THROWS_AS(make_coupling(-0.5), std::domain_error);
  CHECK_THROWS_AS(make_coupling(1.5), std::domain_error);
}

TEST_CASE("one-point weight integrates to gbar") {
  for (double mu : {0.05, 0.5, 1.0}) {
    const Coupling c = make_coupling(mu);
    const auto r = integrate_semi_infinite(
        [&](double l) { return weight_g(l, c); });
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(gbar(c)).epsilon(1e-10));
    CHECK(gbar(c) == doctest::Approx(2.0 * std::sqrt(M_PI) * mu));
  }
}

TEST_CASE("two-point weight antisymmetry") {
  const Coupling c = make_coupling(0.5);
  CHECK(weight_G(1.3, 0.4, c) == doctest::Approx(-weight_G(0.4, 1.3, c)));
  CHECK(weight_G(0.9, 0.9, c) == 0.0);
}

TEST_CASE("H equals the one-sided integral of G") {
  const Coupling c = make_coupling(0.5);
  for (double lam : {0.6, 1.2}) {
    const auto r = integrate_semi_infinite(
        [&](double x) { return weight_G(x, lam, c); });
    CHECK(r.converged);
    CHECK(weight_H(lam, c) == doctest::Approx(r.value).epsilon(1e-7));
  }
}

TEST_CASE("reduced two-point weight has null one-sided integral") {
  const Coupling c = make_coupling(0.3);
  const auto r = integrate_semi_infinite(
      [&](double x) { return weight_Gtilde(x, 1.1, c); });
  CHECK(r.converged);
  CHECK(std::abs(r.value) < 1e-7);
}

TEST_CASE("normalization constants and h") {
  const Coupling c = make_coupling(0.5);
  CHECK(norm_constant(1, c) == doctest::Approx(1.0 / gbar(c)).epsilon(1e-14));
  // h_0 = 4 pi mu^2 (1 - mu^2) = 3 pi / 4 at mu = 1/2.
  CHECK(h_norm(0, c) == doctest::Approx(0.75 * M_PI).epsilon(1e-14));
  // h_j = C_j / C_{j+2}.
  for (int j : {0, 1, 3}) {
    const double ratio =
        std::exp(log_norm_constant(j, c) - log_norm_constant(j + 2, c));
    CHECK(h_norm(j, c) == doctest::Approx(ratio).epsilon(1e-12));
  }
  const Coupling c1 = make_coupling(1.0);
  CHECK_THROWS_AS(norm_constant(2, c1), DegenerateEndpointError);
  CHECK_THROWS_AS(h_norm(0, c1), DegenerateEndpointError);
}

TEST_CASE("joint density at N = 1") {
  const Coupling c = make_coupling(0.5);
  for (double lam : {0.3, 1.0, 2.2})
    CHECK(jpdf({lam}, c) ==
          doctest::Approx(weight_g(lam, c) / gbar(c)).epsilon(1e-12));
}

TEST_CASE("joint density vanishes on ties and is symmetric") {
  const Coupling c = make_coupling(0.5);
  CHECK(jpdf({1.0, 1.0}, c) == 0.0);
  CHECK(jpdf({0.7, 1.4}, c) == doctest::Approx(jpdf({1.4, 0.7}, c)));
  CHECK(jpdf({0.7, 1.4}, c) > 0.0);
}

TEST_CASE("joint density normalization at N = 2") {
  const Coupling c = make_coupling(0.5);
  QuadratureSpec loose;
  loose.abs_tol = 1e-7;
  loose.rel_tol = 1e-6;
  const double cut = semi_infinite_cutoff();
  const auto r = integrate_2d(
      [&](double x, double y) { return jpdf({x, y}, c, loose); },
      Range::finite(0.0, cut), Range::finite(0.0, cut), loose);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-5));
}

}
