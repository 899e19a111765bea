#include <cmath>

#include <doctest.h>

#include "kernel_extended.hpp"
#include "rmtk/kernels.hpp"

using namespace rmtk;

TEST_SUITE("kernels") {

TEST_CASE("N = 2 polynomial kernel closed form") {
  const Coupling c = make_coupling(0.5);
  const KernelSet ks(2, c);
  const double denom = 4.0 * M_PI * c.mu * c.mu * (1.0 - c.mu * c.mu);
  for (double l1 : {0.4, 1.1})
    for (double l2 : {0.7, 1.9})
      CHECK(ks.K(l1, l2) ==
            doctest::Approx((l1 * l1 - l2 * l2) / denom).epsilon(1e-12));
}

TEST_CASE("level density normalizes to one") {
  for (int n : {2, 3}) {
    const Coupling c = make_coupling(0.5);
    const KernelSet ks(n, c);
    QuadratureSpec loose;
    loose.abs_tol = 1e-8;
    loose.rel_tol = 1e-7;
    const auto r = integrate_finite(
        [&](double l) { return ks.density(l); }, 0.0, semi_infinite_cutoff(),
        loose);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("one-point correlation equals the diagonal G kernel") {
  const Coupling c = make_coupling(0.5);
  const KernelSet ks(3, c);
  const double lam = 1.3;
  CHECK(correlation(ks, {lam}) ==
        doctest::Approx(ks.G(lam, lam)).epsilon(1e-12));
}

TEST_CASE("two-point correlation structure") {
  const Coupling c = make_coupling(0.5);
  const KernelSet ks(2, c);
  const double r12 = correlation(ks, {0.8, 1.6});
  const double r21 = correlation(ks, {1.6, 0.8});
  CHECK(r12 == doctest::Approx(r21).epsilon(1e-10));
  CHECK(correlation(ks, {1.1, 1.1}) == 0.0);
  CHECK(r12 > 0.0);
}

TEST_CASE("top-level correlation reproduces the joint density") {
  // R^(N) = N! jpdf, for both parities.
  const Coupling c = make_coupling(0.5);
  {
    const KernelSet ks(2, c);
    const double r = correlation(ks, {0.6, 1.1});
    CHECK(r == doctest::Approx(2.0 * jpdf({0.6, 1.1}, c)).epsilon(1e-9));
  }
  {
    const KernelSet ks(3, c);
    const double r = correlation(ks, {0.5, 1.0, 1.7});
    CHECK(r == doctest::Approx(6.0 * jpdf({0.5, 1.0, 1.7}, c)).epsilon(1e-7));
  }
}

TEST_CASE("W kernel against the literal double integral") {
  const Coupling c = make_coupling(0.5);
  const KernelSet ks(2, c);
  const double l1 = 0.7, l2 = 1.3;
  QuadratureSpec loose;
  loose.abs_tol = 1e-8;
  loose.rel_tol = 1e-7;
  const double cut = semi_infinite_cutoff();
  const auto dbl = integrate_2d(
      [&](double x1, double x2) {
        return weight_G(x1, l1, c, loose) * weight_G(x2, l2, c, loose) *
               ks.K(x1, x2);
      },
      Range::finite(0.0, cut), Range::finite(0.0, cut), loose);
  REQUIRE(dbl.converged);
  const double literal = -weight_G(l1, l2, c) - dbl.value;
  CHECK(ks.W(l1, l2) == doctest::Approx(literal).epsilon(1e-6));
  CHECK(ks.W(l2, l1) == doctest::Approx(-literal).epsilon(1e-6));
  CHECK(ks.W(l1, l1) == 0.0);
}

TEST_CASE("partition functions") {
  const Coupling c = make_coupling(0.5);
  CHECK(partition_Z01(2, c, 1.2) ==
        doctest::Approx(poly_eval_x2(poly_q(2, c), 1.44)).epsilon(1e-14));
  CHECK_THROWS_AS(partition_Z0f(2, c, {0.5, 0.5 + 1e-9}), DegenerateMassError);
  CHECK_THROWS_AS(partition_Z0f(2, c, {0.5, 1.0, 1.5}), std::invalid_argument);
  // Flavor factorization at wide mass separation is not exact at finite N;
  // just pin smoothness and positivity here.
  const double z = partition_Z0f(2, c, {0.5, 1.0});
  CHECK(std::isfinite(z));
  CHECK(z > 0.0);
}

TEST_CASE("extended-precision kernel path near the chGUE endpoint") {
  // Dispatch: only large N close to mu = 1 needs the long double path.
  CHECK(!detail::needs_extended_kernel(2, make_coupling(0.99)));
  CHECK(!detail::needs_extended_kernel(6, make_coupling(0.5)));
  CHECK(detail::needs_extended_kernel(6, make_coupling(0.9)));
  CHECK(detail::needs_extended_kernel(5, make_coupling(0.99)));

  // Where the double-precision quadrature is still trustworthy the two
  // evaluations must agree.
  for (auto [n, mu] : {std::pair{4, 0.9}, {5, 0.85}}) {
    const Coupling c = make_coupling(mu);
    REQUIRE(!detail::needs_extended_kernel(n, c));
    const KernelSet ks(n, c);
    for (double l : {0.5, 1.5, 3.0}) {
      const double ext = detail::kernel_G_extended(n, c, l, l);
      const double dbl = ks.G(l, l);
      CHECK(ext == doctest::Approx(dbl).epsilon(1e-9));
    }
  }
}

TEST_CASE("correlation input validation") {
  const Coupling c = make_coupling(0.5);
  const KernelSet ks(2, c);
  CHECK_THROWS_AS(correlation(ks, {}), std::invalid_argument);
  CHECK_THROWS_AS(correlation(ks, {0.5, 1.0, 1.5}), std::invalid_argument);
}

}
