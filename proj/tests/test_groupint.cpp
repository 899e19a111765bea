#include <cmath>

#include <doctest.h>

#include "rmtk/groupint.hpp"
#include "rmtk/specfun.hpp"

using namespace rmtk;

TEST_SUITE("groupint") {

TEST_CASE("two-point weight antisymmetry") {
  CHECK(weight_B(0.0, 0.5, 1.0) == doctest::Approx(-weight_B(0.0, 1.0, 0.5)));
  CHECK(weight_B(0.0, 0.7, 0.7) == 0.0);
  CHECK(weight_B(0.3, 0.5, 1.0) == doctest::Approx(-weight_B(0.3, 1.0, 0.5)));
}

TEST_CASE("theta form matches the two-dimensional form at vanishing shift") {
  // xi = 0 routes through the single theta integral; a negligible shift
  // forces the general 2-D path over the same domain.
  const double fast = weight_B(0.0, 0.5, 1.0);
  const double slow = weight_B(1e-12, 0.5, 1.0);
  CHECK(fast == doctest::Approx(-38.8807).epsilon(1e-3));
  CHECK(slow == doctest::Approx(fast).epsilon(1e-5));
}

TEST_CASE("one-point weight closed form at vanishing shift") {
  const double a = 0.8;
  const double closed = weight_C(0.0, a);
  CHECK(closed == doctest::Approx(2.0 * std::sqrt(M_PI) * std::exp(a * a) *
                                  bessel_i0_scaled(a * a) * std::exp(a * a))
                      .epsilon(1e-12));
  CHECK(weight_C(1e-12, a) == doctest::Approx(closed).epsilon(1e-8));
}

TEST_CASE("group integral closed form at N = 1") {
  for (double a : {0.3, 0.8, 1.4}) {
    const double i0 = bessel_i0_scaled(a * a) * std::exp(a * a);
    CHECK(group_integral({a}, 0.0) == doctest::Approx(i0).epsilon(1e-10));
  }
}

TEST_CASE("group integral against the Haar oracle") {
  const std::vector<double> a = {0.4, 0.9};
  const double analytic = group_integral(a, 0.0);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2, 2);
  A(0, 0) = a[0];
  A(1, 1) = a[1];
  RngStream rng(2024, 0);
  const auto [mean, se] = mc_group_integral(A, A, 0.0, 40000, rng);
  CHECK(std::abs(mean - analytic) < 4.0 * se);
}

TEST_CASE("degenerate arguments rejected") {
  CHECK_THROWS_AS(group_integral({0.5, 0.5}, 0.0), std::domain_error);
  CHECK_THROWS_AS(group_integral({}, 0.0), std::invalid_argument);
}

TEST_CASE("large-shift limit hits the Bessel reference") {
  const auto [extrap, ref] = leutwyler_smilga_check(0.4, 0.9);
  CHECK(ref > 0.0);
  CHECK(extrap == doctest::Approx(ref).epsilon(1e-3));
}

}
