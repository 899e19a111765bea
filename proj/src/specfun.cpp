#include "rmtk/specfun.hpp"

#include <cmath>

namespace rmtk {

namespace {

// Power series branch below, asymptotic branch above. At the crossover the
// two branches agree to better than 1e-13.
constexpr double kBesselCrossover = 18.0;

double i0_series_scaled(double ax) {
  double term = 1.0, sum = 1.0;
  const double q = 0.25 * ax * ax;
  for (int k = 1; k < 80; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum * std::exp(-ax);
}

double i1_series_scaled(double ax) {
  double term = 0.5 * ax, sum = term;
  const double q = 0.25 * ax * ax;
  for (int k = 1; k < 80; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum * std::exp(-ax);
}

// e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(nu)/x^k, truncated at the
// smallest term.
double i_asymptotic_scaled(double ax, double mu4nu2) {
  double term = 1.0, sum = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double num = mu4nu2 - (2.0 * k - 1.0) * (2.0 * k - 1.0);
    term *= -num / (8.0 * k * ax);
    if (std::abs(term) >= std::abs(prev)) break;
    sum += term;
    prev = term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * M_PI * ax);
}

} // namespace

double bessel_i0_scaled(double x) {
  const double ax = std::abs(x);
  if (ax < kBesselCrossover) return i0_series_scaled(ax);
  return i_asymptotic_scaled(ax, 0.0);
}

double bessel_i1_scaled(double x) {
  const double ax = std::abs(x);
  const double v = ax < kBesselCrossover ? i1_series_scaled(ax)
                                         : i_asymptotic_scaled(ax, 4.0);
  return x < 0.0 ? -v : v;
}

double laguerre(int n, double alpha, double y) {
  if (n <= 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - y;
  for (int k = 1; k < n; ++k) {
    const double lp1 =
        ((2.0 * k + 1.0 + alpha - y) * l - (k + alpha) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

double hermite_monic(int n, double x) {
  if (n <= 0) return 1.0;
  double hm1 = 1.0;
  double h = x;
  for (int k = 1; k < n; ++k) {
    const double hp1 = x * h - k * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

} // namespace rmtk
