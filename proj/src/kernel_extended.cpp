#include "kernel_extended.hpp"

#include <cmath>
#include <vector>

#include "rmtk/quadrature.hpp"

namespace rmtk::detail {

namespace {

using LD = long double;

const LD kPi = 3.14159265358979323846264338327950288L;
const LD kSqrtPiL = std::sqrt(kPi);

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the rule
// is symmetric).
const LD kGLX[8] = {0.0L,
                    0.20119409399743451147975426553877L,
                    0.39415134707756336989720737098344L,
                    0.57097217260853884753722673725391L,
                    0.72441773136017004741618605461394L,
                    0.84820658341042721620064832077422L,
                    0.93727339240070590430775894771021L,
                    0.98799251802048542848956571858661L};
const LD kGLW[8] = {0.20257824192556127288062019996752L,
                    0.19843148532711157645611832644384L,
                    0.18616100001556221102680056186642L,
                    0.16626920581699393355320086048121L,
                    0.13957067792615431444780479451103L,
                    0.10715922046717193501186954668587L,
                    0.07036604748810812470926741645066L,
                    0.03075324199611726835462839357720L};

template <class F>
LD fixed_gl(const F& f, LD a, LD b, int panels) {
  LD total = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const LD lo = a + (b - a) * p / panels;
    const LD hi = a + (b - a) * (p + 1) / panels;
    const LD c = 0.5L * (lo + hi), h = 0.5L * (hi - lo);
    LD s = kGLW[0] * f(c);
    for (int i = 1; i < 8; ++i)
      s += kGLW[i] * (f(c - h * kGLX[i]) + f(c + h * kGLX[i]));
    total += s * h;
  }
  return total;
}

// I_0 by power series; the extended path only sees |x| of order a few.
LD bessel_i0(LD x) {
  const LD q = 0.25L * x * x;
  LD term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<LD>(k) * k);
    sum += term;
    if (term < 1e-24L * sum) break;
  }
  return sum;
}

// The theta integrals of the two-point weights, rewritten with
// cos(2 theta) = -cos(psi): the tan(theta)-weighted integral over [0, pi]
// becomes Int_0^pi F(sin psi, -cos psi) cot(psi/2) dpsi, whose integrand is
// analytic on the whole interval (F is odd in its first argument, so the
// psi -> 0 endpoint is removable and there are no square-root kinks).
//
// G(l1, l2) = 4 l1 l2 e^{-eta+ (l1^2+l2^2)}
//             x Int_0^pi sinh(A sin psi) I0(-B cos psi) cot(psi/2) dpsi,
// A = eta- (l1^2 - l2^2), B = 2 eta- l1 l2. The path only activates near
// mu = 1, where the arguments are modest and the unscaled forms stay in range.
LD weight_G_ld(LD l1, LD l2, LD eta_plus, LD eta_minus) {
  if (l1 == l2) return 0.0L;
  const LD A = eta_minus * (l1 * l1 - l2 * l2);
  const LD B = 2.0L * eta_minus * l1 * l2;
  auto f = [&](LD psi) {
    return std::sinh(A * std::sin(psi)) * bessel_i0(-B * std::cos(psi)) /
           std::tan(0.5L * psi);
  };
  const LD integral = fixed_gl(f, 0.0L, kPi, 12);
  return 4.0L * l1 * l2 * std::exp(-eta_plus * (l1 * l1 + l2 * l2)) * integral;
}

LD weight_H_ld(LD lam, LD eta_plus, LD eta_minus) {
  const LD l2 = lam * lam;
  auto f = [&](LD psi) {
    const LD s = std::sin(psi);
    const LD d1 = eta_plus - eta_minus * s;
    const LD d2 = eta_plus + eta_minus * s;
    const LD r1 = (eta_minus - eta_plus * s) / d1;
    const LD r2 = (eta_minus + eta_plus * s) / d2;
    const LD F = std::exp((r1 * eta_minus - eta_plus) * l2) / d1 -
                 std::exp((r2 * eta_minus - eta_plus) * l2) / d2;
    return F / std::tan(0.5L * psi);
  };
  return lam * fixed_gl(f, 0.0L, kPi, 12);
}

LD weight_g_ld(LD lam, LD eta_plus, LD eta_minus) {
  return 2.0L * kSqrtPiL * lam * std::exp(-eta_plus * lam * lam) *
         bessel_i0(eta_minus * lam * lam);
}

LD factorial_ld(int n) {
  LD f = 1.0L;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

LD binom_ld(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  LD b = 1.0L;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Plain Laguerre L_n coefficients in ascending powers.
std::vector<LD> laguerre_coeffs_ld(int n) {
  std::vector<LD> c(n + 1);
  for (int k = 0; k <= n; ++k)
    c[k] = ((k % 2) ? -1.0L : 1.0L) * binom_ld(n, k) / factorial_ld(k);
  return c;
}

void add_scaled_laguerre_ld(std::vector<LD>& p, int n, LD scale, LD f) {
  const auto lc = laguerre_coeffs_ld(n);
  LD sk = 1.0L;
  for (int k = 0; k <= n; ++k) {
    p[k] += f * lc[k] * sk;
    sk *= scale;
  }
}

std::vector<LD> finish_monic_ld(std::vector<LD> c, int degree) {
  const LD lead = c[degree];
  for (auto& v : c) v /= lead;
  c[degree] = 1.0L;
  return c;
}

// Long double mirrors of poly_q / poly_q_tilde (c_tilde = 0).
std::vector<LD> poly_q_ld(int j, LD m2) {
  const LD scale = 1.0L / (1.0L + m2);
  const LD ratio = (1.0L - m2) / (2.0L * (1.0L + m2));
  std::vector<LD> out(j + 1, 0.0L);
  for (int l = 0; 2 * l <= j; ++l) {
    const LD pref = factorial_ld(j) * std::pow(1.0L + m2, (LD)j) *
                    binom_ld(2 * l, l) * std::pow(ratio, (LD)(2 * l));
    add_scaled_laguerre_ld(out, j - 2 * l, scale, pref);
  }
  if (j % 2)
    for (auto& v : out) v = -v;
  return finish_monic_ld(std::move(out), j);
}

std::vector<LD> poly_q_tilde_ld(int j, LD m2) {
  const LD scale = 1.0L / (1.0L + m2);
  const LD ratio = (1.0L - m2) / (2.0L * (1.0L + m2));
  const LD ba = (1.0L - m2) / (1.0L + m2);
  const LD ba2 = ba * ba;
  std::vector<LD> out(j + 2, 0.0L);
  for (int l = 0; 2 * l <= j; ++l) {
    const LD pref = factorial_ld(j) * std::pow(1.0L + m2, (LD)(j + 1)) *
                    binom_ld(2 * l, l) * std::pow(ratio, (LD)(2 * l));
    if (j - 2 * l - 1 >= 0)
      add_scaled_laguerre_ld(out, j - 2 * l - 1, scale, pref * ba2 * (j - 2 * l));
    add_scaled_laguerre_ld(out, j - 2 * l + 1, scale, -pref * (j - 2 * l + 1));
  }
  if (j % 2)
    for (auto& v : out) v = -v;
  return finish_monic_ld(std::move(out), j + 1);
}

LD h_norm_ld(int j, LD mu) {
  const LD om = 1.0L - mu * mu;
  return 4.0L * kPi * mu * mu * std::pow(om, (LD)(2 * j + 1)) *
         factorial_ld(j) * factorial_ld(j + 1);
}

LD poly_eval_ld(const std::vector<LD>& c, LD x2) {
  LD v = 0.0L;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) v = v * x2 + c[k];
  return v;
}

} // namespace

bool needs_extended_kernel(int n, const Coupling& c) {
  if (n < 4) return false;
  const int j_max = n - 2;
  const double om = 1.0 - c.mu * c.mu;
  // Relative cancellation of the worst kernel term is ~(1-mu^2)^{2 j_max};
  // below ~1e-4 the double quadratures either miss 1e-5-level accuracy or
  // stall against their own cancellation noise floor.
  return std::pow(om, 2 * j_max) < 1e-4;
}

double kernel_G_extended(int n, const Coupling& c, double l1, double l2) {
  const bool odd = n % 2 != 0;
  const LD mu = c.mu;
  const LD m2 = mu * mu;
  const LD ep = c.eta_plus, em = c.eta_minus;

  std::vector<std::vector<LD>> q, qt;
  std::vector<LD> h;
  for (int j = odd ? 1 : 0; j <= n - 2; j += 2) {
    q.push_back(poly_q_ld(j, m2));
    qt.push_back(poly_q_tilde_ld(j, m2));
    h.push_back(h_norm_ld(j, mu));
  }

  const LD y2 = (LD)l2 * l2;
  auto k_poly = [&](LD x2) {
    LD s = 0.0L;
    for (std::size_t j = 0; j < q.size(); ++j)
      s += (poly_eval_ld(q[j], y2) * poly_eval_ld(qt[j], x2) -
            poly_eval_ld(q[j], x2) * poly_eval_ld(qt[j], y2)) /
           h[j];
    return s;
  };

  LD v = 0.0L;
  if (odd)
    v = (LD)l1 / mu * std::exp(-ep * (LD)l1 * l1) * bessel_i0(em * (LD)l1 * l1);
  if (q.empty()) return static_cast<double>(v);

  const LD gb = 2.0L * kSqrtPiL * mu;
  const LD h_l1 = odd ? weight_H_ld(l1, ep, em) : 0.0L;
  const LD g_l1 = odd ? weight_g_ld(l1, ep, em) : 0.0L;
  auto integrand = [&](LD x) {
    LD w = weight_G_ld(x, l1, ep, em);
    if (odd)
      w += -weight_g_ld(x, ep, em) * h_l1 / gb +
           weight_H_ld(x, ep, em) * g_l1 / gb;
    return w * k_poly(x * x);
  };
  const LD cut = semi_infinite_cutoff();
  v += fixed_gl(integrand, 0.0L, cut, 32);
  return static_cast<double>(v);
}

} // namespace rmtk::detail
