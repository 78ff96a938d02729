// Derivatives of (multiple) Hurwitz zeta functions at non-positive integers
// through the Hurwitz functional equation.
//
// Write y = Y + u/v with integers Y >= 0 and 1 <= u <= v (u = v when y is an
// integer). With H(s, u/v) = sum_{k=1}^{v} cos(pi s/2 - 2 pi k u/v) zeta(s, k/v),
// the functional equation gives, for integer m = ell + 1 >= 1,
//
//   zeta^{(j)}(-ell, y)
//     = (-1)^j 2 (2 pi v)^{-m} sum_{a+b+c=j} (j; a,b,c) Gamma^{(a)}(m)
//           (-log 2 pi v)^b H^{(c)}(m, u/v)
//       - sum_{q=0}^{Y-1} (-log(q + u/v))^j (q + u/v)^{ell}.
//
// H^{(c)}(m, u/v) is evaluated in closed form: for m >= 2 through Hurwitz
// zeta derivatives at integer arguments, and at the (removable) point m = 1
// through generalized Stieltjes constants plus the correction
//   eps = (-1)^{c/2+1} (pi/2)^{c+1} v / (c+1)   (c even and u = v only).
//
// Combining with the period reduction of reduction.hpp yields higher
// s-derivatives of zeta_N(s, x | w) at non-positive integers
// (barnes_deriv_nonpos) without any numerical differentiation.
#pragma once

#include <cmath>
#include <future>
#include <numeric>
#include <thread>
#include <vector>

#include "barnes/context.hpp"
#include "barnes/errors.hpp"
#include "barnes/hurwitz.hpp"
#include "barnes/multigamma.hpp"
#include "barnes/rationalize.hpp"
#include "barnes/reduction.hpp"

namespace barnes {

// y = Y + u/v with 1 <= u <= v, u/v in (0, 1], gcd(u, v) = 1.
// Integers decompose as y = (y-1) + 1/1.
struct FracDecomp {
  long Y = 0;
  long u = 1;
  long v = 1;
};

inline FracDecomp frac_decomp(const Rational& y) {
  if (y.sign() <= 0) throw DomainError("frac_decomp requires y > 0");
  FracDecomp out;
  if (y.is_integer()) {
    if (!y.num().fits_slong_p()) throw DomainError("y too large");
    out.Y = y.num().get_si() - 1;
    out.u = out.v = 1;
    return out;
  }
  const BigInt fl = y.floor();
  if (!fl.fits_slong_p()) throw DomainError("y too large");
  const Rational frac = y - Rational(fl, BigInt(1));
  if (!frac.num().fits_slong_p() || !frac.den().fits_slong_p())
    throw DomainError("fractional part of y too large");
  out.Y = fl.get_si();
  out.u = frac.num().get_si();
  out.v = frac.den().get_si();
  return out;
}

namespace detail {

// zeta^{(i)}(m, k/v) for i = 0..c at integer m >= 2, memoized in the context
// on the reduced fraction.
inline std::vector<double> zeta_derivs_at_int_cached(int c, int m, long k,
                                                     long v,
                                                     const EvalContext& ctx) {
  const long g = std::gcd(k, v);
  const long kr = k / g, vr = v / g;
  std::vector<double> out(c + 1);
  std::lock_guard<std::mutex> lock(ctx.hurwitz_mutex);
  bool all_cached = true;
  for (int i = 0; i <= c; ++i) {
    const auto it = ctx.hurwitz_cache.find({i, m, kr, vr});
    if (it == ctx.hurwitz_cache.end()) {
      all_cached = false;
      break;
    }
    out[i] = it->second;
  }
  if (all_cached) return out;
  const std::vector<Complex> derivs = hurwitz_zeta_derivs(
      c, Complex(static_cast<double>(m), 0.0),
      static_cast<double>(kr) / static_cast<double>(vr), ctx);
  for (int i = 0; i <= c; ++i) {
    // insert-once: an earlier value, if any, wins
    const auto [it, unused] =
        ctx.hurwitz_cache.emplace(EvalContext::HurwitzKey{i, m, kr, vr},
                                  derivs[i].real());
    out[i] = it->second;
  }
  return out;
}

// sin(r*pi/2 - theta) for integer r, using exact quarter-turn values.
inline double sin_quarter_shift(int r, double sin_theta, double cos_theta) {
  switch (((r % 4) + 4) % 4) {
    case 0: return -sin_theta;
    case 1: return cos_theta;
    case 2: return sin_theta;
    default: return -cos_theta;
  }
}

}  // namespace detail

// c-th s-derivative of H(s, u/v) at integer s = m >= 1.
inline double h_deriv(int c, int m, long u, long v, const EvalContext& ctx) {
  if (c < 0 || c > 10) throw DomainError("h_deriv order must be in 0..10");
  if (m < 1) throw DomainError("h_deriv requires integer m >= 1");
  if (v < 1 || u < 1 || u > v) throw DomainError("h_deriv requires 1 <= u <= v");

  const double half_pi = M_PI / 2.0;
  double total = 0.0;
  for (long k = 1; k <= v; ++k) {
    const long j = (k * u) % v;
    const double theta =
        2.0 * M_PI * static_cast<double>(j) / static_cast<double>(v);
    const double st = std::sin(theta), ct = std::cos(theta);
    if (m >= 2) {
      const std::vector<double> zd =
          detail::zeta_derivs_at_int_cached(c, m, k, v, ctx);
      for (int i = 0; i <= c; ++i) {
        const double s_val =
            detail::sin_quarter_shift(m + c - i - 1, st, ct);
        total += detail::binomial_d(c, i) *
                 std::pow(half_pi, static_cast<double>(c - i)) * s_val * zd[i];
      }
    } else {
      for (int i = 0; i <= c; ++i) {
        const double s_val = detail::sin_quarter_shift(c - i, st, ct);
        const double sign = (i % 2 == 0) ? -1.0 : 1.0;  // (-1)^{i+1}
        total += sign * detail::binomial_d(c, i) *
                 std::pow(half_pi, static_cast<double>(c - i)) * s_val *
                 stieltjes(i, Rational(k, v), ctx);
      }
    }
  }
  if (m >= 2) return -total;

  double eps = 0.0;
  if (c % 2 == 0 && u == v) {
    const double sign = ((c / 2 + 1) % 2 == 0) ? 1.0 : -1.0;
    eps = sign * std::pow(half_pi, c + 1) * static_cast<double>(v) / (c + 1);
  }
  return eps + total;
}

namespace detail {

inline double multinomial_d(int j, int a, int b, int cc) {
  double f = 1.0;
  for (int i = 2; i <= j; ++i) f *= i;
  for (int i = 2; i <= a; ++i) f /= i;
  for (int i = 2; i <= b; ++i) f /= i;
  for (int i = 2; i <= cc; ++i) f /= i;
  return f;
}

// The functional-equation assembly for zeta^{(j)}(-ell, Y + u/v). Exposed
// separately so the (u, v) representation can be varied in tests.
inline double zeta_deriv_nonpos_assemble(int j, int ell, long Y, long u,
                                         long v, const EvalContext& ctx) {
  const int m = ell + 1;
  const double log2piv = std::log(2.0 * M_PI * static_cast<double>(v));
  const double scale =
      2.0 * std::pow(2.0 * M_PI * static_cast<double>(v),
                     -static_cast<double>(m));

  std::vector<double> h_vals(j + 1), g_vals(j + 1), lg_pow(j + 1);
  for (int cidx = 0; cidx <= j; ++cidx)
    h_vals[cidx] = h_deriv(cidx, m, u, v, ctx);
  for (int a = 0; a <= j; ++a) g_vals[a] = gamma_deriv(a, m, ctx);
  lg_pow[0] = 1.0;
  for (int b = 1; b <= j; ++b) lg_pow[b] = lg_pow[b - 1] * (-log2piv);

  double fe = 0.0;
  for (int a = 0; a <= j; ++a)
    for (int b = 0; a + b <= j; ++b) {
      const int cc = j - a - b;
      fe += multinomial_d(j, a, b, cc) * g_vals[a] * lg_pow[b] * h_vals[cc];
    }
  fe *= scale;
  if (j % 2 != 0) fe = -fe;

  double corr = 0.0;
  const double frac = static_cast<double>(u) / static_cast<double>(v);
  for (long q = 0; q < Y; ++q) {
    const double base = static_cast<double>(q) + frac;
    corr += std::pow(-std::log(base), static_cast<double>(j)) *
            std::pow(base, static_cast<double>(ell));
  }
  return fe - corr;
}

}  // namespace detail

// zeta^{(j)}(-ell, y) for rational y > 0, by the functional-equation route
// (independent of the Euler-Maclaurin lane).
inline double hurwitz_deriv_nonpos_rational(int j, int ell, const Rational& y,
                                            const EvalContext& ctx) {
  if (j < 0 || j > 8)
    throw DomainError("derivative order must be in 0..8 on this route");
  if (ell < 0 || ell > 12) throw DomainError("ell must be in 0..12");
  const FracDecomp fd = frac_decomp(y);
  return detail::zeta_deriv_nonpos_assemble(j, ell, fd.Y, fd.u, fd.v, ctx);
}

// d^n/ds^n zeta_N(s, x | w) at s = -ell, fully through the rational pipeline:
// period reduction + functional equation. Supported ranges are deliberately
// capped (the lattice and the Stieltjes orders grow quickly beyond them).
inline double barnes_deriv_nonpos(int n, int ell, unsigned N,
                                  const Rational& x, const PeriodVector& w_vec,
                                  const EvalContext& ctx) {
  if (N < 1 || N > 4)
    throw DomainError("barnes_deriv_nonpos supports N in 1..4");
  if (ell < 0 || ell > 4)
    throw DomainError("barnes_deriv_nonpos supports ell in 0..4");
  if (n < 0 || n > 5)
    throw DomainError("barnes_deriv_nonpos supports derivative order n in 0..5");

  const HurwitzDecomposition d = decompose(N, x, w_vec);
  const double logw = std::log(d.w.as_double());
  const double w_ell = pow(d.w, ell).as_double();

  double value = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double outer =
        detail::binomial_d(n, j) *
        (n - j == 0 ? 1.0 : std::pow(-logw, static_cast<double>(n - j))) *
        w_ell;
    if (outer == 0.0) continue;
    double inner = 0.0;
    for (const auto& t : d.terms)
      inner += t.coeff.as_double() *
               hurwitz_deriv_nonpos_rational(j, ell + static_cast<int>(t.k),
                                             t.y, ctx);
    value += outer * inner;
  }
  return value;
}

// ---------------------------------------------------------------------------
// zeta_2 value/derivative surface at s = 0 over a grid of period pairs.
// ---------------------------------------------------------------------------

struct Zeta0Grid {
  std::vector<double> w1, w2;               // midpoint node coordinates
  std::vector<std::vector<double>> values;  // values[i][j] at (w1[i], w2[j])
};

// deriv_order 0: zeta_2(0, x | w1, w2), exact Bernoulli lane;
// deriv_order 1: zeta_2'(0, x | w1, w2) = log Gamma_2(x | w1, w2).
// Nodes are midpoints of `steps` equal cells per axis, each rationalized
// with denominator <= max_den. Rows are evaluated concurrently; results are
// deterministic (each node is an independent evaluation).
inline Zeta0Grid barnes_zeta0_grid(int deriv_order, const Rational& x,
                                   double w1_lo, double w1_hi, double w2_lo,
                                   double w2_hi, int steps1, int steps2,
                                   long max_den, const EvalContext& ctx) {
  if (deriv_order != 0 && deriv_order != 1)
    throw DomainError("grid derivative order must be 0 or 1");
  if (steps1 < 1 || steps2 < 1) throw DomainError("grid needs >= 1 step");
  // midpoint nodes are interior, so lo = 0 is fine
  if (!(0.0 <= w1_lo && w1_lo < w1_hi) || !(0.0 <= w2_lo && w2_lo < w2_hi))
    throw DomainError("grid ranges must satisfy 0 <= lo < hi");

  Zeta0Grid grid;
  grid.w1.resize(steps1);
  grid.w2.resize(steps2);
  for (int i = 0; i < steps1; ++i)
    grid.w1[i] = w1_lo + (i + 0.5) * (w1_hi - w1_lo) / steps1;
  for (int j = 0; j < steps2; ++j)
    grid.w2[j] = w2_lo + (j + 0.5) * (w2_hi - w2_lo) / steps2;

  std::vector<Rational> r1(steps1), r2(steps2);
  for (int i = 0; i < steps1; ++i) r1[i] = best_rational(grid.w1[i], max_den);
  for (int j = 0; j < steps2; ++j) r2[j] = best_rational(grid.w2[j], max_den);

  grid.values.assign(steps1, std::vector<double>(steps2, 0.0));
  const auto eval_row = [&](int i) {
    for (int j = 0; j < steps2; ++j) {
      const PeriodVector w{r1[i], r2[j]};
      grid.values[i][j] =
          deriv_order == 0
              ? barnes_value_nonpos(2, 0, x, w).as_double()
              : log_gamma_n_periods(2, x, w, ctx);
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (hw <= 1 || steps1 == 1) {
    for (int i = 0; i < steps1; ++i) eval_row(i);
  } else {
    std::vector<std::future<void>> rows;
    rows.reserve(steps1);
    for (int i = 0; i < steps1; ++i)
      rows.push_back(std::async(std::launch::async, eval_row, i));
    for (auto& f : rows) f.get();
  }
  return grid;
}

}  // namespace barnes
