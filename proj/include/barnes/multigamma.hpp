// Multiple gamma functions log Gamma_N = zeta_N'(0, .), complete homogeneous
// symmetric sums, and the generalized Kummer identity connecting alternating
// combinations of log Gamma_1..log Gamma_N to log-weighted Fourier series.
//
// The identity checked by kummer_lhs/kummer_rhs (0 < x <= 1; x < 1 if N = 1):
//
//   sum_{l=0}^{N-1} (-1)^l log Gamma_{N-l}(x) (N-l-1)! h_l({a-x: 1<=a<=N-l})
//     = 2 (-1)^{ceil(N/2)} (N-1)!/(2pi)^N *
//       { sum_n log(n) trig(2 pi n x)/n^N
//         + (log 2pi + gamma - H_{N-1}) sum_n trig(2 pi n x)/n^N
//         -+ (pi/2) sum_n cotrig(2 pi n x)/n^N },
//
// where trig = cos, cotrig = sin, upper signs for even N, and trig = sin,
// cotrig = cos, lower signs for odd N. Both sides also equal
// zeta'(-(N-1), x), which is what zeta_deriv_neg_via_gammas returns.
#pragma once

#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "barnes/bernoulli.hpp"
#include "barnes/context.hpp"
#include "barnes/errors.hpp"
#include "barnes/hurwitz.hpp"
#include "barnes/reduction.hpp"

namespace barnes {

// log Gamma_N(x) = zeta_N'(0, x) with unit periods, via the Hurwitz
// coefficient identity and Euler-Maclaurin derivatives.
inline double log_gamma_n(unsigned N, double x, const EvalContext& ctx) {
  if (N == 0) throw DomainError("N must be >= 1");
  if (!(x > 0.0)) throw DomainError("log_gamma_n requires x > 0");
  const std::vector<double> c = detail::c_coefficients_at(N, x);
  double inv_fact = 1.0;
  for (unsigned i = 2; i < N; ++i) inv_fact /= i;
  double acc = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k)
    acc += c[k] * hurwitz_zeta_deriv(1, Complex(-static_cast<double>(k), 0.0),
                                     x, ctx)
                      .real();
  return inv_fact * acc;
}

// log Gamma_N(x | w) = zeta_N'(0, x | w). The zeta(-k, y) factors multiplying
// log w are taken from the exact Bernoulli lane; the zeta'(-k, y) factors use
// Euler-Maclaurin derivatives.
inline double log_gamma_n_periods(unsigned N, const Rational& x,
                                  const PeriodVector& w_vec,
                                  const EvalContext& ctx) {
  const HurwitzDecomposition d = decompose(N, x, w_vec);
  const double logw = std::log(d.w.as_double());
  double acc = 0.0;
  for (const auto& t : d.terms) {
    const double deriv =
        hurwitz_zeta_deriv(1, Complex(-static_cast<double>(t.k), 0.0),
                           t.y.as_double(), ctx)
            .real();
    double term = deriv;
    if (logw != 0.0)
      term -= logw * hurwitz_value_nonpos(t.k, t.y).as_double();
    acc += t.coeff.as_double() * term;
  }
  return acc;
}

// Complete homogeneous symmetric sum h_ell over {a - x : lo <= a <= hi}
// (weakly increasing products); h_0 = 1, empty window with ell > 0 gives 0.
inline double symmetric_sum_window(int lo, int hi, int ell, double x) {
  if (ell < 0) throw DomainError("symmetric sum order must be >= 0");
  std::vector<double> dp(ell + 1, 0.0);
  dp[0] = 1.0;
  for (int a = lo; a <= hi; ++a) {
    const double y = a - x;
    for (int m = 1; m <= ell; ++m) dp[m] += y * dp[m - 1];
  }
  return dp[ell];
}

// The window used by the descent identities: a = 1..N-ell.
inline double symmetric_sum(unsigned N, int ell, double x) {
  if (ell < 0 || ell >= static_cast<int>(N) + 1)
    throw DomainError("symmetric sum order out of range");
  return symmetric_sum_window(1, static_cast<int>(N) - ell, ell, x);
}

// zeta'(-(N-1), x) assembled from multiple gamma values:
//   sum_l (-1)^l log Gamma_{N-l}(x) (N-l-1)! h_l({a-x: 1<=a<=N-l}).
inline double zeta_deriv_neg_via_gammas(unsigned N, double x,
                                        const EvalContext& ctx) {
  if (N == 0) throw DomainError("N must be >= 1");
  double acc = 0.0;
  for (unsigned l = 0; l < N; ++l) {
    double fct = 1.0;
    for (unsigned i = 2; i <= N - l - 1; ++i) fct *= i;
    const double term = log_gamma_n(N - l, x, ctx) * fct *
                        symmetric_sum(N, static_cast<int>(l), x);
    acc += (l % 2 == 0) ? term : -term;
  }
  return acc;
}

// Left side of the generalized Kummer identity (same alternating sum).
inline double kummer_lhs(unsigned N, double x, const EvalContext& ctx) {
  return zeta_deriv_neg_via_gammas(N, x, ctx);
}

struct KummerSum {
  double value = 0.0;
  double tail_bound = 0.0;  // rigorous bound on the truncation error
};

// Right side of the identity, truncated after `terms` summands, with an
// a-posteriori tail bound. For N >= 2 the bound integrates the monotone
// majorants log t / t^N and 1/t^N; for N = 1 (conditionally convergent
// series) it is the Dirichlet-test bound with partial exponential sums
// bounded by 1/|sin(pi x)|. If require_tol > 0 and the bound exceeds it,
// throws ConvergenceError carrying the bound.
inline KummerSum kummer_rhs(unsigned N, double x, std::size_t terms,
                            const EvalContext& ctx, double require_tol = 0.0) {
  if (N == 0) throw DomainError("N must be >= 1");
  if (!(x > 0.0) || x > 1.0)
    throw DomainError("kummer_rhs requires 0 < x <= 1");
  if (N == 1 && x == 1.0)
    throw DomainError("the N = 1 series diverges at x = 1");
  if (terms < 8) throw DomainError("terms must be >= 8");

  const double gamma0 = stieltjes(0, Rational(1), ctx);
  double harmonic = 0.0;
  for (unsigned k = 1; k < N; ++k) harmonic += 1.0 / k;
  const double a_const = std::log(2.0 * M_PI) + gamma0 - harmonic;

  // Compensated accumulation of the three series.
  double s_logtrig = 0.0, s_trig = 0.0, s_cotrig = 0.0;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  const auto add = [](double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  const bool even = (N % 2 == 0);
  for (std::size_t n = terms; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    // Reduce n*x modulo 1 before multiplying by 2pi: keeps the phase
    // accurate for large n.
    const double phase = 2.0 * M_PI * (nd * x - std::floor(nd * x));
    const double tr = even ? std::cos(phase) : std::sin(phase);
    const double co = even ? std::sin(phase) : std::cos(phase);
    const double invp = std::pow(nd, -static_cast<double>(N));
    add(s_logtrig, c1, std::log(nd) * tr * invp);
    add(s_trig, c2, tr * invp);
    add(s_cotrig, c3, co * invp);
  }

  double fct = 1.0;
  for (unsigned i = 2; i < N; ++i) fct *= i;
  const int half = even ? static_cast<int>(N) / 2 : (static_cast<int>(N) - 1) / 2;
  double prefactor =
      2.0 * fct / std::pow(2.0 * M_PI, static_cast<double>(N));
  if (half % 2 != 0) prefactor = -prefactor;

  const double braces =
      s_logtrig + a_const * s_trig + (even ? -1.0 : 1.0) * (M_PI / 2.0) * s_cotrig;

  KummerSum out;
  out.value = prefactor * braces;

  const double T = static_cast<double>(terms);
  double tail_log, tail_plain;
  if (N >= 2) {
    const double nm1 = static_cast<double>(N - 1);
    tail_log = (std::log(T) / nm1 + 1.0 / (nm1 * nm1)) * std::pow(T, -nm1);
    tail_plain = std::pow(T, -nm1) / nm1;
  } else {
    const double d = 1.0 / std::abs(std::sin(M_PI * x));
    tail_log = d * std::log(T + 1.0) / (T + 1.0);
    tail_plain = d / (T + 1.0);
  }
  out.tail_bound = std::abs(prefactor) *
                   (tail_log + std::abs(a_const) * tail_plain +
                    (M_PI / 2.0) * tail_plain);

  if (require_tol > 0.0 && out.tail_bound > require_tol)
    throw ConvergenceError("kummer series tail bound " +
                               std::to_string(out.tail_bound) +
                               " exceeds requested tolerance",
                           out.tail_bound);
  return out;
}

}  // namespace barnes
