// Floating lane for the Hurwitz zeta function zeta(s, x) = sum (n+x)^{-s}:
// Euler-Maclaurin continuation, closed-form s-derivatives of every
// Euler-Maclaurin term, generalized Stieltjes constants, polygamma values at
// positive integers, complete Bell polynomials, and Gamma derivatives.
//
// The Euler-Maclaurin form used throughout (S := M + x):
//
//   zeta(s,x) = sum_{m=0}^{M-1} (m+x)^{-s}
//             + S^{1-s}/(s-1) + S^{-s}/2
//             + sum_{j=1}^{J} B_{2j}/(2j)! * (s)_{2j-1} * S^{-s-2j+1}
//             + remainder,
//
// with (s)_{2j-1} = s(s+1)...(s+2j-2). Derivatives in s are taken term by
// term (each term is an elementary function of s), so the same skeleton
// yields d^n/ds^n zeta(s, x) for n <= 10.
//
// Choice of M: the direct sum dominates roundoff. For Re(s) >= 1/2 its terms
// decrease and M = max(em_terms, 2|Im s|) is safe. For Re(s) < 1/2 the terms
// grow like (M+x)^{-Re s}, and a large M destroys absolute accuracy through
// cancellation against the S^{1-s}/(s-1) term; a small M (em_terms_descending)
// keeps intermediates tame while the Bernoulli block still converges fast.
// At non-positive integer s the Pochhammer factors eventually vanish and the
// expansion terminates: the value is exact up to roundoff.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "barnes/bernoulli.hpp"
#include "barnes/context.hpp"
#include "barnes/errors.hpp"

namespace barnes {

namespace detail {

inline int em_direct_terms(const Complex& s, const EvalContext& ctx) {
  const double base =
      s.real() < 0.5 ? ctx.em_terms_descending : ctx.em_terms;
  return static_cast<int>(std::ceil(std::max(base, 2.0 * std::abs(s.imag()))));
}

// B_{2j} / (2j)! as double, cached.
inline double bernoulli_over_factorial(int j) {
  static std::vector<double> table;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= j) {
    const unsigned two_j = 2 * static_cast<unsigned>(table.size());
    table.push_back((bernoulli_number(two_j) /
                     Rational(factorial(two_j), BigInt(1)))
                        .as_double());
  }
  return table[j];
}

inline double binomial_d(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace detail

// All derivatives d^d/ds^d zeta(s, x) for d = 0..n in one pass.
// Requires x > 0, n <= 10, |s - 1| >= 1e-12.
inline std::vector<Complex> hurwitz_zeta_derivs(int n, Complex s, double x,
                                                const EvalContext& ctx) {
  if (!(x > 0.0)) throw DomainError("hurwitz zeta requires x > 0");
  if (n < 0 || n > 10)
    throw DomainError("hurwitz zeta derivative order must be in 0..10");
  if (std::abs(s - Complex(1.0, 0.0)) < 1e-12)
    throw PoleError("zeta(s, x) evaluated at its pole s = 1");

  const int M = detail::em_direct_terms(s, ctx);
  const int J = ctx.em_order;
  std::vector<Complex> out(n + 1, Complex(0.0, 0.0));

  // Direct block: d-th derivative of (m+x)^{-s} is (-log(m+x))^d (m+x)^{-s}.
  for (int m = 0; m < M; ++m) {
    const double t = m + x;
    const double lt = std::log(t);
    const Complex p = std::exp(-s * lt);
    Complex logpow(1.0, 0.0);
    for (int d = 0; d <= n; ++d) {
      out[d] += p * logpow;
      logpow *= -lt;
    }
  }

  const double S = M + x;
  const double L = std::log(S);
  const Complex Spow = std::exp(-s * L);  // S^{-s}

  // Integral term S^{1-s}/(s-1); Leibniz over e^{(1-s)L} * (s-1)^{-1}.
  {
    const Complex S1 = Spow * S;          // S^{1-s}
    const Complex inv = 1.0 / (s - 1.0);  // powers built incrementally
    std::vector<Complex> invpow(n + 2);
    invpow[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= n + 1; ++k) invpow[k] = invpow[k - 1] * inv;
    for (int d = 0; d <= n; ++d) {
      Complex acc(0.0, 0.0);
      double lr = 1.0;  // (-L)^r
      for (int r = 0; r <= d; ++r) {
        // C(d,r) (-L)^r * (-1)^{d-r} (d-r)! / (s-1)^{d-r+1}
        double fct = 1.0;
        for (int i = 2; i <= d - r; ++i) fct *= i;
        const double sign = ((d - r) % 2 == 0) ? 1.0 : -1.0;
        acc += detail::binomial_d(d, r) * lr * sign * fct * invpow[d - r + 1];
        lr *= -L;
      }
      out[d] += S1 * acc;
    }
  }

  // Half term S^{-s}/2.
  {
    double lr = 1.0;
    for (int d = 0; d <= n; ++d) {
      out[d] += 0.5 * Spow * lr;
      lr *= -L;
    }
  }

  // Bernoulli block. pd[r] carries the r-th derivative of the Pochhammer
  // polynomial P_j(s) = s(s+1)...(s+2j-2), updated incrementally via
  // (P*(s+c))^{(r)} = P^{(r)}*(s+c) + r*P^{(r-1)}.
  {
    std::vector<Complex> pd(n + 2, Complex(0.0, 0.0));
    pd[0] = s;  // P_1(s) = s
    if (n >= 1) pd[1] = Complex(1.0, 0.0);
    double Sfall = 1.0 / S;  // S^{-2j+1}
    for (int j = 1; j <= J; ++j) {
      if (j > 1) {
        for (int c = 2 * j - 3; c <= 2 * j - 2; ++c) {
          for (int r = std::min(n, 2 * j - 1); r >= 0; --r) {
            pd[r] = pd[r] * (s + Complex(c)) +
                    (r > 0 ? Complex(r) * pd[r - 1] : Complex(0.0, 0.0));
          }
        }
        Sfall /= S * S;
      }
      const double bj = detail::bernoulli_over_factorial(j);
      const Complex common = bj * Spow * Sfall;  // B/(2j)! * S^{-s-2j+1}
      for (int d = 0; d <= n; ++d) {
        Complex acc(0.0, 0.0);
        double lr = 1.0;  // (-L)^{d-r} built from r = d downward
        for (int r = d; r >= 0; --r) {
          acc += detail::binomial_d(d, r) * pd[r] * lr;
          lr *= -L;
        }
        out[d] += common * acc;
      }
    }
  }

  for (const Complex& v : out)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw OverflowError("hurwitz zeta evaluation overflowed");
  return out;
}

inline Complex hurwitz_zeta(Complex s, double x, const EvalContext& ctx) {
  return hurwitz_zeta_derivs(0, s, x, ctx)[0];
}

inline Complex hurwitz_zeta_deriv(int n, Complex s, double x,
                                  const EvalContext& ctx) {
  return hurwitz_zeta_derivs(n, s, x, ctx)[n];
}

// Generalized Stieltjes constant gamma_n(x) for rational x in (0, 1], n <= 10:
// the Laurent coefficients of zeta(s, x) about s = 1,
//   zeta(s, x) = 1/(s-1) + sum_n (-1)^n/n! gamma_n(x) (s-1)^n.
//
// Computed from the tail-corrected limit representation
//   gamma_n(x) = sum_{k=0}^{m} f(k) - log^{n+1}(m+x)/(n+1)
//              - f(m)/2 - sum_j B_{2j}/(2j)! f^{(2j-1)}(m),
// where f(t) = log^n(t+x)/(t+x); the derivative coefficients follow the
// closed recurrence in the log-power basis.
inline double stieltjes(int n, const Rational& x, const EvalContext& ctx) {
  if (n < 0 || n > 10)
    throw DomainError("stieltjes constant order must be in 0..10");
  if (x.sign() <= 0 || x > Rational(1))
    throw DomainError("stieltjes constants require 0 < x <= 1");

  EvalContext::StieltjesKey key{-1, 0, 0};
  const bool cacheable = x.num().fits_slong_p() && x.den().fits_slong_p();
  if (cacheable) {
    key = {n, x.num().get_si(), x.den().get_si()};
    std::lock_guard<std::mutex> lock(ctx.stieltjes_mutex);
    if (auto it = ctx.stieltjes_cache.find(key);
        it != ctx.stieltjes_cache.end())
      return it->second;
  }

  const double xd = x.as_double();
  const long m = ctx.stieltjes_terms;
  const auto f = [&](double t) {
    const double u = t + xd;
    return std::pow(std::log(u), n) / u;
  };

  // Compensated sum, small terms first.
  double sum = 0.0, comp = 0.0;
  for (long k = m; k >= 0; --k) {
    const double y = f(static_cast<double>(k)) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  const double u = m + xd;
  const double lu = std::log(u);
  double value = sum - std::pow(lu, n + 1) / (n + 1) - f(m) / 2.0;

  // f^{(k)}(t) = u^{-(k+1)} sum_a c_a log^a u with
  // c'_b = (b+1) c_{b+1} - (k+1) c_b.
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  double upow = 1.0 / u;
  for (int k = 1; k <= 2 * ctx.stieltjes_order - 1; ++k) {
    for (int b = 0; b <= n; ++b)
      c[b] = (b + 1 <= n ? (b + 1) * c[b + 1] : 0.0) - k * c[b];
    upow /= u;
    if (k % 2 == 1) {
      double fd = 0.0, lp = 1.0;
      for (int b = 0; b <= n; ++b) {
        fd += c[b] * lp;
        lp *= lu;
      }
      fd *= upow;
      value -= detail::bernoulli_over_factorial((k + 1) / 2) * fd;
    }
  }

  if (!std::isfinite(value))
    throw OverflowError("stieltjes evaluation overflowed");
  if (cacheable) {
    std::lock_guard<std::mutex> lock(ctx.stieltjes_mutex);
    ctx.stieltjes_cache.emplace(key, value);
  }
  return value;
}

// psi^{(ell)}(m) for integer m >= 1:
//   psi(m)       = -gamma + sum_{k<m} 1/k,
//   psi^{(ell)}(m) = (-1)^{ell+1} ell! (zeta(ell+1) - sum_{k<m} k^{-(ell+1)}).
inline double psi_deriv(int ell, int m, const EvalContext& ctx) {
  if (ell < 0 || m < 1)
    throw DomainError("psi_deriv requires ell >= 0 and integer m >= 1");
  if (ell == 0) {
    double v = -stieltjes(0, Rational(1), ctx);
    for (int k = 1; k < m; ++k) v += 1.0 / k;
    return v;
  }
  double tail = hurwitz_zeta(Complex(ell + 1.0, 0.0), 1.0, ctx).real();
  for (int k = 1; k < m; ++k) tail -= std::pow(k, -(ell + 1.0));
  double fct = 1.0;
  for (int i = 2; i <= ell; ++i) fct *= i;
  return (ell % 2 == 0 ? -1.0 : 1.0) * fct * tail;
}

// Complete Bell polynomial B_n(x_1, ..., x_n) via
//   B_0 = 1,  B_{m+1} = sum_{k=0}^{m} C(m,k) B_{m-k} x_{k+1}.
inline double bell_complete(const std::vector<double>& args, int n) {
  if (n < 0) throw DomainError("bell polynomial order must be >= 0");
  if (static_cast<int>(args.size()) < n)
    throw DomainError("bell polynomial needs n arguments");
  std::vector<double> b(n + 1);
  b[0] = 1.0;
  for (int m = 0; m < n; ++m) {
    double acc = 0.0;
    for (int k = 0; k <= m; ++k)
      acc += detail::binomial_d(m, k) * b[m - k] * args[k];
    b[m + 1] = acc;
  }
  return b[n];
}

// Gamma^{(a)}(m) for integer m >= 1, a <= 10:
//   Gamma^{(a)}(m) = (m-1)! * B_a(psi(m), psi'(m), ..., psi^{(a-1)}(m)).
inline double gamma_deriv(int a, int m, const EvalContext& ctx) {
  if (a < 0 || a > 10)
    throw DomainError("gamma derivative order must be in 0..10");
  if (m < 1) throw DomainError("gamma_deriv requires integer m >= 1");
  std::vector<double> psis(a);
  for (int k = 0; k < a; ++k) psis[k] = psi_deriv(k, m, ctx);
  double fct = 1.0;
  for (int i = 2; i < m; ++i) fct *= i;
  return fct * bell_complete(psis, a);
}

}  // namespace barnes
