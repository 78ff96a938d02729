// Exact lane: Bernoulli numbers, Bernoulli polynomials, their multi-period
// generalization, and the exact values of (multiple) Hurwitz zeta functions
// at non-positive integers that follow from them.
//
// Conventions. bernoulli_number uses the generating function t/(e^t - 1),
// so B_1 = -1/2. The multi-period polynomials B_k(X | w_1..w_N) are defined
// by
//     t^N e^{(w_1+...+w_N - X) t} / prod_i (e^{w_i t} - 1)
//         = sum_k B_k(X | w) t^k / k! ,
// which for N = 1, w = (1) gives B_k(X | 1) = B_k(1 - X) in terms of the
// classical polynomials. Note the k = 0 value is 1/(w_1...w_N), not 1.
#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "barnes/polynomial.hpp"
#include "barnes/rational.hpp"

namespace barnes {

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// B_n with B_1 = -1/2; computed by the defining recurrence
//   sum_{k=0}^{n} C(n+1, k) B_k = 0   (n >= 1)
// and memoized for the life of the process.
inline Rational bernoulli_number(unsigned n) {
  static std::vector<Rational> table = {Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    const unsigned long m = table.size();  // computing B_m
    Rational acc(0);
    for (unsigned long k = 0; k < m; ++k)
      acc += Rational(binomial(m + 1, k), BigInt(1)) * table[k];
    table.push_back(-acc / Rational(BigInt(m) + 1, BigInt(1)));
  }
  return table[n];
}

// Classical Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline RationalPolynomial bernoulli_poly(unsigned n) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k)
    c[n - k] = Rational(binomial(n, k), BigInt(1)) * bernoulli_number(k);
  return RationalPolynomial(std::move(c));
}

// zeta(-m, y) = -B_{m+1}(y) / (m+1), exact.
inline Rational hurwitz_value_nonpos(unsigned m, const Rational& y) {
  return -bernoulli_poly(m + 1).eval(y) / Rational(static_cast<long>(m) + 1);
}

namespace detail {

// Coefficients of (e^{w t} - 1) / t up to degree `order`:
// term j is w^{j+1} / (j+1)!.
inline std::vector<Rational> exp_ratio_series(const Rational& w,
                                              unsigned order) {
  std::vector<Rational> d(order + 1);
  Rational wpow = w;
  for (unsigned j = 0; j <= order; ++j) {
    d[j] = wpow / Rational(factorial(j + 1), BigInt(1));
    wpow *= w;
  }
  return d;
}

inline std::vector<Rational> series_multiply(const std::vector<Rational>& a,
                                             const std::vector<Rational>& b,
                                             unsigned order) {
  std::vector<Rational> p(order + 1, Rational(0));
  for (unsigned i = 0; i <= order && i < a.size(); ++i)
    for (unsigned j = 0; i + j <= order && j < b.size(); ++j)
      p[i + j] += a[i] * b[j];
  return p;
}

// Reciprocal power series of d (requires d[0] != 0), to degree `order`.
inline std::vector<Rational> series_invert(const std::vector<Rational>& d,
                                           unsigned order) {
  std::vector<Rational> e(order + 1, Rational(0));
  e[0] = Rational(1) / d[0];
  for (unsigned n = 1; n <= order; ++n) {
    Rational acc(0);
    for (unsigned j = 1; j <= n; ++j)
      acc += (j < d.size() ? d[j] : Rational(0)) * e[n - j];
    e[n] = -acc / d[0];
  }
  return e;
}

}  // namespace detail

// B_k(X | w_1..w_N) as a polynomial in X (degree k, leading coefficient
// (-1)^k / (w_1...w_N)). Memoized on (k, w) with the period order preserved.
inline RationalPolynomial bernoulli_barnes_poly(unsigned k,
                                                const PeriodVector& w) {
  using Key = std::pair<unsigned, std::vector<Rational>>;
  static std::map<Key, RationalPolynomial> memo;
  static std::mutex mu;
  const Key key{k, w.entries()};
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Denominator product prod_i (e^{w_i t} - 1)/t, then its reciprocal.
  std::vector<Rational> den = detail::exp_ratio_series(w[0], k);
  for (std::size_t i = 1; i < w.size(); ++i)
    den = detail::series_multiply(den, detail::exp_ratio_series(w[i], k), k);
  const std::vector<Rational> inv = detail::series_invert(den, k);

  // Multiply by e^{(S - X) t}: the t^m coefficient is (S - X)^m / m!.
  const Rational s = w.sum();
  RationalPolynomial result;
  RationalPolynomial numerator_term = RationalPolynomial::constant(Rational(1));
  const RationalPolynomial s_minus_x =
      RationalPolynomial::linear(s, Rational(-1));
  Rational inv_mfact(1);
  for (unsigned m = 0; m <= k; ++m) {
    if (m > 0) {
      numerator_term = numerator_term * s_minus_x;
      inv_mfact /= Rational(static_cast<long>(m));
    }
    result += numerator_term * (inv[k - m] * inv_mfact);
  }
  result = result * Rational(factorial(k), BigInt(1));
  memo.emplace(key, result);
  return result;
}

// zeta_N(-ell, x | w) = (-1)^ell ell! / (N+ell)! * B_{N+ell}(x | w), exact.
inline Rational barnes_value_nonpos(unsigned N, unsigned ell,
                                    const Rational& x,
                                    const PeriodVector& w) {
  if (w.size() != N)
    throw DomainError("period vector length does not match N");
  if (x.sign() <= 0) throw DomainError("barnes zeta requires x > 0");
  const Rational scale =
      Rational((ell % 2 == 0) ? factorial(ell) : -factorial(ell),
               factorial(N + ell));
  return scale * bernoulli_barnes_poly(N + ell, w).eval(x);
}

}  // namespace barnes
