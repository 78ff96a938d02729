// Independent oracles for the test suite.
//
// Everything here is deliberately implemented by a DIFFERENT method than the
// library uses: brute-force lattice sums with midpoint integral tails,
// partition enumeration, subset enumeration, the Akiyama-Tanigawa scheme,
// Richardson-extrapolated finite differences. Slow and simple by design.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "barnes/rational.hpp"

namespace oracle {

using barnes::BigInt;
using barnes::Rational;
using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Direct lattice sum for zeta_N(s, x | w), real s > N.
//
// Recursive: level k sums T_k explicit translates of level k-1 and closes
// with a midpoint integral tail, which lowers s by one:
//   sum_{n >= T} F(c + n w; s) ~ F(c + (T - 1/2) w; s - 1) / (w (s - 1)).
// ---------------------------------------------------------------------------
inline double direct_barnes_sum_level(int k, double c, double s,
                                      const std::vector<double>& w, long T) {
  if (k == 0) return std::pow(c, -s);
  const double wk = w[k - 1];
  double acc = 0.0;
  for (long n = T - 1; n >= 0; --n)
    acc += direct_barnes_sum_level(k - 1, c + n * wk, s, w, T);
  acc += direct_barnes_sum_level(k - 1, c + (T - 0.5) * wk, s - 1.0, w, T) /
         (wk * (s - 1.0));
  return acc;
}

inline double direct_barnes_sum(unsigned N, double s, double x,
                                const std::vector<double>& w, long T) {
  return direct_barnes_sum_level(static_cast<int>(N), x, s, w, T);
}

// Direct Hurwitz zeta for complex s with Re s > 1 (midpoint tail).
inline Complex direct_hurwitz(const Complex& s, double x, long T) {
  Complex acc(0.0, 0.0);
  for (long n = T - 1; n >= 0; --n)
    acc += std::exp(-s * std::log(n + x));
  const double a = (T - 0.5) + x;
  acc += std::exp((1.0 - s) * std::log(a)) / (s - 1.0);
  return acc;
}

// ---------------------------------------------------------------------------
// Generalized Stieltjes constants: plain partial sum of Berndt's formula
//   gamma_n(x) = lim [ sum_{k<=m} log^n(k+x)/(k+x) - log^{n+1}(m+x)/(n+1) ]
// with the trapezoidal half-term correction - f(m)/2. Error O(log^n m / m^2).
// ---------------------------------------------------------------------------
inline double stieltjes_brute(int n, double x, long m) {
  const auto f = [&](double t) {
    const double u = t + x;
    return std::pow(std::log(u), n) / u;
  };
  double sum = 0.0, comp = 0.0;
  for (long k = m; k >= 0; --k) {
    const double y = f(static_cast<double>(k)) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum - std::pow(std::log(m + x), n + 1) / (n + 1) - f(m) / 2.0;
}

// ---------------------------------------------------------------------------
// Complete Bell polynomials by partition enumeration:
//   B_n(x_1..x_n) = sum over partitions (1^{m_1} 2^{m_2} ...) of n of
//     n! / prod_i (m_i! (i!)^{m_i}) * prod_i x_i^{m_i}.
// ---------------------------------------------------------------------------
inline void bell_partitions_rec(int remaining, int max_part,
                                std::vector<int>& mult,
                                const std::vector<double>& x, double& total) {
  if (remaining == 0) {
    double fact_n = 1.0;
    int n = 0;
    for (std::size_t i = 1; i < mult.size(); ++i) n += mult[i] * (int)i;
    for (int i = 2; i <= n; ++i) fact_n *= i;
    double denom = 1.0, prod = 1.0;
    for (std::size_t i = 1; i < mult.size(); ++i) {
      double ifact = 1.0;
      for (std::size_t j = 2; j <= i; ++j) ifact *= j;
      for (int r = 1; r <= mult[i]; ++r) denom *= r * ifact;
      for (int r = 0; r < mult[i]; ++r) prod *= x[i - 1];
    }
    total += fact_n / denom * prod;
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    ++mult[p];
    bell_partitions_rec(remaining - p, p, mult, x, total);
    --mult[p];
  }
}

inline double bell_via_partitions(const std::vector<double>& x, int n) {
  if (n == 0) return 1.0;
  std::vector<int> mult(n + 1, 0);
  double total = 0.0;
  bell_partitions_rec(n, n, mult, x, total);
  return total;
}

// ---------------------------------------------------------------------------
// Complete homogeneous symmetric polynomial h_ell over explicit values, by
// enumerating weakly increasing index tuples (repeats allowed). h_0 = 1;
// an empty value set with ell > 0 gives 0.
// ---------------------------------------------------------------------------
inline void symmetric_brute_rec(const std::vector<Rational>& values,
                                std::size_t start, unsigned remaining,
                                const Rational& prod, Rational& total) {
  if (remaining == 0) {
    total += prod;
    return;
  }
  for (std::size_t i = start; i < values.size(); ++i)
    symmetric_brute_rec(values, i, remaining - 1, prod * values[i], total);
}

inline Rational symmetric_brute(const std::vector<Rational>& values,
                                unsigned ell) {
  Rational total(0);
  symmetric_brute_rec(values, 0, ell, Rational(1), total);
  return total;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers by the Akiyama-Tanigawa transform (exact rationals).
// Yields the B_1 = +1/2 convention; equal to the library's B_n for n != 1.
// ---------------------------------------------------------------------------
inline Rational bernoulli_akiyama_tanigawa(int n) {
  std::vector<Rational> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

// ---------------------------------------------------------------------------
// Finite differences with one Richardson step: error O(h^4).
// ---------------------------------------------------------------------------
inline double fd1(const std::function<double(double)>& f, double t, double h) {
  const auto d = [&](double hh) { return (f(t + hh) - f(t - hh)) / (2 * hh); };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

inline double fd2(const std::function<double(double)>& f, double t, double h) {
  const auto d = [&](double hh) {
    return (f(t + hh) - 2.0 * f(t) + f(t - hh)) / (hh * hh);
  };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

inline double fd3(const std::function<double(double)>& f, double t, double h) {
  const auto d = [&](double hh) {
    return (f(t + 2 * hh) - 2.0 * f(t + hh) + 2.0 * f(t - hh) -
            f(t - 2 * hh)) /
           (2.0 * hh * hh * hh);
  };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

inline double fd4(const std::function<double(double)>& f, double t, double h) {
  const auto d = [&](double hh) {
    return (f(t + 2 * hh) - 4.0 * f(t + hh) + 6.0 * f(t) - 4.0 * f(t - hh) +
            f(t - 2 * hh)) /
           (hh * hh * hh * hh);
  };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

// Second derivative from the even part of f at spacings h, 2h, 3h only —
// never sampling t itself, for functions with a removable singularity there.
// Error O(h^4 f^(6)).
inline double fd2_nocenter(const std::function<double(double)>& f, double t,
                           double h) {
  const auto even = [&](double a) { return 0.5 * (f(t + a) + f(t - a)); };
  const double u1 = even(2 * h) - even(h);
  const double u2 = even(3 * h) - even(h);
  return (u1 * (16.0 / 3.0) - u2) / (4.0 * h * h);
}

inline double fd(int order, const std::function<double(double)>& f, double t,
                 double h) {
  switch (order) {
    case 0: return f(t);
    case 1: return fd1(f, t, h);
    case 2: return fd2(f, t, h);
    case 3: return fd3(f, t, h);
    case 4: return fd4(f, t, h);
    default: return std::nan("");
  }
}

}  // namespace oracle
