// Reduction of the Barnes zeta function with rational periods to a finite
// combination of Hurwitz zeta functions.
//
// For reduced periods w_i = r_i/q_i, let w = lcm(r_1..r_N)/gcd(q_1..q_N).
// Every ell_i = w/w_i is then a positive integer, and summing the defining
// series over residue classes n_i = k_i (mod ell_i) gives
//
//   zeta_N(s, x | w_1..w_N)
//     = w^{-s}/(N-1)! * sum_{k_1=0}^{ell_1-1} ... sum_{k_N=0}^{ell_N-1}
//       sum_{k=0}^{N-1} c_k(y) * zeta(s - k, y),
//
// where y = (x + sum_i k_i w_i)/w and c_k(y) is the t^k coefficient of
//   C_{N,y}(t) = (t - y + 1)(t - y + 2)...(t - y + N - 1)
// (empty product for N = 1). Terms sharing (k, y) are merged and zero
// coefficients dropped; what remains is the HurwitzDecomposition.
#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "barnes/context.hpp"
#include "barnes/errors.hpp"
#include "barnes/hurwitz.hpp"
#include "barnes/polynomial.hpp"
#include "barnes/rational.hpp"
#include "barnes/rationalize.hpp"

namespace barnes {

struct ScaledParams {
  Rational w;               // common scale
  std::vector<long> ells;   // lattice extents ell_i = w / w_i
};

inline ScaledParams scale_params(const PeriodVector& w_vec) {
  BigInt num_lcm = w_vec[0].num();
  BigInt den_gcd = w_vec[0].den();
  for (std::size_t i = 1; i < w_vec.size(); ++i) {
    num_lcm = lcm(num_lcm, w_vec[i].num());
    den_gcd = gcd(den_gcd, w_vec[i].den());
  }
  ScaledParams out;
  out.w = Rational(num_lcm, den_gcd);
  out.ells.reserve(w_vec.size());
  for (std::size_t i = 0; i < w_vec.size(); ++i) {
    const Rational ratio = out.w / w_vec[i];
    if (!ratio.is_integer() || ratio.sign() <= 0 || !ratio.num().fits_slong_p())
      throw DomainError("scale does not produce integer lattice extents");
    out.ells.push_back(ratio.num().get_si());
  }
  return out;
}

// C_{N,x}(t) as a polynomial in t: prod_{i=1}^{N-1} (t + i - x).
inline RationalPolynomial c_polynomial(unsigned N, const Rational& x) {
  RationalPolynomial p = RationalPolynomial::constant(Rational(1));
  for (unsigned i = 1; i < N; ++i)
    p = p * RationalPolynomial::linear(Rational(static_cast<long>(i)) - x,
                                       Rational(1));
  return p;
}

namespace detail {

// Same product with the argument left symbolic: entry k is the t^k
// coefficient of prod (t + i - y), as a polynomial in y.
inline std::vector<RationalPolynomial> c_coefficients_in_y(unsigned N) {
  std::vector<RationalPolynomial> c = {
      RationalPolynomial::constant(Rational(1))};
  for (unsigned i = 1; i < N; ++i) {
    const RationalPolynomial lin =
        RationalPolynomial::linear(Rational(static_cast<long>(i)),
                                   Rational(-1));  // i - y
    std::vector<RationalPolynomial> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k] * lin;
      next[k + 1] += c[k];
    }
    c = std::move(next);
  }
  return c;
}

// Coefficients of prod_{i=1}^{N-1}(t + i - y) for floating y.
inline std::vector<double> c_coefficients_at(unsigned N, double y) {
  std::vector<double> c = {1.0};
  for (unsigned i = 1; i < N; ++i) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k] * (i - y);
      next[k + 1] += c[k];
    }
    c = std::move(next);
  }
  return c;
}

// Odometer over the lattice {0..ell_1-1} x ... x {0..ell_N-1}.
template <class Fn>
void for_each_lattice_point(const std::vector<long>& ells, Fn&& fn) {
  std::vector<long> k(ells.size(), 0);
  for (;;) {
    fn(k);
    std::size_t i = 0;
    for (; i < k.size(); ++i) {
      if (++k[i] < ells[i]) break;
      k[i] = 0;
    }
    if (i == k.size()) return;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact lane
// ---------------------------------------------------------------------------

struct HurwitzTerm {
  unsigned k = 0;   // contributes coeff * zeta(s - k, y)
  Rational y;
  Rational coeff;   // includes the 1/(N-1)! normalization
};

struct HurwitzDecomposition {
  unsigned N = 0;
  Rational w;  // zeta_N(s, x | w_vec) = w^{-s} * sum_terms coeff * zeta(s-k, y)
  std::vector<HurwitzTerm> terms;
};

inline HurwitzDecomposition decompose(unsigned N, const Rational& x,
                                      const PeriodVector& w_vec) {
  if (w_vec.size() != N)
    throw DomainError("period vector length does not match N");
  if (x.sign() <= 0) throw DomainError("decompose requires x > 0");
  const ScaledParams sp = scale_params(w_vec);
  const Rational inv_fact(BigInt(1), factorial(N - 1));

  std::map<std::pair<Rational, unsigned>, Rational> merged;
  detail::for_each_lattice_point(sp.ells, [&](const std::vector<long>& kvec) {
    Rational shift(0);
    for (std::size_t i = 0; i < kvec.size(); ++i)
      shift += Rational(kvec[i]) * w_vec[i];
    const Rational y = (x + shift) / sp.w;
    const RationalPolynomial c = c_polynomial(N, y);
    for (int k = 0; k <= c.degree(); ++k) {
      const Rational coeff = c[k] * inv_fact;
      if (!coeff.is_zero())
        merged[{y, static_cast<unsigned>(k)}] += coeff;
    }
  });

  HurwitzDecomposition out;
  out.N = N;
  out.w = sp.w;
  for (const auto& [key, coeff] : merged)
    if (!coeff.is_zero()) out.terms.push_back({key.second, key.first, coeff});
  return out;
}

// ---------------------------------------------------------------------------
// Real-x lane: x stays floating; periods are rationalized first.
// ---------------------------------------------------------------------------

struct RealHurwitzTerm {
  unsigned k = 0;
  double y = 0.0;
  double coeff = 0.0;
};

struct RealHurwitzDecomposition {
  unsigned N = 0;
  Rational w;  // scale is exact (periods were rationalized)
  std::vector<RealHurwitzTerm> terms;
};

inline RealHurwitzDecomposition decompose_real(unsigned N, double x,
                                               const std::vector<double>& w_in,
                                               long max_den = 1000000) {
  if (w_in.size() != N)
    throw DomainError("period vector length does not match N");
  if (!(x > 0.0)) throw DomainError("decompose requires x > 0");
  std::vector<Rational> w_rat;
  w_rat.reserve(N);
  for (double wi : w_in) w_rat.push_back(best_rational(wi, max_den));
  const PeriodVector w_vec(w_rat);
  const ScaledParams sp = scale_params(w_vec);
  const double inv_fact = Rational(BigInt(1), factorial(N - 1)).as_double();
  const double x_over_w = x / sp.w.as_double();

  // Merge on the exact lattice shift so equal arguments combine exactly.
  std::map<std::pair<Rational, unsigned>, double> merged;
  detail::for_each_lattice_point(sp.ells, [&](const std::vector<long>& kvec) {
    Rational shift(0);
    for (std::size_t i = 0; i < kvec.size(); ++i)
      shift += Rational(kvec[i]) * w_vec[i];
    shift /= sp.w;
    const double y = x_over_w + shift.as_double();
    const std::vector<double> c = detail::c_coefficients_at(N, y);
    for (std::size_t k = 0; k < c.size(); ++k)
      merged[{shift, static_cast<unsigned>(k)}] += c[k] * inv_fact;
  });

  RealHurwitzDecomposition out;
  out.N = N;
  out.w = sp.w;
  for (const auto& [key, coeff] : merged)
    if (coeff != 0.0)
      out.terms.push_back(
          {key.second, x_over_w + key.first.as_double(), coeff});
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic lane: x is left as a formal variable (used for display/reporting).
// Each term contributes coeff(x) * zeta(s - k, x/w + shift).
// ---------------------------------------------------------------------------

struct SymbolicHurwitzTerm {
  unsigned k = 0;
  Rational shift;            // argument is x/w + shift
  RationalPolynomial coeff;  // polynomial in x
};

struct SymbolicHurwitzDecomposition {
  unsigned N = 0;
  Rational w;
  std::vector<SymbolicHurwitzTerm> terms;
};

inline SymbolicHurwitzDecomposition decompose_symbolic(
    unsigned N, const PeriodVector& w_vec) {
  if (w_vec.size() != N)
    throw DomainError("period vector length does not match N");
  const ScaledParams sp = scale_params(w_vec);
  const Rational inv_fact(BigInt(1), factorial(N - 1));
  const Rational inv_w = Rational(1) / sp.w;
  const std::vector<RationalPolynomial> c_in_y =
      detail::c_coefficients_in_y(N);

  std::map<std::pair<Rational, unsigned>, RationalPolynomial> merged;
  detail::for_each_lattice_point(sp.ells, [&](const std::vector<long>& kvec) {
    Rational shift(0);
    for (std::size_t i = 0; i < kvec.size(); ++i)
      shift += Rational(kvec[i]) * w_vec[i];
    shift /= sp.w;
    for (std::size_t k = 0; k < c_in_y.size(); ++k) {
      // substitute y = shift + x/w into the coefficient polynomial
      const RationalPolynomial in_x =
          c_in_y[k].compose_linear(shift, inv_w) * inv_fact;
      if (!in_x.is_zero())
        merged[{shift, static_cast<unsigned>(k)}] += in_x;
    }
  });

  SymbolicHurwitzDecomposition out;
  out.N = N;
  out.w = sp.w;
  for (const auto& [key, coeff] : merged)
    if (!coeff.is_zero()) out.terms.push_back({key.second, key.first, coeff});
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline void guard_barnes_poles(const Complex& s, unsigned N) {
  for (unsigned j = 1; j <= N; ++j)
    if (std::abs(s - Complex(static_cast<double>(j), 0.0)) < 1e-12)
      throw PoleError("zeta_N(s, ...) has a pole at s = " + std::to_string(j));
}

}  // namespace detail

inline Complex eval_decomposition(const HurwitzDecomposition& d,
                                  const Complex& s, const EvalContext& ctx) {
  detail::guard_barnes_poles(s, d.N);
  Complex acc(0.0, 0.0);
  for (const auto& t : d.terms)
    acc += t.coeff.as_double() *
           hurwitz_zeta(s - Complex(static_cast<double>(t.k), 0.0),
                        t.y.as_double(), ctx);
  return std::exp(-s * std::log(d.w.as_double())) * acc;
}

inline Complex eval_decomposition(const RealHurwitzDecomposition& d,
                                  const Complex& s, const EvalContext& ctx) {
  detail::guard_barnes_poles(s, d.N);
  Complex acc(0.0, 0.0);
  for (const auto& t : d.terms)
    acc += t.coeff *
           hurwitz_zeta(s - Complex(static_cast<double>(t.k), 0.0), t.y, ctx);
  return std::exp(-s * std::log(d.w.as_double())) * acc;
}

// Multiple Hurwitz zeta with unit periods, zeta_N(s, x | 1,...,1), through
// the same coefficient identity (no lattice needed since w = 1):
//   zeta_N(s, x) = 1/(N-1)! * sum_k c_k(x) zeta(s - k, x).
inline Complex multiple_hurwitz_zeta(unsigned N, const Complex& s, double x,
                                     const EvalContext& ctx) {
  if (N == 0) throw DomainError("N must be >= 1");
  detail::guard_barnes_poles(s, N);
  const std::vector<double> c = detail::c_coefficients_at(N, x);
  double inv_fact = 1.0;
  for (unsigned i = 2; i < N; ++i) inv_fact /= i;
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k)
    acc += c[k] *
           hurwitz_zeta(s - Complex(static_cast<double>(k), 0.0), x, ctx);
  return inv_fact * acc;
}

// General rational periods: decompose, then evaluate each ordinary Hurwitz
// zeta term numerically.
inline Complex multiple_hurwitz_zeta(unsigned N, const Complex& s,
                                     const Rational& x,
                                     const PeriodVector& w_vec,
                                     const EvalContext& ctx) {
  return eval_decomposition(decompose(N, x, w_vec), s, ctx);
}

// Real periods: rationalize first (denominators <= max_den), then evaluate.
inline Complex multiple_hurwitz_zeta(unsigned N, const Complex& s, double x,
                                     const std::vector<double>& w_vec,
                                     const EvalContext& ctx,
                                     long max_den = 1000000) {
  return eval_decomposition(decompose_real(N, x, w_vec, max_den), s, ctx);
}

// Both sides of the descent identity
//   (N-1) zeta_N(s, x) = zeta_{N-1}(s-1, x) + (N-1-x) zeta_{N-1}(s, x).
struct RecurrencePair {
  Complex lhs;
  Complex rhs;
};

inline RecurrencePair recurrence_check(unsigned N, const Complex& s, double x,
                                       const EvalContext& ctx) {
  if (N < 2) throw DomainError("recurrence check needs N >= 2");
  RecurrencePair out;
  out.lhs = Complex(static_cast<double>(N - 1), 0.0) *
            multiple_hurwitz_zeta(N, s, x, ctx);
  out.rhs = multiple_hurwitz_zeta(N - 1, s - Complex(1.0, 0.0), x, ctx) +
            Complex(N - 1.0 - x, 0.0) * multiple_hurwitz_zeta(N - 1, s, x, ctx);
  return out;
}

}  // namespace barnes
