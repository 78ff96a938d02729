// Shared evaluation context: truncation knobs and memo caches.
#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <tuple>

#include "barnes/rational.hpp"

namespace barnes {

using Complex = std::complex<double>;

// Tuning parameters plus caches reused across evaluations. A single context
// may be shared by concurrent callers; the caches are mutex-guarded and
// insert-once, so repeated lookups return identical values.
struct EvalContext {
  // Euler-Maclaurin evaluation of zeta(s, x) and its s-derivatives.
  int em_terms = 40;           // direct terms when Re(s) >= 1/2
  int em_terms_descending = 8; // direct terms when Re(s) < 1/2 (see hurwitz.hpp)
  int em_order = 15;           // Bernoulli correction terms

  // Accelerated limit for generalized Stieltjes constants.
  long stieltjes_terms = 10000;
  int stieltjes_order = 10;

  // Fourier/Dirichlet series truncation (multiple-gamma identities).
  std::size_t fourier_terms = 1000000;

  double target_tol = 1e-10;

  EvalContext() = default;
  EvalContext(const EvalContext&) = delete;
  EvalContext& operator=(const EvalContext&) = delete;

  // gamma_n(p/q) keyed by (n, p, q) with p/q reduced.
  using StieltjesKey = std::tuple<int, long, long>;
  mutable std::map<StieltjesKey, double> stieltjes_cache;
  mutable std::mutex stieltjes_mutex;

  // d^i/ds^i zeta(s, p/q) at integer s = m >= 2, keyed by (i, m, p, q).
  using HurwitzKey = std::tuple<int, int, long, long>;
  mutable std::map<HurwitzKey, double> hurwitz_cache;
  mutable std::mutex hurwitz_mutex;
};

}  // namespace barnes
