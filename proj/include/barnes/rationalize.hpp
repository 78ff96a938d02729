// Rational reconstruction of floating-point inputs via continued fractions.
#pragma once

#include <cmath>

#include "barnes/errors.hpp"
#include "barnes/rational.hpp"

namespace barnes {

// Best continued-fraction convergent p/q of x with q <= max_den. Exactly
// representable inputs terminate early and are returned exactly (as long as
// their reduced denominator fits the bound). Throws ApproximationError when
// the result would be 0 or the input is not a positive finite number.
inline Rational best_rational(double x, long max_den = 1000000) {
  if (!(std::isfinite(x)) || x <= 0.0)
    throw ApproximationError("cannot rationalize non-positive value");
  if (max_den < 1) throw DomainError("max_den must be >= 1");

  // h_n = a_n h_{n-1} + h_{n-2}, seeded h_{-1} = 1, h_{-2} = 0 (and the
  // mirrored seeds for the denominators k).
  BigInt h_prev(0), k_prev(1);
  BigInt h(1), k(0);
  double rem = x;
  for (int step = 0; step < 64; ++step) {
    const double a_f = std::floor(rem);
    BigInt a(a_f);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h; k_prev = k;
    h = h_next; k = k_next;
    const double frac = rem - a_f;
    // Once the residual is at the noise floor of double, the convergent is
    // as exact as the input itself.
    if (frac < 1e-13 || 1.0 / frac > 1e15) break;
    rem = 1.0 / frac;
  }
  if (sgn(h) == 0)
    throw ApproximationError(
        "rationalization produced 0; increase max_den or the input");
  return Rational(h, k);
}

}  // namespace barnes
