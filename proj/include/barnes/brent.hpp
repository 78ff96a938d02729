// Brent's method: bracketing root finder combining bisection, secant and
// inverse quadratic interpolation.
#pragma once

#include <cmath>
#include <utility>

#include "barnes/errors.hpp"

namespace barnes {

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // f(root)
  int iterations = 0;
};

template <class F>
RootResult brent_find_root(F&& f, double a, double b, double xtol = 1e-13,
                           int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if ((fa > 0.0) == (fb > 0.0))
    throw NoSignChangeError("no sign change over the bracket");

  double c = a, fc = fa;
  double d = b - a, e = d;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa;
      d = b - a; e = d;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * 1e-16 * std::fabs(b) + 0.5 * xtol;
    const double m = 0.5 * (c - b);
    if (std::fabs(m) <= tol || fb == 0.0) break;
    if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
      // Attempt interpolation.
      const double s = fb / fa;
      double p, q;
      if (a == c) {  // secant
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::fmin(3.0 * m * q - std::fabs(tol * q),
                              std::fabs(e * q))) {
        e = d; d = p / q;
      } else {
        d = m; e = m;  // interpolation rejected: bisect
      }
    } else {
      d = m; e = m;
    }
    a = b; fa = fb;
    b += (std::fabs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return {b, fb, iter};
}

}  // namespace barnes
