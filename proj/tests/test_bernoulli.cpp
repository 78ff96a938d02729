// Exact lane: Bernoulli numbers/polynomials, their multi-period
// generalization, and exact zeta values at non-positive integers.
#include <catch2/catch_amalgamated.hpp>

#include "barnes/bernoulli.hpp"
#include "oracles.hpp"

using namespace barnes;

TEST_CASE("combinatorial helpers") {
  CHECK(binomial(10, 3) == BigInt(120));
  CHECK(binomial(5, 0) == BigInt(1));
  CHECK(binomial(3, 5) == BigInt(0));
  CHECK(factorial(0) == BigInt(1));
  CHECK(factorial(10) == BigInt(3628800));
}

TEST_CASE("bernoulli numbers against the Akiyama-Tanigawa scheme") {
  // The oracle produces the B_1 = +1/2 convention; the library uses
  // B_1 = -1/2 (generating function t/(e^t - 1)). They agree for n != 1.
  for (int n = 0; n <= 24; ++n) {
    if (n == 1) continue;
    INFO("n = " << n);
    CHECK(bernoulli_number(n) == oracle::bernoulli_akiyama_tanigawa(n));
  }
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  CHECK(bernoulli_number(13) == Rational(0));
}

TEST_CASE("classical bernoulli polynomials") {
  const RationalPolynomial b2 = bernoulli_poly(2);
  CHECK(b2.coeff(0) == Rational(1, 6));
  CHECK(b2.coeff(1) == Rational(-1));
  CHECK(b2.coeff(2) == Rational(1));

  // B_n'(x) = n B_{n-1}(x)
  for (unsigned n = 1; n <= 8; ++n)
    CHECK(bernoulli_poly(n).derivative() ==
          bernoulli_poly(n - 1) * Rational(static_cast<long>(n)));

  // difference identity B_n(x+1) - B_n(x) = n x^{n-1}
  for (unsigned n = 1; n <= 6; ++n) {
    const auto bn = bernoulli_poly(n);
    const auto shifted = bn.compose_linear(Rational(1), Rational(1));
    for (long x = -2; x <= 3; ++x) {
      const Rational xr(x);
      CHECK(shifted.eval(xr) - bn.eval(xr) ==
            Rational(static_cast<long>(n)) * pow(xr, n - 1));
    }
  }
}

TEST_CASE("hurwitz zeta at non-positive integers, exact") {
  // zeta(0, x) = 1/2 - x
  CHECK(hurwitz_value_nonpos(0, Rational(1, 3)) ==
        Rational(1, 2) - Rational(1, 3));
  CHECK(hurwitz_value_nonpos(0, Rational(1)) == Rational(-1, 2));
  // zeta(-1) = -1/12, zeta(-3) = 1/120
  CHECK(hurwitz_value_nonpos(1, Rational(1)) == Rational(-1, 12));
  CHECK(hurwitz_value_nonpos(3, Rational(1)) == Rational(1, 120));
  // zeta(-2m) = 0 at x = 1
  CHECK(hurwitz_value_nonpos(2, Rational(1)) == Rational(0));
  CHECK(hurwitz_value_nonpos(4, Rational(1)) == Rational(0));
}

TEST_CASE("multi-period bernoulli polynomials: structure") {
  const PeriodVector w{Rational(1), Rational(1, 2), Rational(1, 3)};

  // constant term of the generating function: B_0 = 1/(w_1 w_2 w_3)
  const RationalPolynomial b0 = bernoulli_barnes_poly(0, w);
  CHECK(b0.degree() == 0);
  CHECK(b0.coeff(0) == Rational(6));

  // degree k, leading coefficient (-1)^k / (w_1...w_N)
  for (unsigned k = 1; k <= 5; ++k) {
    const RationalPolynomial bk = bernoulli_barnes_poly(k, w);
    CHECK(bk.degree() == static_cast<int>(k));
    CHECK(bk.coeff(k) ==
          (k % 2 == 0 ? Rational(6) : Rational(-6)));
  }

  // single period w = (1): B_k(X | 1) = B_k(1 - X)
  const PeriodVector unit{Rational(1)};
  for (unsigned k = 0; k <= 8; ++k) {
    const auto lhs = bernoulli_barnes_poly(k, unit);
    const auto rhs = bernoulli_poly(k).compose_linear(Rational(1),
                                                      Rational(-1));
    CHECK(lhs == rhs);
  }

  // symmetric under permutation of the periods
  const PeriodVector wp{Rational(1, 3), Rational(1), Rational(1, 2)};
  for (unsigned k = 0; k <= 5; ++k)
    CHECK(bernoulli_barnes_poly(k, w) == bernoulli_barnes_poly(k, wp));
}

TEST_CASE("pinned cubic for periods (1, 1/2, 1/3)") {
  // Hand-derived from the generating function
  //   t^3 e^{(11/6 - X) t} / ((e^t-1)(e^{t/2}-1)(e^{t/3}-1)):
  //   B_3(X | 1, 1/2, 1/3) = 11/4 - 157/12 X + 33/2 X^2 - 6 X^3.
  const PeriodVector w{Rational(1), Rational(1, 2), Rational(1, 3)};
  const RationalPolynomial b3 = bernoulli_barnes_poly(3, w);
  CHECK(b3.coeff(0) == Rational(11, 4));
  CHECK(b3.coeff(1) == Rational(-157, 12));
  CHECK(b3.coeff(2) == Rational(33, 2));
  CHECK(b3.coeff(3) == Rational(-6));
  // X = 1/3 is a root: zeta_3(0, 1/3 | 1, 1/2, 1/3) = 0.
  CHECK(b3.eval(Rational(1, 3)) == Rational(0));
}

TEST_CASE("barnes zeta at non-positive integers, exact") {
  const PeriodVector w{Rational(1), Rational(1, 2), Rational(1, 3)};
  CHECK(barnes_value_nonpos(3, 0, Rational(1, 3), w) == Rational(0));

  // N = 1 reduces to the Hurwitz values
  const PeriodVector unit{Rational(1)};
  for (unsigned ell = 0; ell <= 6; ++ell)
    CHECK(barnes_value_nonpos(1, ell, Rational(2, 7), unit) ==
          hurwitz_value_nonpos(ell, Rational(2, 7)));

  // homogeneity: zeta_N(-ell, a x | a w) = a^ell zeta_N(-ell, x | w)
  const Rational a(3, 5);
  const PeriodVector w2{Rational(1), Rational(1, 2)};
  const PeriodVector w2s{Rational(1) * a, Rational(1, 2) * a};
  for (unsigned ell = 0; ell <= 4; ++ell)
    CHECK(barnes_value_nonpos(2, ell, Rational(1, 3) * a, w2s) ==
          pow(a, ell) * barnes_value_nonpos(2, ell, Rational(1, 3), w2));

  CHECK_THROWS_AS(barnes_value_nonpos(2, 0, Rational(1, 3), w), DomainError);
  CHECK_THROWS_AS(barnes_value_nonpos(3, 0, Rational(-1, 3), w), DomainError);
  CHECK_THROWS_AS(barnes_value_nonpos(3, 0, Rational(0), w), DomainError);
}
