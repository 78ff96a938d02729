// Dense univariate polynomials over barnes::Rational (ascending coefficients).
#pragma once

#include <string>
#include <vector>

#include "barnes/rational.hpp"

namespace barnes {

class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs)
      : c_(std::move(coeffs)) {
    normalize_();
  }
  static RationalPolynomial constant(const Rational& a) {
    return RationalPolynomial({a});
  }
  // a + b*x
  static RationalPolynomial linear(const Rational& a, const Rational& b) {
    return RationalPolynomial({a, b});
  }

  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {  // Horner
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].as_double();
    return acc;
  }

  RationalPolynomial derivative() const {
    if (c_.size() <= 1) return RationalPolynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPolynomial(std::move(d));
  }

  // p(a + b*x): composition with a linear argument.
  RationalPolynomial compose_linear(const Rational& a,
                                    const Rational& b) const {
    RationalPolynomial result;
    RationalPolynomial arg = linear(a, b);
    RationalPolynomial power = constant(Rational(1));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      result += power * constant(c_[i]);
      if (i + 1 < c_.size()) power = power * arg;
    }
    return result;
  }

  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize_();
    return *this;
  }
  RationalPolynomial& operator-=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize_();
    return *this;
  }
  friend RationalPolynomial operator+(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a,
                                      const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RationalPolynomial();
    std::vector<Rational> p(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        p[i + j] += a.c_[i] * b.c_[j];
    return RationalPolynomial(std::move(p));
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const Rational& s) {
    std::vector<Rational> p(a.c_);
    for (auto& ci : p) ci *= s;
    return RationalPolynomial(std::move(p));
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a) {
    return a * Rational(-1);
  }

  friend bool operator==(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return !(a == b);
  }

  // Human-readable form, lowest power first: "1/2 - 1/2*x + x^2".
  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      Rational a = c_[i];
      if (first) {
        if (a.sign() < 0) { out += "-"; a = -a; }
      } else {
        out += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0) a = -a;
      }
      const bool unit = (a == Rational(1));
      if (i == 0) {
        out += a.str();
      } else {
        if (!unit) out += a.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
      first = false;
    }
    return first ? "0" : out;
  }

 private:
  void normalize_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;  // c_[i] multiplies x^i
};

}  // namespace barnes
