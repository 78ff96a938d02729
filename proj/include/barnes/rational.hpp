// Arbitrary-precision rational numbers and positive period vectors.
//
// Rational wraps GMP's mpq_class. Invariants (maintained by every operation):
//   * the fraction is always in lowest terms,
//   * the denominator is strictly positive,
//   * zero is represented as 0/1.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "barnes/errors.hpp"

namespace barnes {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, mirrors int
  Rational(long num, long den) : q_(num, den) { canonicalize_(); }
  Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    canonicalize_();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  const mpq_class& raw() const { return q_; }
  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Nearest double; a single correctly-performed rounding of num/den.
  double as_double() const { return q_.get_d(); }

  // Largest integer <= value.
  BigInt floor() const {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return f;
  }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

 private:
  void canonicalize_() {
    if (q_.get_den() == 0) throw DomainError("rational with denominator 0");
    q_.canonicalize();
  }

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// r^e for integer e (negative e inverts; r must be nonzero then).
inline Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw DomainError("0 raised to a negative power");
    return Rational(1) / pow(r, -e);
  }
  Rational acc(1), base(r);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Parses "a", "-a", "a/b" or a plain decimal like "0.75" / "-1.25e-3" is not
// supported (no exponent); decimals become exact base-ten fractions.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string ns = text.substr(0, slash);
    const std::string ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty())
      throw DomainError("malformed rational literal: " + text);
    try {
      // base 10 always: the default base-0 constructor would read a leading
      // zero as octal
      return Rational(BigInt(ns, 10), BigInt(ds, 10));
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed rational literal: " + text);
    }
  }
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos)
      return Rational(BigInt(text, 10), BigInt(1));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument(text);
    BigInt den(1);
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(BigInt(digits, 10), den);
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal: " + text);
  }
}

// A tuple of strictly positive rational periods (w_1, ..., w_N).
class PeriodVector {
 public:
  PeriodVector() = default;
  explicit PeriodVector(std::vector<Rational> w) : w_(std::move(w)) {
    validate_();
  }
  PeriodVector(std::initializer_list<Rational> w) : w_(w) { validate_(); }

  std::size_t size() const { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  const std::vector<Rational>& entries() const { return w_; }
  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }

  Rational product() const {
    Rational p(1);
    for (const auto& w : w_) p *= w;
    return p;
  }
  Rational sum() const {
    Rational s(0);
    for (const auto& w : w_) s += w;
    return s;
  }

  friend bool operator==(const PeriodVector& a, const PeriodVector& b) {
    return a.w_ == b.w_;
  }
  friend bool operator<(const PeriodVector& a, const PeriodVector& b) {
    return std::lexicographical_compare(a.w_.begin(), a.w_.end(),
                                        b.w_.begin(), b.w_.end());
  }

 private:
  void validate_() const {
    if (w_.empty()) throw DomainError("period vector must be non-empty");
    for (const auto& w : w_)
      if (w.sign() <= 0)
        throw DomainError("periods must be strictly positive");
  }

  std::vector<Rational> w_;
};

}  // namespace barnes
