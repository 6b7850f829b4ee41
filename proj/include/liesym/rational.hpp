#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "liesym/errors.hpp"

namespace liesym {

/// Exact rational scalar over arbitrary-precision integers.
/// Always stored reduced, denominator >= 1, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : v_(n) {}                             // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpz_class z) : v_(std::move(z)) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  static Rational from_string(const std::string& s);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  /// "7", "-3/2"; integers print without the denominator.
  std::string to_string() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  // validate: optional sign, digits, optional "/digits"
  size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) throw DomainError("malformed rational literal: " + s);
  if (i != s.size()) {
    if (s[i] != '/') throw DomainError("malformed rational literal: " + s);
    ++i;
    size_t den_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++den_digits;
    if (den_digits == 0 || i != s.size())
      throw DomainError("malformed rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal: " + s);
  if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
  q.canonicalize();
  return Rational(q);
}

/// k! as an exact integer.
inline mpz_class factorial(int k) {
  mpz_class r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace liesym
