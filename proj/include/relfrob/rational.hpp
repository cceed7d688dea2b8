#pragma once

#include <gmpxx.h>

#include <string>

#include "relfrob/errors.hpp"

namespace relfrob {

using Integer = mpz_class;

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }

  static Rational parse(const std::string& s);

  const mpz_class numerator() const { return v_.get_num(); }
  const mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_nonneg_integer() const { return is_integer() && v_ >= 0; }
  Integer to_integer() const {
    if (!is_integer()) throw NotRational("not an integer: " + str());
    return v_.get_num();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  /// Exact power; negative exponents invert (ZeroBase on 0^negative).
  Rational pow(long e) const;

  Rational inverse() const {
    if (is_zero()) throw ZeroBase("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  double to_double() const { return v_.get_d(); }

  /// "p/q", or plain "p" when the denominator is 1.
  std::string str() const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  unsigned long a = e < 0 ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
  if (is_zero()) {
    if (e < 0) throw ZeroBase("0 raised to a negative power");
    return Rational(0);
  }
  Rational r(pow_int(Integer(v_.get_num()), a), pow_int(Integer(v_.get_den()), a));
  return e < 0 ? r.inverse() : r;
}

inline std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

}  // namespace relfrob
