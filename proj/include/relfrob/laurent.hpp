#pragma once

#include <map>
#include <string>

#include "relfrob/rational.hpp"

namespace relfrob {

/// Laurent polynomial in one variable with exact rational coefficients,
/// stored sparsely (no zero coefficients). The variable name is
/// informational only; arithmetic takes the name from the left operand.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

  static LaurentPoly constant(const Rational& c, std::string var = "q");
  static LaurentPoly monomial(const Rational& c, int exp,
                              std::string var = "q");
  static LaurentPoly variable(std::string var = "q") {
    return monomial(Rational(1), 1, std::move(var));
  }

  const std::string& var() const { return var_; }
  const std::map<int, Rational>& coefficients() const { return c_; }
  Rational coeff(int exp) const;
  bool is_zero() const { return c_.empty(); }
  bool is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }
  int min_exp() const;  // requires nonzero
  int max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) {
    return a *= b;
  }
  LaurentPoly& operator*=(const Rational& s);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) {
    return a *= s;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  LaurentPoly pow(unsigned e) const;
  LaurentPoly shifted(int exp) const;  // multiply by var^exp

  /// Exact quotient; throws InternalInconsistency when the division leaves
  /// a remainder.
  LaurentPoly divided_exact(const LaurentPoly& d) const;

  /// Exact evaluation. ZeroBase when q = 0 and negative exponents exist.
  Rational eval(const Rational& q) const;

  std::string str() const;

 private:
  void set(int exp, const Rational& v);
  std::string var_ = "q";
  std::map<int, Rational> c_;
};

}  // namespace relfrob
