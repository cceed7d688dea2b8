#pragma once

#include <complex>
#include <vector>

#include "relfrob/rational.hpp"

namespace relfrob {

/// Element of the cyclotomic field Q(zeta_N), stored on the canonical power
/// basis zeta^0..zeta^(phi(N)-1) with exponents reduced modulo the N-th
/// cyclotomic polynomial. The representation is unique, so equality is
/// coefficient equality (after embedding into a common conductor).
///
/// Binary operations embed both operands into the lcm of the conductors.
/// The conductor is never minimized afterwards; a value equal to a rational
/// still reports is_rational() regardless of the conductor it is carried in.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), c_(1) {}          // zero in Q(zeta_1) = Q
  explicit Cyclotomic(const Rational& r) : conductor_(1), c_{r} {}
  Cyclotomic(const Rational& r, unsigned conductor);  // r embedded in Q(zeta_N)

  /// zeta_n^power (power may be any integer; reduced mod n).
  static Cyclotomic root_of_unity(unsigned n, long power);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws NotRational

  Cyclotomic embedded(unsigned m) const;  // conductor() must divide m
  Cyclotomic conj() const;                // zeta -> zeta^(-1)

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) {
    return a += b;
  }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) {
    return a -= b;
  }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) {
    return a *= b;
  }

  Cyclotomic& operator*=(const Rational& s);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) {
    return a *= s;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  /// Numeric embedding at zeta_N = exp(2*pi*i/N); used only as a test
  /// cross-check, never in any exact computation.
  std::complex<double> to_complex() const;

 private:
  Cyclotomic(unsigned conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), c_(std::move(coeffs)) {}
  // Reduce an exponent vector of length `conductor` (coefficients of
  // zeta^0..zeta^(N-1)) to the canonical basis.
  static Cyclotomic reduce(unsigned conductor, std::vector<Rational> raw);

  unsigned conductor_;
  std::vector<Rational> c_;  // size phi(conductor_)
};

unsigned euler_phi(unsigned n);

/// Coefficients of the N-th cyclotomic polynomial, ascending, monic.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

}  // namespace relfrob
