#include "relfrob/laurent.hpp"

#include <vector>

namespace relfrob {

LaurentPoly LaurentPoly::constant(const Rational& c, std::string var) {
  return monomial(c, 0, std::move(var));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp,
                                  std::string var) {
  LaurentPoly p(std::move(var));
  p.set(exp, c);
  return p;
}

void LaurentPoly::set(int exp, const Rational& v) {
  if (v.is_zero())
    c_.erase(exp);
  else
    c_[exp] = v;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw Error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw Error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) set(e, coeff(e) + v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) set(e, coeff(e) - v);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  std::map<int, Rational> out;
  for (const auto& [ea, va] : c_)
    for (const auto& [eb, vb] : o.c_) {
      Rational prod = va * vb;
      auto [it, fresh] = out.emplace(ea + eb, prod);
      if (!fresh) it->second += prod;
    }
  c_.clear();
  for (auto& [e, v] : out)
    if (!v.is_zero()) c_.emplace(e, std::move(v));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [e, v] : c_) v *= s;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly acc = constant(Rational(1), var_);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(int exp) const {
  LaurentPoly r(var_);
  for (const auto& [e, v] : c_) r.c_.emplace(e + exp, v);
  return r;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error("division by zero polynomial");
  if (is_zero()) return LaurentPoly(var_);
  // shift both to ordinary polynomials and long-divide over Q
  int na = min_exp(), nd = d.min_exp();
  std::vector<Rational> num(static_cast<std::size_t>(max_exp() - na + 1));
  for (const auto& [e, v] : c_) num[static_cast<std::size_t>(e - na)] = v;
  std::vector<Rational> den(static_cast<std::size_t>(d.max_exp() - nd + 1));
  for (const auto& [e, v] : d.c_) den[static_cast<std::size_t>(e - nd)] = v;
  if (num.size() < den.size())
    throw InternalInconsistency("inexact polynomial division (degree)");
  std::vector<Rational> quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational q = num[i + den.size() - 1] / lead;
    quot[i] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] -= q * den[j];
  }
  for (const Rational& r : num)
    if (!r.is_zero())
      throw InternalInconsistency("inexact polynomial division (remainder)");
  LaurentPoly result(var_);
  for (std::size_t i = 0; i < quot.size(); ++i)
    result.set(static_cast<int>(i) + na - nd, quot[i]);
  return result;
}

Rational LaurentPoly::eval(const Rational& q) const {
  if (q.is_zero()) {
    if (!is_polynomial())
      throw ZeroBase("Laurent polynomial with negative exponents at 0");
    return coeff(0);
  }
  Rational sum(0);
  for (const auto& [e, v] : c_) sum += v * q.pow(e);
  return sum;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  // highest exponent first, conventional reading order
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, v] = *it;
    std::string term;
    Rational av = v < Rational(0) ? -v : v;
    if (e == 0) {
      term = av.str();
    } else {
      if (av != Rational(1)) term = av.str() + "*";
      term += var_;
      if (e != 1) term += "^" + std::to_string(e);
    }
    if (out.empty())
      out = (v < Rational(0) ? "-" : "") + term;
    else
      out += (v < Rational(0) ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace relfrob
