#include "relfrob/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace relfrob {

namespace {

// Dense integer polynomials, ascending coefficients, used only to set up
// the per-conductor reduction tables.
using ZPoly = std::vector<Integer>;

ZPoly zpoly_exact_div(const ZPoly& num, const ZPoly& den) {
  ZPoly rem = num;
  ZPoly quot(num.size() - den.size() + 1, Integer(0));
  const Integer& lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer q = rem[i + den.size() - 1] / lead;
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j)
      rem[i + j] -= q * den[j];
  }
  for (const Integer& c : rem)
    if (c != 0) throw InternalInconsistency("inexact cyclotomic division");
  return quot;
}

struct ConductorData {
  unsigned n = 1;
  unsigned phi = 1;
  // power[j] = canonical coefficients of zeta^j for j in [0, n).
  std::vector<std::vector<Integer>> power;
};

const ZPoly& cyclo_poly_locked(unsigned n,
                               std::map<unsigned, ZPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // (x^n - 1) / prod_{d | n, d < n} Phi_d
  ZPoly num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = zpoly_exact_div(num, cyclo_poly_locked(d, memo));
  return memo.emplace(n, std::move(num)).first->second;
}

std::mutex g_cyclo_mutex;
std::map<unsigned, ZPoly> g_cyclo_polys;
std::map<unsigned, std::shared_ptr<const ConductorData>> g_conductors;

std::shared_ptr<const ConductorData> conductor_data(unsigned n) {
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = g_conductors.find(n);
  if (it != g_conductors.end()) return it->second;

  const ZPoly& phi_n = cyclo_poly_locked(n, g_cyclo_polys);
  auto data = std::make_shared<ConductorData>();
  data->n = n;
  data->phi = static_cast<unsigned>(phi_n.size() - 1);
  data->power.resize(n);
  // x^j mod Phi_n, built incrementally; Phi_n is monic so
  // x^phi = -(lower coefficients).
  std::vector<Integer> cur(data->phi, Integer(0));
  cur[0] = 1;
  data->power[0] = cur;
  for (unsigned j = 1; j < n; ++j) {
    Integer top = data->phi >= 1 ? cur[data->phi - 1] : Integer(0);
    for (unsigned i = data->phi; i-- > 1;) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < data->phi; ++i) cur[i] -= top * phi_n[i];
    data->power[j] = cur;
  }
  g_conductors.emplace(n, data);
  return data;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return cyclo_poly_locked(n, g_cyclo_polys);
}

Cyclotomic Cyclotomic::reduce(unsigned conductor, std::vector<Rational> raw) {
  auto data = conductor_data(conductor);
  std::vector<Rational> out(data->phi);
  for (unsigned j = 0; j < raw.size(); ++j) {
    if (raw[j].is_zero()) continue;
    if (j < data->phi) {
      out[j] += raw[j];
      continue;
    }
    const auto& row = data->power[j];
    for (unsigned i = 0; i < data->phi; ++i)
      if (row[i] != 0) out[i] += raw[j] * Rational(row[i]);
  }
  return Cyclotomic(conductor, std::move(out));
}

Cyclotomic::Cyclotomic(const Rational& r, unsigned conductor)
    : conductor_(conductor), c_(euler_phi(conductor)) {
  conductor_data(conductor);  // warm the table, validates conductor >= 1
  c_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long power) {
  if (n == 0) throw Error("root_of_unity: conductor must be positive");
  long e = power % static_cast<long>(n);
  if (e < 0) e += n;
  std::vector<Rational> raw(n);
  raw[static_cast<unsigned>(e)] = Rational(1);
  return reduce(n, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational())
    throw NotRational("cyclotomic value has irrational part");
  return c_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    throw Error("cyclotomic embedding: conductor does not divide target");
  unsigned t = m / conductor_;
  std::vector<Rational> raw(m);
  for (unsigned i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) raw[i * t] = c_[i];
  return reduce(m, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> raw(conductor_);
  for (unsigned i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) raw[(conductor_ - i) % conductor_] += c_[i];
  return reduce(conductor_, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  unsigned m = std::lcm(conductor_, o.conductor_);
  if (conductor_ != m) *this = embedded(m);
  if (o.conductor_ != m) {
    Cyclotomic oe = o.embedded(m);
    for (unsigned i = 0; i < c_.size(); ++i) c_[i] += oe.c_[i];
  } else {
    for (unsigned i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  unsigned m = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = conductor_ == m ? *this : embedded(m);
  Cyclotomic b = o.conductor_ == m ? o : o.embedded(m);
  // multiply in Q[x]/(x^m - 1), then reduce mod Phi_m
  std::vector<Rational> raw(m);
  for (unsigned i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      raw[(i + j) % m] += a.c_[i] * b.c_[j];
    }
  }
  *this = reduce(m, std::move(raw));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  for (Rational& x : c_) x *= s;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = std::lcm(a.conductor_, b.conductor_);
  if (a.conductor_ == m && b.conductor_ == m) return a.c_ == b.c_;
  return a.embedded(m).c_ == b.embedded(m).c_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum(0.0, 0.0);
  const double tau = 6.283185307179586476925286766559;
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    sum += c_[i].to_double() *
           std::polar(1.0, tau * static_cast<double>(i) / conductor_);
  }
  return sum;
}

}  // namespace relfrob
