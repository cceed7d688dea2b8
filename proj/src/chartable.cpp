#include "relfrob/chartable.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace relfrob {

namespace {

// ---- arithmetic mod a word-sized prime -----------------------------------

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
  }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// Smallest prime p = 1 (mod e) with p > 2*sqrt(n). Such p never divides n.
u64 dixon_prime(u64 e, u64 n) {
  u64 lower = 2;
  while (lower * lower <= 4 * n) ++lower;  // lower = floor(2*sqrt(n)) + 1
  u64 k = (lower > 1 ? (lower - 1) / e : 0) + 1;
  while (!is_prime(k * e + 1) || k * e + 1 < lower) ++k;
  return k * e + 1;
}

std::vector<u64> prime_factors(u64 m) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

u64 primitive_root(const Fp& f) {
  auto factors = prime_factors(f.p - 1);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (u64 q : factors)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalInconsistency("no primitive root found");
}

// Tonelli-Shanks square root mod p; a must be a quadratic residue.
u64 sqrt_mod(const Fp& f, u64 a) {
  if (a == 0) return 0;
  if (f.pow(a, (f.p - 1) / 2) != 1)
    throw InternalInconsistency("square root of a non-residue");
  if (f.p % 4 == 3) return f.pow(a, (f.p + 1) / 4);
  u64 q = f.p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (f.pow(z, (f.p - 1) / 2) == 1) ++z;
  u64 m = s;
  u64 c = f.pow(z, q);
  u64 t = f.pow(a, q);
  u64 r = f.pow(a, (q + 1) / 2);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = f.mul(tt, tt);
      ++i;
      if (i == m) throw InternalInconsistency("sqrt_mod failed");
    }
    u64 b = f.pow(c, u64(1) << (m - i - 1));
    m = i;
    c = f.mul(b, b);
    t = f.mul(t, c);
    r = f.mul(r, b);
  }
  return r;
}

// ---- linear algebra mod p -------------------------------------------------

struct Subspace {
  std::vector<std::vector<u64>> rows;  // RREF basis rows, length = ambient
  std::vector<unsigned> pivots;
  unsigned dim() const { return static_cast<unsigned>(rows.size()); }
};

// Reduced row echelon form; drops zero rows.
Subspace rref(const Fp& f, std::vector<std::vector<u64>> rows) {
  unsigned cols = rows.empty() ? 0 : static_cast<unsigned>(rows[0].size());
  Subspace out;
  unsigned rank = 0;
  for (unsigned col = 0; col < cols && rank < rows.size(); ++col) {
    unsigned pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    u64 s = f.inv(rows[rank][col]);
    for (unsigned j = col; j < cols; ++j)
      rows[rank][j] = f.mul(rows[rank][j], s);
    for (unsigned i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      u64 fac = rows[i][col];
      for (unsigned j = col; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(fac, rows[rank][j]));
    }
    out.pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

// Characteristic polynomial of a square matrix mod p via Hessenberg
// reduction; returns monic coefficients, ascending.
std::vector<u64> charpoly(const Fp& f, std::vector<u64> m, unsigned d) {
  auto at = [&](unsigned i, unsigned j) -> u64& { return m[i * d + j]; };
  for (unsigned j = 0; j + 2 < d; ++j) {
    unsigned pivot = j + 1;
    while (pivot < d && at(pivot, j) == 0) ++pivot;
    if (pivot == d) continue;
    if (pivot != j + 1) {
      for (unsigned t = 0; t < d; ++t) std::swap(at(j + 1, t), at(pivot, t));
      for (unsigned t = 0; t < d; ++t) std::swap(at(t, j + 1), at(t, pivot));
    }
    u64 inv = f.inv(at(j + 1, j));
    for (unsigned i = j + 2; i < d; ++i) {
      u64 fac = f.mul(at(i, j), inv);
      if (fac == 0) continue;
      for (unsigned t = 0; t < d; ++t)
        at(i, t) = f.sub(at(i, t), f.mul(fac, at(j + 1, t)));
      for (unsigned t = 0; t < d; ++t)
        at(t, j + 1) = f.add(at(t, j + 1), f.mul(fac, at(t, i)));
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1}(x)
  //          - sum_i h_ik * (prod of subdiagonals between) * p_{i-1}(x)
  std::vector<std::vector<u64>> polys;
  polys.push_back({1});
  for (unsigned k = 1; k <= d; ++k) {
    const auto& prev = polys[k - 1];
    std::vector<u64> cur(k + 1, 0);
    u64 hkk = at(k - 1, k - 1);
    for (unsigned t = 0; t < prev.size(); ++t) {
      cur[t + 1] = f.add(cur[t + 1], prev[t]);
      cur[t] = f.sub(cur[t], f.mul(hkk, prev[t]));
    }
    u64 prod = 1;
    for (unsigned i = k - 1; i >= 1; --i) {
      prod = f.mul(prod, at(i, i - 1));
      if (prod == 0) break;
      u64 coeff = f.mul(at(i - 1, k - 1), prod);
      if (coeff == 0) continue;
      const auto& pi = polys[i - 1];
      for (unsigned t = 0; t < pi.size(); ++t)
        cur[t] = f.sub(cur[t], f.mul(coeff, pi[t]));
    }
    polys.push_back(std::move(cur));
  }
  return polys[d];
}

u64 poly_eval(const Fp& f, const std::vector<u64>& poly, u64 x) {
  u64 acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

// Kernel basis of a square matrix mod p (RREF back-substitution).
std::vector<std::vector<u64>> kernel(const Fp& f, std::vector<u64> m,
                                     unsigned d) {
  std::vector<std::vector<u64>> rows(d, std::vector<u64>(d));
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) rows[i][j] = m[i * d + j];
  Subspace s = rref(f, std::move(rows));
  std::vector<bool> is_pivot(d, false);
  for (unsigned c : s.pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> out;
  for (unsigned free_col = 0; free_col < d; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<u64> v(d, 0);
    v[free_col] = 1;
    for (unsigned i = 0; i < s.pivots.size(); ++i)
      v[s.pivots[i]] = f.sub(0, s.rows[i][free_col]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

// ---- ClassFunction --------------------------------------------------------

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->conjugacy().num_classes)
    throw Error("class function has wrong number of values");
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  for (unsigned i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

// ---- ClassAlgebra ---------------------------------------------------------

ClassAlgebra::ClassAlgebra(GroupPtr group)
    : group_(std::move(group)),
      r_(group_->conjugacy().num_classes),
      slices_(r_) {}

const std::vector<std::uint64_t>& ClassAlgebra::slice(unsigned k) const {
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  if (!slices_[k].empty()) return slices_[k];
  const FiniteGroup& G = *group_;
  const ConjugacyData& C = G.conjugacy();
  std::vector<std::uint64_t> n(static_cast<std::size_t>(r_) * r_, 0);
  Elt z = C.representative[k];
  for (Elt u = 0; u < G.order(); ++u) {
    unsigned i = C.class_of[u];
    unsigned j = C.class_of[G.mul(G.inv(u), z)];
    ++n[static_cast<std::size_t>(i) * r_ + j];
  }
  slices_[k] = std::move(n);
  return slices_[k];
}

// ---- CharacterTable -------------------------------------------------------

CharacterTable::CharacterTable(GroupPtr group, std::vector<unsigned> dims,
                               std::vector<Cyclotomic> values)
    : group_(std::move(group)),
      r_(group_->conjugacy().num_classes),
      dims_(std::move(dims)),
      values_(std::move(values)) {}

CharacterTable CharacterTable::from_parts(GroupPtr group,
                                          std::vector<unsigned> dims,
                                          std::vector<Cyclotomic> values) {
  unsigned r = group->conjugacy().num_classes;
  if (dims.size() != r || values.size() != static_cast<std::size_t>(r) * r)
    throw Error("character table parts have wrong shape");
  Integer sq = 0;
  for (unsigned d : dims) sq += Integer(d) * d;
  if (sq != group->order())
    throw InternalInconsistency("sum of squared dimensions != |G|");
  return CharacterTable(std::move(group), std::move(dims), std::move(values));
}

ClassFunction CharacterTable::row(unsigned irrep) const {
  std::vector<Cyclotomic> v(values_.begin() + static_cast<std::size_t>(irrep) * r_,
                            values_.begin() + static_cast<std::size_t>(irrep + 1) * r_);
  return ClassFunction(group_, std::move(v));
}

unsigned CharacterTable::trivial_irrep() const {
  Cyclotomic one{Rational(1)};
  for (unsigned t = 0; t < r_; ++t) {
    bool all_one = true;
    for (unsigned c = 0; c < r_ && all_one; ++c) all_one = value(t, c) == one;
    if (all_one) return t;
  }
  throw InternalInconsistency("no trivial character found");
}

CharacterTable CharacterTable::compute(GroupPtr group, const Config& cfg) {
  const FiniteGroup& G = *group;
  const ConjugacyData& C = G.conjugacy();
  const unsigned r = C.num_classes;
  const unsigned n = G.order();
  if (n > cfg.group_size_cap)
    throw TooLarge("character table beyond configured group size cap");

  const u64 e = G.exponent();
  Fp f{dixon_prime(e, n)};

  // class of rep_c^s for s < order(rep_c)
  std::vector<std::vector<Elt>> power_class(r);
  std::vector<unsigned> rep_order(r);
  for (unsigned c = 0; c < r; ++c) {
    Elt g = C.representative[c];
    unsigned o = G.element_order(g);
    rep_order[c] = o;
    power_class[c].resize(o);
    Elt x = 0;
    for (unsigned s = 0; s < o; ++s) {
      power_class[c][s] = C.class_of[x];
      x = G.mul(x, g);
    }
  }

  // Simultaneous eigenvectors of the class matrices B_i over F_p, where
  // (B_i)_{jk} = #{(u,v) in C_i x C_j : uv = z_k}. Eigenspaces are refined
  // by each operator in class order until all are one-dimensional.
  auto class_matrix = [&](unsigned i) {
    std::vector<u64> b(static_cast<std::size_t>(r) * r, 0);
    for (Elt u : C.members[i]) {
      Elt ui = G.inv(u);
      for (unsigned k = 0; k < r; ++k) {
        unsigned j = C.class_of[G.mul(ui, C.representative[k])];
        u64& cell = b[static_cast<std::size_t>(j) * r + k];
        cell = cell + 1 == f.p ? 0 : cell + 1;
      }
    }
    return b;
  };

  std::vector<Subspace> spaces;
  {
    std::vector<std::vector<u64>> full(r, std::vector<u64>(r, 0));
    for (unsigned i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(rref(f, std::move(full)));
  }
  for (unsigned i = 1; i < r; ++i) {
    bool done = std::all_of(spaces.begin(), spaces.end(),
                            [](const Subspace& s) { return s.dim() == 1; });
    if (done) break;
    std::vector<u64> b = class_matrix(i);
    std::vector<Subspace> next;
    for (auto& v : spaces) {
      unsigned d = v.dim();
      if (d == 1) {
        next.push_back(std::move(v));
        continue;
      }
      // restriction of B to the subspace, in the RREF basis
      std::vector<u64> m(static_cast<std::size_t>(d) * d, 0);
      for (unsigned j = 0; j < d; ++j) {
        std::vector<u64> y(r, 0);
        for (unsigned a = 0; a < r; ++a) {
          u64 acc = 0;
          for (unsigned bcol = 0; bcol < r; ++bcol)
            acc = f.add(acc, f.mul(b[static_cast<std::size_t>(a) * r + bcol],
                                   v.rows[j][bcol]));
          y[a] = acc;
        }
        std::vector<u64> coords(d);
        for (unsigned t = 0; t < d; ++t) coords[t] = y[v.pivots[t]];
        for (unsigned a = 0; a < r; ++a) {
          u64 acc = 0;
          for (unsigned t = 0; t < d; ++t)
            acc = f.add(acc, f.mul(coords[t], v.rows[t][a]));
          if (acc != y[a])
            throw InternalInconsistency("subspace not operator-invariant");
        }
        for (unsigned t = 0; t < d; ++t) m[t * d + j] = coords[t];
      }
      std::vector<u64> cp = charpoly(f, m, d);
      unsigned found = 0;
      for (u64 lambda = 0; lambda < f.p && found < d; ++lambda) {
        if (poly_eval(f, cp, lambda) != 0) continue;
        std::vector<u64> shifted = m;
        for (unsigned t = 0; t < d; ++t)
          shifted[t * d + t] = f.sub(shifted[t * d + t], lambda);
        auto kern = kernel(f, std::move(shifted), d);
        if (kern.empty()) continue;
        found += static_cast<unsigned>(kern.size());
        std::vector<std::vector<u64>> ambient;
        for (const auto& kv : kern) {
          std::vector<u64> w(r, 0);
          for (unsigned t = 0; t < d; ++t) {
            if (kv[t] == 0) continue;
            for (unsigned a = 0; a < r; ++a)
              w[a] = f.add(w[a], f.mul(kv[t], v.rows[t][a]));
          }
          ambient.push_back(std::move(w));
        }
        next.push_back(rref(f, std::move(ambient)));
      }
      if (found != d)
        throw InternalInconsistency("class operator not diagonalizable");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw InternalInconsistency("eigenspace refinement did not separate");

  // central characters, degrees, character values mod p
  std::vector<u64> inv_class_size(r);
  for (unsigned c = 0; c < r; ++c) inv_class_size[c] = f.inv(C.class_size[c] % f.p);
  std::vector<std::vector<u64>> omega(r), chi_bar(r, std::vector<u64>(r));
  std::vector<unsigned> degree(r);
  u64 n_mod = n % f.p;
  for (unsigned t = 0; t < r; ++t) {
    std::vector<u64> u = spaces[t].rows[0];
    if (u[0] == 0)
      throw InternalInconsistency("central character vanishes on identity");
    u64 scale = f.inv(u[0]);
    for (auto& x : u) x = f.mul(x, scale);
    u64 theta = 0;
    for (unsigned j = 0; j < r; ++j)
      theta = f.add(theta,
                    f.mul(f.mul(u[j], u[C.inverse_class[j]]), inv_class_size[j]));
    u64 dd = sqrt_mod(f, f.mul(n_mod, f.inv(theta)));
    dd = std::min(dd, f.p - dd);
    if (dd == 0 || dd * dd > n)
      throw InternalInconsistency("degree recovery failed");
    degree[t] = static_cast<unsigned>(dd);
    for (unsigned j = 0; j < r; ++j)
      chi_bar[t][j] = f.mul(f.mul(dd % f.p, u[j]), inv_class_size[j]);
    omega[t] = std::move(u);
  }
  {
    Integer sq = 0;
    for (unsigned t = 0; t < r; ++t) sq += Integer(degree[t]) * degree[t];
    if (sq != n)
      throw InternalInconsistency("sum of squared dimensions != |G|");
  }

  // Lift to Z[zeta_e]: the value on class j is sum_l m_l zeta_o^l where
  // m_l is the multiplicity of the eigenvalue zeta_o^l, recovered by
  // Fourier inversion over the cyclic group generated by the power map.
  u64 gen = primitive_root(f);
  std::vector<Cyclotomic> values(static_cast<std::size_t>(r) * r,
                                 Cyclotomic(Rational(0), static_cast<unsigned>(e)));
  for (unsigned j = 0; j < r; ++j) {
    unsigned o = rep_order[j];
    u64 zo_inv = f.inv(f.pow(gen, (f.p - 1) / o));
    std::vector<u64> zo_inv_pow(o);
    zo_inv_pow[0] = 1;
    for (unsigned s = 1; s < o; ++s) zo_inv_pow[s] = f.mul(zo_inv_pow[s - 1], zo_inv);
    u64 o_inv = f.inv(o % f.p);
    for (unsigned t = 0; t < r; ++t) {
      Cyclotomic val(Rational(0), static_cast<unsigned>(e));
      u64 total = 0;
      for (unsigned l = 0; l < o; ++l) {
        u64 acc = 0;
        for (unsigned s = 0; s < o; ++s)
          acc = f.add(acc, f.mul(chi_bar[t][power_class[j][s]],
                                 zo_inv_pow[(static_cast<u64>(l) * s) % o]));
        u64 mult = f.mul(o_inv, acc);
        if (mult == 0) continue;
        total += mult;
        val += Cyclotomic::root_of_unity(static_cast<unsigned>(e),
                                         static_cast<long>(l) * (e / o)) *
               Rational(static_cast<long>(mult));
      }
      if (total != degree[t])
        throw InternalInconsistency("eigenvalue multiplicities do not sum to dim");
      values[static_cast<std::size_t>(t) * r + j] = std::move(val);
    }
  }

  // deterministic row order: dimension, then value coefficients along classes
  std::vector<unsigned> order(r);
  std::iota(order.begin(), order.end(), 0u);
  auto row_less = [&](unsigned a, unsigned b) {
    if (degree[a] != degree[b]) return degree[a] < degree[b];
    for (unsigned c = 0; c < r; ++c) {
      const auto& va = values[static_cast<std::size_t>(a) * r + c].coefficients();
      const auto& vb = values[static_cast<std::size_t>(b) * r + c].coefficients();
      for (unsigned i = 0; i < va.size(); ++i) {
        if (va[i] != vb[i]) return va[i] < vb[i];
      }
    }
    return false;
  };
  std::sort(order.begin(), order.end(), row_less);

  std::vector<unsigned> dims(r);
  std::vector<Cyclotomic> sorted(static_cast<std::size_t>(r) * r);
  for (unsigned t = 0; t < r; ++t) {
    dims[t] = degree[order[t]];
    for (unsigned c = 0; c < r; ++c)
      sorted[static_cast<std::size_t>(t) * r + c] =
          values[static_cast<std::size_t>(order[t]) * r + c];
    if (!(sorted[static_cast<std::size_t>(t) * r].to_rational() ==
          Rational(static_cast<long>(dims[t]))))
      throw InternalInconsistency("character value at identity != dimension");
  }
  return CharacterTable(std::move(group), std::move(dims), std::move(sorted));
}

// ---- class-function calculus ----------------------------------------------

ClassFunction permutation_character(const GSet& x) {
  const FiniteGroup& G = x.group();
  const ConjugacyData& C = G.conjugacy();
  std::vector<Cyclotomic> v;
  v.reserve(C.num_classes);
  for (unsigned c = 0; c < C.num_classes; ++c)
    v.emplace_back(Rational(static_cast<long>(
        x.fixed_points(C.representative[c]))));
  return ClassFunction(x.group_ptr(), std::move(v));
}

Integer multiplicity(const CharacterTable& t, unsigned irrep, const GSet& x) {
  const FiniteGroup& G = t.group();
  const ConjugacyData& C = G.conjugacy();
  Cyclotomic acc;
  for (unsigned c = 0; c < t.num_classes(); ++c) {
    long fp = x.fixed_points(C.representative[c]);
    if (fp == 0) continue;
    acc += t.value(irrep, c).conj() *
           Rational(static_cast<long>(C.class_size[c]) * fp);
  }
  acc *= Rational(Integer(1), Integer(G.order()));
  Rational m;
  try {
    m = acc.to_rational();
  } catch (const NotRational&) {
    throw InternalInconsistency("multiplicity is not rational");
  }
  if (!m.is_nonneg_integer())
    throw InternalInconsistency("multiplicity is not a nonnegative integer");
  return m.to_integer();
}

std::vector<Integer> multiplicities(const CharacterTable& t, const GSet& x) {
  std::vector<Integer> out;
  out.reserve(t.num_irreps());
  for (unsigned i = 0; i < t.num_irreps(); ++i)
    out.push_back(multiplicity(t, i, x));
  return out;
}

ClassFunction convolve(const ClassFunction& f, const ClassFunction& g,
                       const ClassAlgebra& alg) {
  const unsigned r = alg.num_classes();
  if (f.size() != r || g.size() != r)
    throw Error("convolution operands on different groups");
  std::vector<Cyclotomic> out(r);
  for (unsigned k = 0; k < r; ++k) {
    const auto& n = alg.slice(k);
    Cyclotomic acc;
    for (unsigned i = 0; i < r; ++i) {
      if (f.at(i).is_zero()) continue;
      Cyclotomic inner;
      bool nonzero = false;
      for (unsigned j = 0; j < r; ++j) {
        u64 c = n[static_cast<std::size_t>(i) * r + j];
        if (c == 0 || g.at(j).is_zero()) continue;
        inner += g.at(j) * Rational(Integer(c));
        nonzero = true;
      }
      if (nonzero) acc += f.at(i) * inner;
    }
    out[k] = std::move(acc);
  }
  return ClassFunction(f.group_ptr(), std::move(out));
}

ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) {
  ClassAlgebra alg(f.group_ptr());
  return convolve(f, g, alg);
}

ClassFunction convolve_direct(const ClassFunction& f, const ClassFunction& g) {
  const FiniteGroup& G = f.group();
  const ConjugacyData& C = G.conjugacy();
  std::vector<Cyclotomic> out(C.num_classes);
  for (unsigned k = 0; k < C.num_classes; ++k) {
    Elt h = C.representative[k];
    Cyclotomic acc;
    for (Elt u = 0; u < G.order(); ++u)
      acc += f.at(C.class_of[u]) * g.at(C.class_of[G.mul(G.inv(u), h)]);
    out[k] = std::move(acc);
  }
  return ClassFunction(f.group_ptr(), std::move(out));
}

Cyclotomic class_inner_product(const ClassFunction& f, const ClassFunction& g) {
  const FiniteGroup& G = f.group();
  const ConjugacyData& C = G.conjugacy();
  Cyclotomic acc;
  for (unsigned c = 0; c < C.num_classes; ++c)
    acc += f.at(c) * g.at(c).conj() *
           Rational(static_cast<long>(C.class_size[c]));
  acc *= Rational(Integer(1), Integer(G.order()));
  return acc;
}

}  // namespace relfrob
