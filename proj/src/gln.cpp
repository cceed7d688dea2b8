#include "relfrob/gln.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace relfrob {

unsigned Partition::n() const {
  unsigned s = 0;
  for (unsigned p : parts) s += p;
  return s;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions(unsigned n) {
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned rest, unsigned max_part) -> void {
    if (rest == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (unsigned p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition conjugate_partition(const Partition& p) {
  Partition out;
  if (p.parts.empty()) return out;
  unsigned cols = p.parts[0];
  out.parts.resize(cols);
  for (unsigned j = 0; j < cols; ++j) {
    unsigned c = 0;
    for (unsigned part : p.parts)
      if (part >= j + 1) ++c;
    out.parts[j] = c;
  }
  return out;
}

std::vector<unsigned> hook_lengths(const Partition& p) {
  Partition conj = conjugate_partition(p);
  std::vector<unsigned> hooks;
  for (unsigned i = 1; i <= p.parts.size(); ++i)
    for (unsigned j = 1; j <= p.parts[i - 1]; ++j)
      hooks.push_back(p.parts[i - 1] - j + conj.parts[j - 1] - i + 1);
  return hooks;
}

unsigned partition_weight_stat(const Partition& p) {
  unsigned s = 0;
  for (unsigned k = 1; k <= p.parts.size(); ++k)
    s += (k - 1) * p.parts[k - 1];
  return s;
}

Integer specht_dim(const Partition& p) {
  Integer fact = 1;
  for (unsigned i = 2; i <= p.n(); ++i) fact *= i;
  Integer hooks = 1;
  for (unsigned h : hook_lengths(p)) hooks *= h;
  if (fact % hooks != 0)
    throw InternalInconsistency("hook product does not divide n!");
  return fact / hooks;
}

LaurentPoly unipotent_dim(const Partition& p, Convention conv) {
  const unsigned n = p.n();
  LaurentPoly num = LaurentPoly::monomial(
      Rational(1), static_cast<int>(partition_weight_stat(p)), "q");
  for (unsigned c = 1; c <= n; ++c)
    num *= LaurentPoly::monomial(Rational(1), static_cast<int>(c), "q") -
           LaurentPoly::constant(Rational(1), "q");
  LaurentPoly den = LaurentPoly::constant(Rational(1), "q");
  for (unsigned h : hook_lengths(p))
    den *= LaurentPoly::monomial(Rational(1), static_cast<int>(h), "q") -
           LaurentPoly::constant(Rational(1), "q");
  LaurentPoly dim = num.divided_exact(den);
  if (conv == Convention::paper_literal)
    dim = dim.shifted(static_cast<int>(n * (n - 1) / 2));
  return dim;
}

LaurentPoly gl_order_poly(unsigned n, std::string var) {
  LaurentPoly out = LaurentPoly::constant(Rational(1), var);
  for (unsigned c = 0; c < n; ++c)
    out *= LaurentPoly::monomial(Rational(1), static_cast<int>(n), var) -
           LaurentPoly::monomial(Rational(1), static_cast<int>(c), var);
  return out;
}

// ---- finite fields of order 2, 3, 4 and tiny matrices ----------------------

namespace {

struct Gf {
  unsigned q;
  // q = 4 realized as F_2[x]/(x^2+x+1) on bit patterns 0..3
  unsigned add(unsigned a, unsigned b) const {
    return q == 4 ? (a ^ b) : (a + b) % q;
  }
  unsigned neg(unsigned a) const { return q == 4 ? a : (q - a) % q; }
  unsigned mul(unsigned a, unsigned b) const {
    if (q != 4) return (a * b) % q;
    unsigned r = 0;
    unsigned aa = a;
    for (unsigned bit = 0; bit < 2; ++bit) {
      if (b & (1u << bit)) r ^= aa;
      aa <<= 1;
      if (aa & 4u) aa ^= 7u;  // reduce by x^2 + x + 1
    }
    return r;
  }
  unsigned inv(unsigned a) const {
    for (unsigned b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    throw Error("field inverse of zero");
  }
};

Gf make_field(unsigned q) {
  if (q != 2 && q != 3 && q != 4)
    throw Error("only q in {2, 3, 4} is supported");
  return Gf{q};
}

using Mat = std::vector<unsigned>;  // n x n row-major over GF(q)

Mat mat_mul(const Gf& f, const Mat& a, const Mat& b, unsigned n) {
  Mat out(n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      unsigned aik = a[i * n + k];
      if (!aik) continue;
      for (unsigned j = 0; j < n; ++j)
        out[i * n + j] = f.add(out[i * n + j], f.mul(aik, b[k * n + j]));
    }
  return out;
}

bool invertible(const Gf& f, Mat m, unsigned n) {
  for (unsigned col = 0, row = 0; col < n; ++col, ++row) {
    unsigned pivot = row;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != row)
      for (unsigned j = 0; j < n; ++j)
        std::swap(m[row * n + j], m[pivot * n + j]);
    unsigned s = f.inv(m[row * n + col]);
    for (unsigned j = 0; j < n; ++j) m[row * n + j] = f.mul(m[row * n + j], s);
    for (unsigned i = 0; i < n; ++i) {
      if (i == row || m[i * n + col] == 0) continue;
      unsigned fac = m[i * n + col];
      for (unsigned j = 0; j < n; ++j)
        m[i * n + j] = f.add(m[i * n + j], f.neg(f.mul(fac, m[row * n + j])));
    }
  }
  return true;
}

std::uint64_t encode(const Mat& m, unsigned q) {
  std::uint64_t code = 0;
  for (std::size_t i = m.size(); i-- > 0;) code = code * q + m[i];
  return code;
}

// rows of a subspace basis -> reduced row echelon form over GF(q)
std::vector<std::vector<unsigned>> rref_rows(
    const Gf& f, std::vector<std::vector<unsigned>> rows, unsigned width) {
  unsigned rank = 0;
  for (unsigned col = 0; col < width && rank < rows.size(); ++col) {
    unsigned pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    unsigned s = f.inv(rows[rank][col]);
    for (unsigned j = 0; j < width; ++j)
      rows[rank][j] = f.mul(rows[rank][j], s);
    for (unsigned i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      unsigned fac = rows[i][col];
      for (unsigned j = 0; j < width; ++j)
        rows[i][j] = f.add(rows[i][j], f.neg(f.mul(fac, rows[rank][j])));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

// A complete flag V_1 < .. < V_{n-1}, each subspace as RREF basis rows.
struct Flag {
  std::vector<std::vector<std::vector<unsigned>>> steps;
  std::vector<unsigned> key(unsigned n) const {
    std::vector<unsigned> k;
    for (const auto& s : steps)
      for (const auto& row : s)
        for (unsigned j = 0; j < n; ++j) k.push_back(row[j]);
    return k;
  }
};

}  // namespace

GLFlag build_gl_flag(unsigned n, unsigned q, const Config& cfg) {
  if (n < 2 || n > 3) throw Error("only n in {2, 3} is supported");
  Gf f = make_field(q);

  // all invertible matrices, identity first, then ascending code order
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n * n; ++i) total *= q;
  Mat ident(n * n, 0);
  for (unsigned i = 0; i < n; ++i) ident[i * n + i] = 1;
  std::uint64_t ident_code = encode(ident, q);
  std::vector<Mat> mats;
  mats.push_back(ident);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (code == ident_code) continue;
    Mat m(n * n);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n * n; ++i) {
      m[i] = static_cast<unsigned>(c % q);
      c /= q;
    }
    if (invertible(f, m, n)) {
      mats.push_back(std::move(m));
      if (mats.size() > cfg.group_size_cap)
        throw TooLarge("GL_n(F_q) exceeds the group size cap");
    }
  }
  unsigned order = static_cast<unsigned>(mats.size());
  std::vector<long> index_of(total, -1);
  for (unsigned i = 0; i < order; ++i)
    index_of[encode(mats[i], q)] = static_cast<long>(i);

  std::vector<Elt> table(static_cast<std::size_t>(order) * order);
  for (unsigned a = 0; a < order; ++a)
    for (unsigned b = 0; b < order; ++b) {
      long idx = index_of[encode(mat_mul(f, mats[a], mats[b], n), q)];
      if (idx < 0) throw InternalInconsistency("product left GL_n");
      table[static_cast<std::size_t>(a) * order + b] = static_cast<Elt>(idx);
    }
  std::vector<std::string> labels(order);
  for (unsigned i = 0; i < order; ++i) {
    std::string s = "[";
    for (unsigned r = 0; r < n; ++r) {
      if (r) s += ";";
      for (unsigned c = 0; c < n; ++c) {
        if (c) s += ",";
        s += std::to_string(mats[i][r * n + c]);
      }
    }
    labels[i] = s + "]";
  }
  GroupPtr group = FiniteGroup::from_table(std::move(table), order,
                                           std::move(labels));

  // enumerate subspaces of each dimension 1..n-1 as RREF bases
  std::vector<std::vector<std::vector<std::vector<unsigned>>>> subspaces(n);
  {
    // dimension 1: normalized nonzero vectors
    std::uint64_t vecs = 1;
    for (unsigned i = 0; i < n; ++i) vecs *= q;
    for (std::uint64_t code = 1; code < vecs; ++code) {
      std::vector<unsigned> v(n);
      std::uint64_t c = code;
      for (unsigned i = 0; i < n; ++i) {
        v[i] = static_cast<unsigned>(c % q);
        c /= q;
      }
      auto r = rref_rows(f, {v}, n);
      if (r.size() != 1) continue;
      if (r[0] == v) subspaces[1].push_back({v});
    }
    if (n == 3) {
      // dimension 2: RREF spans of independent pairs, deduplicated
      std::map<std::vector<unsigned>, std::vector<std::vector<unsigned>>> seen;
      for (const auto& a : subspaces[1])
        for (const auto& b : subspaces[1]) {
          auto r = rref_rows(f, {a[0], b[0]}, n);
          if (r.size() != 2) continue;
          std::vector<unsigned> key;
          for (const auto& row : r)
            for (unsigned x : row) key.push_back(x);
          seen.emplace(std::move(key), r);
        }
      for (auto& [key, rows] : seen) subspaces[2].push_back(rows);
    }
  }

  // complete flags: chains with containment, ordered lexicographically by
  // the concatenated RREF representatives
  std::vector<Flag> flags;
  if (n == 2) {
    for (const auto& line : subspaces[1]) flags.push_back(Flag{{line}});
  } else {
    auto contains = [&](const std::vector<std::vector<unsigned>>& plane,
                        const std::vector<unsigned>& v) {
      auto r = rref_rows(f, {plane[0], plane[1], v}, n);
      return r.size() == 2;
    };
    for (const auto& line : subspaces[1])
      for (const auto& plane : subspaces[2])
        if (contains(plane, line[0])) flags.push_back(Flag{{line, plane}});
  }
  std::sort(flags.begin(), flags.end(), [&](const Flag& a, const Flag& b) {
    return a.key(n) < b.key(n);
  });
  std::map<std::vector<unsigned>, Elt> flag_index;
  for (Elt i = 0; i < flags.size(); ++i) flag_index.emplace(flags[i].key(n), i);

  // action: transform each basis row by v -> v g^T (rows are coordinate
  // vectors of column vectors), then renormalize to RREF
  unsigned fl = static_cast<unsigned>(flags.size());
  std::vector<Elt> act(static_cast<std::size_t>(order) * fl);
  for (unsigned gi = 0; gi < order; ++gi) {
    const Mat& g = mats[gi];
    for (unsigned xi = 0; xi < fl; ++xi) {
      Flag moved;
      for (const auto& step : flags[xi].steps) {
        std::vector<std::vector<unsigned>> rows;
        for (const auto& row : step) {
          std::vector<unsigned> out(n, 0);
          for (unsigned i = 0; i < n; ++i) {       // out = g * row
            unsigned acc = 0;
            for (unsigned j = 0; j < n; ++j)
              acc = f.add(acc, f.mul(g[i * n + j], row[j]));
            out[i] = acc;
          }
          rows.push_back(std::move(out));
        }
        moved.steps.push_back(rref_rows(f, std::move(rows), n));
      }
      act[static_cast<std::size_t>(gi) * fl + xi] = flag_index.at(moved.key(n));
    }
  }
  std::vector<std::string> flag_labels(fl);
  for (unsigned i = 0; i < fl; ++i) {
    std::string s;
    for (const auto& step : flags[i].steps) {
      s += "<";
      for (std::size_t r = 0; r < step.size(); ++r) {
        if (r) s += "|";
        for (unsigned j = 0; j < n; ++j) s += std::to_string(step[r][j]);
      }
      s += ">";
    }
    flag_labels[i] = s;
  }

  std::vector<Elt> upper_triangular;
  for (unsigned i = 0; i < order; ++i) {
    bool upper = true;
    for (unsigned r = 1; r < n && upper; ++r)
      for (unsigned c = 0; c < r && upper; ++c)
        if (mats[i][r * n + c] != 0) upper = false;
    if (upper) upper_triangular.push_back(i);
  }
  Flag standard;
  for (unsigned d = 1; d < n; ++d) {
    std::vector<std::vector<unsigned>> rows;
    for (unsigned r = 0; r < d; ++r) {
      std::vector<unsigned> v(n, 0);
      v[r] = 1;
      rows.push_back(std::move(v));
    }
    standard.steps.push_back(std::move(rows));
  }
  return GLFlag{group,
                GSet(group, fl, std::move(act), std::move(flag_labels)),
                n,
                q,
                std::move(upper_triangular),
                flag_index.at(standard.key(n))};
}

// ---- closed formulas --------------------------------------------------------

LaurentPoly fg_vol_closed_poly(unsigned n, SurfaceType s, Convention conv) {
  int chi = s.euler_char();
  if (chi > 0)
    throw NonPolynomial("volume is polynomial only for chi <= 0");
  unsigned m = s.punctures;
  Integer nfact = 1;
  for (unsigned i = 2; i <= n; ++i) nfact *= i;
  LaurentPoly sum("q");
  for (const Partition& lam : partitions(n)) {
    LaurentPoly term = LaurentPoly::monomial(
        Rational(1), chi * static_cast<int>(partition_weight_stat(lam)), "q");
    Integer hookpow = 1;
    for (unsigned h : hook_lengths(lam)) {
      LaurentPoly factor =
          LaurentPoly::monomial(Rational(1), static_cast<int>(h), "q") -
          LaurentPoly::constant(Rational(1), "q");
      term *= factor.pow(static_cast<unsigned>(-chi));
      hookpow *= pow_int(Integer(h), m);
    }
    term *= Rational(Integer(1), hookpow);
    sum += term;
  }
  sum *= Rational(pow_int(nfact, m));
  if (conv == Convention::corrected)
    sum = sum.shifted(-chi * static_cast<int>(n * (n - 1) / 2));
  return sum;
}

Rational fg_vol_closed_at(unsigned n, SurfaceType s, Convention conv,
                          const Rational& q) {
  if (q.is_zero()) throw ZeroBase("volume evaluation at q = 0");
  int chi = s.euler_char();
  if (chi <= 0) return fg_vol_closed_poly(n, s, conv).eval(q);
  unsigned m = s.punctures;
  Integer nfact = 1;
  for (unsigned i = 2; i <= n; ++i) nfact *= i;
  Rational sum(0);
  for (const Partition& lam : partitions(n)) {
    Rational term =
        q.pow(chi * static_cast<long>(partition_weight_stat(lam)));
    for (unsigned h : hook_lengths(lam)) {
      Rational base = q.pow(static_cast<long>(h)) - Rational(1);
      if (base.is_zero())
        throw Error("volume formula has a pole at this q");
      term *= base.pow(-chi);  // chi > 0: inverse powers
      term /= Rational(pow_int(Integer(h), m));
    }
    sum += term;
  }
  sum *= Rational(pow_int(nfact, m));
  if (conv == Convention::corrected)
    sum *= q.pow(-static_cast<long>(chi) *
                 static_cast<long>(n * (n - 1) / 2));
  return sum;
}

LaurentPoly fg_epoly(unsigned n, SurfaceType s, Convention conv) {
  if (s.euler_char() > 0)
    throw NonPolynomial("E-polynomial requires chi <= 0");
  LaurentPoly vol = fg_vol_closed_poly(n, s, conv);
  LaurentPoly vol_t("t");
  for (const auto& [e, c] : vol.coefficients())
    vol_t += LaurentPoly::monomial(c, e, "t");
  return gl_order_poly(n, "t") * vol_t;
}

UnipotentCheckReport unipotent_multiplicity_check(unsigned n, unsigned q,
                                                  const Config& cfg) {
  UnipotentCheckReport rep;
  rep.n = n;
  rep.q = q;
  GLFlag gl = build_gl_flag(n, q, cfg);
  CharacterTable t = CharacterTable::compute(gl.group, cfg);
  rep.flag_count = Integer(gl.flags.size());

  std::vector<std::pair<Integer, Integer>> predicted;
  Integer dim_sum = 0;
  for (const Partition& lam : partitions(n)) {
    UnipotentCheckRow row;
    row.partition = lam;
    row.predicted_dim = unipotent_dim(lam, Convention::corrected)
                            .eval(Rational(static_cast<long>(q)))
                            .to_integer();
    row.predicted_mult = specht_dim(lam);
    dim_sum += row.predicted_dim * row.predicted_mult;
    predicted.emplace_back(row.predicted_dim, row.predicted_mult);
    rep.rows.push_back(std::move(row));
  }
  rep.dimension_sum_matches = dim_sum == rep.flag_count;

  for (unsigned i = 0; i < t.num_irreps(); ++i) {
    Integer mult = multiplicity(t, i, gl.flags);
    if (mult > 0) rep.actual.emplace_back(Integer(t.dim(i)), mult);
  }
  std::sort(predicted.begin(), predicted.end());
  std::sort(rep.actual.begin(), rep.actual.end());
  rep.decomposition_matches = predicted == rep.actual;
  rep.ok = rep.decomposition_matches && rep.dimension_sum_matches;
  return rep;
}

}  // namespace relfrob
