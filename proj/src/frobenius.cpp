#include "relfrob/frobenius.hpp"

#include <algorithm>
#include <thread>

#include "relfrob/enumerate.hpp"

namespace relfrob {

Integer classic_commutator_count(const CharacterTable& t, Elt g, unsigned k) {
  const FiniteGroup& G = t.group();
  unsigned cls = G.conjugacy().class_of[g];
  if (k == 0) return g == 0 ? 1 : 0;
  Cyclotomic acc;
  for (unsigned i = 0; i < t.num_irreps(); ++i)
    acc += t.value(i, cls) *
           Rational(Integer(1), pow_int(Integer(t.dim(i)), 2 * k - 1));
  acc *= Rational(pow_int(Integer(G.order()), 2 * k - 1));
  Rational r;
  try {
    r = acc.to_rational();
  } catch (const NotRational&) {
    throw InternalInconsistency("commutator count is not rational");
  }
  if (!r.is_nonneg_integer())
    throw InternalInconsistency("commutator count is not a nonneg integer");
  return r.to_integer();
}

Integer classic_commutator_count_brute(const FiniteGroup& G, Elt g,
                                       unsigned k, const Config& cfg) {
  if (k == 0) return g == 0 ? 1 : 0;
  check_work(pow_checked(G.order(), 2 * k), cfg.work_bound);
  // enumerate (a_1,b_1,..,a_k,b_k); one "level" per commutator pair
  auto chunk = [&](Elt lo, Elt hi) -> BigAcc {
    BigAcc count = 0;
    std::vector<Elt> stack;
    auto rec = [&](auto&& self, unsigned level, Elt prefix) -> void {
      if (level == k) {
        if (prefix == g) ++count;
        return;
      }
      Elt a_lo = level == 0 ? lo : 0;
      Elt a_hi = level == 0 ? hi : G.order();
      for (Elt a = a_lo; a < a_hi; ++a)
        for (Elt b = 0; b < G.order(); ++b)
          self(self, level + 1, G.mul(prefix, G.commutator(a, b)));
    };
    rec(rec, 0, 0);
    return count;
  };
  return parallel_sum(G.order(), cfg.threads, chunk);
}

Integer hom_count_closed_surface(const CharacterTable& t, unsigned k) {
  return classic_commutator_count(t, 0, k);
}

Integer relative_count_chars(const CharacterTable& t, const GSet& x, Elt g,
                             unsigned k, unsigned m) {
  if (m < 1) throw Error("relative count requires m >= 1");
  const FiniteGroup& G = t.group();
  unsigned cls = G.conjugacy().class_of[g];
  Cyclotomic acc;
  for (unsigned i = 0; i < t.num_irreps(); ++i) {
    Integer mult = multiplicity(t, i, x);
    if (mult == 0) continue;
    acc += t.value(i, cls) *
           Rational(pow_int(mult, m),
                    pow_int(Integer(t.dim(i)), m + 2 * k - 1));
  }
  acc *= Rational(pow_int(Integer(G.order()), m + 2 * k - 1));
  Rational r;
  try {
    r = acc.to_rational();
  } catch (const NotRational&) {
    throw InternalInconsistency("relative count is not rational");
  }
  if (!r.is_nonneg_integer())
    throw InternalInconsistency("relative count is not a nonneg integer");
  return r.to_integer();
}

namespace {

// sum over (h_2..h_m, a_1,b_1,..,a_k,b_k) of
//   fp[g^-1 h_2..h_m [a_1,b_1]..[a_k,b_k]] * prod fp[h_i]
Integer weighted_enumeration(const GSet& x, Elt g, unsigned k, unsigned m,
                             const Config& cfg) {
  const FiniteGroup& G = x.group();
  const auto& fp = x.fixed_counts();
  const unsigned hnum = m - 1;
  check_work(pow_checked(G.order(), hnum + 2 * k), cfg.work_bound);
  Elt start = G.inv(g);
  if (hnum + k == 0) return fp[start];

  auto chunk = [&](Elt lo, Elt hi) -> BigAcc {
    BigAcc total = 0;
    auto rec = [&](auto&& self, unsigned level, Elt prefix,
                   std::uint64_t weight) -> void {
      if (level == hnum + k) {
        total += static_cast<BigAcc>(weight) * fp[prefix];
        return;
      }
      bool outer = level == 0;
      if (level < hnum) {
        Elt h_lo = outer ? lo : 0, h_hi = outer ? hi : G.order();
        for (Elt h = h_lo; h < h_hi; ++h) {
          if (fp[h] == 0) continue;
          self(self, level + 1, G.mul(prefix, h), weight * fp[h]);
        }
      } else {
        Elt a_lo = outer ? lo : 0, a_hi = outer ? hi : G.order();
        for (Elt a = a_lo; a < a_hi; ++a)
          for (Elt b = 0; b < G.order(); ++b)
            self(self, level + 1, G.mul(prefix, G.commutator(a, b)), weight);
      }
    };
    rec(rec, 0, start, 1);
    return total;
  };
  return parallel_sum(G.order(), cfg.threads, chunk);
}

}  // namespace

Integer relative_count_tuples(const GSet& x, Elt g, unsigned k, unsigned m,
                              const Config& cfg) {
  const FiniteGroup& G = x.group();
  std::uint64_t cost = mul_checked(pow_checked(G.order(), m + 2 * k),
                                   pow_checked(x.size(), m));
  check_work(cost, cfg.tuple_work_bound);
  std::vector<std::vector<Elt>> stab(x.size());
  for (Elt p = 0; p < x.size(); ++p) stab[p] = x.stabilizer(p);

  BigAcc count = 0;
  auto rec = [&](auto&& self, unsigned level, Elt prefix) -> void {
    if (level == m) {
      auto comm = [&](auto&& cself, unsigned cl, Elt pfx) -> void {
        if (cl == k) {
          if (pfx == g) ++count;
          return;
        }
        for (Elt a = 0; a < G.order(); ++a)
          for (Elt b = 0; b < G.order(); ++b)
            cself(cself, cl + 1, G.mul(pfx, G.commutator(a, b)));
      };
      comm(comm, 0, prefix);
      return;
    }
    for (Elt p = 0; p < x.size(); ++p)
      for (Elt h : stab[p]) self(self, level + 1, G.mul(prefix, h));
  };
  rec(rec, 0, 0);
  return to_integer(count);
}

Integer relative_count_brute(const GSet& x, Elt g, unsigned k, unsigned m,
                             const Config& cfg) {
  if (m < 1) throw Error("relative count requires m >= 1");
  Integer weighted = weighted_enumeration(x, g, k, m, cfg);
  // literal tuple oracle on tiny instances
  const FiniteGroup& G = x.group();
  std::uint64_t tuple_cost;
  bool feasible = true;
  try {
    tuple_cost = mul_checked(pow_checked(G.order(), m + 2 * k),
                             pow_checked(x.size(), m));
    feasible = tuple_cost <= cfg.tuple_work_bound;
  } catch (const WorkBoundExceeded&) {
    feasible = false;
  }
  if (feasible) {
    Integer tuples = relative_count_tuples(x, g, k, m, cfg);
    if (tuples != weighted)
      throw InternalInconsistency(
          "weighted enumeration and tuple enumeration disagree");
  }
  return weighted;
}

SphericalCharacter spherical_character(const ClassFunction& chi,
                                       const GSet& x) {
  const FiniteGroup& G = x.group();
  const ConjugacyData& C = G.conjugacy();
  SphericalCharacter out;
  out.size = x.size();
  out.entries.assign(static_cast<std::size_t>(x.size()) * x.size(),
                     Cyclotomic());
  for (Elt h = 0; h < G.order(); ++h) {
    const Cyclotomic& val = chi.at(C.class_of[h]);
    if (val.is_zero()) continue;
    for (Elt p = 0; p < x.size(); ++p)
      out.entries[static_cast<std::size_t>(p) * x.size() + x.act(h, p)] += val;
  }
  Rational scale(Integer(1), Integer(G.order()));
  for (auto& e : out.entries) e *= scale;
  return out;
}

SphericalCharacter spherical_character(const CharacterTable& t, unsigned irrep,
                                       const GSet& x) {
  return spherical_character(t.row(irrep), x);
}

SphCheckResult main_sph_check(const CharacterTable& t, const GSet& x,
                              unsigned k, unsigned m, Elt x1, Elt x2,
                              const Config& cfg) {
  if (m < 1) throw Error("spherical check requires m >= 1");
  const FiniteGroup& G = t.group();
  SphCheckResult res;
  res.normalization_exponent = m + 2 * k;

  Cyclotomic lhs;
  for (unsigned i = 0; i < t.num_irreps(); ++i) {
    Integer mult = multiplicity(t, i, x);
    if (mult == 0) continue;
    SphericalCharacter sph = spherical_character(t, i, x);
    lhs += sph.at(x1, x2) *
           Rational(pow_int(mult, m),
                    pow_int(Integer(t.dim(i)), m + 2 * k - 1));
  }
  res.lhs = std::move(lhs);

  // raw tuple count with the condition (prod h_i prod [a,b]) x1 = x2
  std::uint64_t cost = mul_checked(pow_checked(G.order(), m + 2 * k),
                                   pow_checked(x.size(), m));
  check_work(cost, cfg.tuple_work_bound);
  std::vector<std::vector<Elt>> stab(x.size());
  for (Elt p = 0; p < x.size(); ++p) stab[p] = x.stabilizer(p);
  BigAcc count = 0;
  auto rec = [&](auto&& self, unsigned level, Elt prefix) -> void {
    if (level == m) {
      auto comm = [&](auto&& cself, unsigned cl, Elt pfx) -> void {
        if (cl == k) {
          if (x.act(pfx, x1) == x2) ++count;
          return;
        }
        for (Elt a = 0; a < G.order(); ++a)
          for (Elt b = 0; b < G.order(); ++b)
            cself(cself, cl + 1, G.mul(pfx, G.commutator(a, b)));
      };
      comm(comm, 0, prefix);
      return;
    }
    for (Elt p = 0; p < x.size(); ++p)
      for (Elt h : stab[p]) self(self, level + 1, G.mul(prefix, h));
  };
  rec(rec, 0, 0);
  res.raw_tuple_count = to_integer(count);
  res.rhs = Rational(res.raw_tuple_count,
                     pow_int(Integer(G.order()), m + 2 * k));
  res.equal = res.lhs == Cyclotomic(res.rhs);
  return res;
}

}  // namespace relfrob
