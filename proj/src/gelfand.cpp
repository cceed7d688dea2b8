#include "relfrob/gelfand.hpp"

#include "relfrob/enumerate.hpp"

namespace relfrob {

bool is_multiplicity_free(const CharacterTable& t, const GSet& x,
                          std::vector<Integer>* mults) {
  std::vector<Integer> m = multiplicities(t, x);
  bool free = true;
  for (const Integer& v : m)
    if (v > 1) free = false;
  if (mults) *mults = std::move(m);
  return free;
}

CommutatorCriterion commutator_criterion(const GSet& x,
                                         const ClassAlgebra& alg,
                                         const Config& cfg) {
  const FiniteGroup& G = x.group();
  const ConjugacyData& C = G.conjugacy();
  check_work(mul_checked(C.num_classes, G.order()), cfg.work_bound);
  const auto& fp = x.fixed_counts();
  const unsigned r = C.num_classes;

  // lhs: sum_h #X^{[g,h]} depends only on the class of g
  BigAcc lhs = 0;
  for (unsigned i = 0; i < r; ++i) {
    Elt g = C.representative[i];
    BigAcc row = 0;
    for (Elt h = 0; h < G.order(); ++h) row += fp[G.commutator(g, h)];
    lhs += static_cast<BigAcc>(C.class_size[i]) * row;
  }

  // rhs: sum over class pairs, #pairs landing in class k is N_{ijk} |C_k|
  Integer rhs = 0;
  std::vector<std::uint64_t> fpc(r);
  for (unsigned c = 0; c < r; ++c) fpc[c] = fp[C.representative[c]];
  for (unsigned k = 0; k < r; ++k) {
    if (fpc[k] == 0) continue;
    const auto& slice = alg.slice(k);
    BigAcc inner = 0;
    for (unsigned i = 0; i < r; ++i) {
      if (fpc[i] == 0) continue;
      BigAcc rowsum = 0;
      for (unsigned j = 0; j < r; ++j) {
        if (fpc[j] == 0) continue;
        rowsum += static_cast<BigAcc>(slice[static_cast<std::size_t>(i) * r + j]) *
                  fpc[j];
      }
      inner += rowsum * fpc[i];
    }
    rhs += to_integer(inner) * Integer(C.class_size[k]) * Integer(fpc[k]);
  }

  CommutatorCriterion out;
  out.lhs = to_integer(lhs);
  out.rhs = std::move(rhs);
  out.multiplicity_free = out.lhs == out.rhs;
  return out;
}

CommutatorCriterion commutator_criterion_naive(const GSet& x,
                                               const Config& cfg) {
  const FiniteGroup& G = x.group();
  check_work(pow_checked(G.order(), 2), cfg.work_bound);
  const auto& fp = x.fixed_counts();
  BigAcc lhs = 0, rhs = 0;
  for (Elt g = 0; g < G.order(); ++g)
    for (Elt h = 0; h < G.order(); ++h) {
      lhs += fp[G.commutator(g, h)];
      rhs += static_cast<BigAcc>(fp[g]) * fp[h] * fp[G.mul(g, h)];
    }
  CommutatorCriterion out;
  out.lhs = to_integer(lhs);
  out.rhs = to_integer(rhs);
  out.multiplicity_free = out.lhs == out.rhs;
  return out;
}

Integer f_stat_chars(const CharacterTable& t, const GSet& x, unsigned k,
                     unsigned m) {
  const FiniteGroup& G = t.group();
  Rational acc(0);
  for (unsigned i = 0; i < t.num_irreps(); ++i) {
    Integer mult = multiplicity(t, i, x);
    if (mult == 0) continue;
    // dim exponent m+2k-1 may be -1 (k = m = 0): multiply by dim instead
    Rational term(pow_int(mult, m + 1));
    int de = static_cast<int>(m) + 2 * static_cast<int>(k) - 1;
    if (de >= 0)
      term /= Rational(pow_int(Integer(t.dim(i)), static_cast<unsigned>(de)));
    else
      term *= Rational(Integer(t.dim(i)));
    acc += term;
  }
  acc *= Rational(pow_int(Integer(G.order()), m + 2 * k));
  if (!acc.is_nonneg_integer())
    throw InternalInconsistency("f statistic is not a nonnegative integer");
  return acc.to_integer();
}

Integer f_stat_direct(const GSet& x, unsigned k, unsigned m,
                      const Config& cfg) {
  const FiniteGroup& G = x.group();
  const auto& fp = x.fixed_counts();
  check_work(pow_checked(G.order(), m + 2 * k), cfg.work_bound);
  if (m + k == 0) return fp[0];
  auto chunk = [&](Elt lo, Elt hi) -> BigAcc {
    BigAcc total = 0;
    auto rec = [&](auto&& self, unsigned level, Elt prefix,
                   std::uint64_t weight) -> void {
      if (level == m + k) {
        total += static_cast<BigAcc>(weight) * fp[prefix];
        return;
      }
      bool outer = level == 0;
      Elt v_lo = outer ? lo : 0, v_hi = outer ? hi : G.order();
      if (level < m) {
        for (Elt h = v_lo; h < v_hi; ++h) {
          if (fp[h] == 0) continue;
          self(self, level + 1, G.mul(prefix, h), weight * fp[h]);
        }
      } else {
        for (Elt a = v_lo; a < v_hi; ++a)
          for (Elt b = 0; b < G.order(); ++b)
            self(self, level + 1, G.mul(prefix, G.commutator(a, b)), weight);
      }
    };
    rec(rec, 0, 0, 1);
    return total;
  };
  return parallel_sum(G.order(), cfg.threads, chunk);
}

Integer f_stat(const CharacterTable& t, const GSet& x, unsigned k, unsigned m,
               const Config& cfg) {
  Integer chars = f_stat_chars(t, x, k, m);
  bool feasible;
  try {
    feasible = pow_checked(t.group().order(), m + 2 * k) <=
               cfg.direct_check_bound;
  } catch (const WorkBoundExceeded&) {
    feasible = false;
  }
  if (feasible) {
    Integer direct = f_stat_direct(x, k, m, cfg);
    if (direct != chars)
      throw InternalInconsistency("f statistic routes disagree");
  }
  return chars;
}

FEquivalence f_equivalence_check(const CharacterTable& t, const GSet& x,
                                 unsigned k, unsigned m, unsigned l,
                                 const Config& cfg) {
  if (l == 0 || l > k) throw Error("f equivalence requires 0 < l <= k");
  FEquivalence out;
  out.f_reduced_genus = f_stat(t, x, k - l, m + 2 * l, cfg);
  out.f_original = f_stat(t, x, k, m, cfg);
  out.equal = out.f_reduced_genus == out.f_original;
  return out;
}

GelfandReport gelfand_report(const CharacterTable& t, const GSet& x,
                             const Config& cfg) {
  GelfandReport rep;
  rep.multiplicity_free = is_multiplicity_free(t, x, &rep.multiplicities);

  ClassAlgebra alg(t.group_ptr());
  CommutatorCriterion cc = commutator_criterion(x, alg, cfg);
  std::uint64_t naive_cost = static_cast<std::uint64_t>(t.group().order()) *
                             t.group().order();
  if (naive_cost <= cfg.direct_check_bound &&
      t.group().order() <= 24) {
    CommutatorCriterion naive = commutator_criterion_naive(x, cfg);
    if (naive.lhs != cc.lhs || naive.rhs != cc.rhs)
      throw InternalInconsistency(
          "aggregated and naive commutator criteria disagree");
  }
  rep.commutator_lhs = cc.lhs;
  rep.commutator_rhs = cc.rhs;
  rep.commutator_verdict = cc.multiplicity_free;

  for (unsigned k = 1; k <= 2; ++k)
    for (unsigned m = 0; m <= 2; ++m)
      for (unsigned l = 1; l <= k; ++l) {
        FEquivalence fe = f_equivalence_check(t, x, k, m, l, cfg);
        bool validated;
        try {
          validated = pow_checked(t.group().order(), m + 2 * k) <=
                      cfg.direct_check_bound;
        } catch (const WorkBoundExceeded&) {
          validated = false;
        }
        rep.f_samples.push_back({k, m, l, fe.f_reduced_genus, fe.f_original,
                                 fe.equal, validated});
      }
  for (const auto& s : rep.f_samples)
    if (s.equal != rep.f_samples.front().equal)
      throw InternalInconsistency(
          "f-equivalence samples disagree among themselves");
  rep.f_verdict = rep.f_samples.front().equal;

  rep.agree = rep.multiplicity_free == rep.commutator_verdict &&
              rep.multiplicity_free == rep.f_verdict;
  if (!rep.agree)
    throw InternalInconsistency("Gelfand route verdicts disagree");
  return rep;
}

}  // namespace relfrob
