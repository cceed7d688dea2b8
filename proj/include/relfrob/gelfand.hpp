#pragma once

#include "relfrob/chartable.hpp"

namespace relfrob {

/// X is multiplicity free iff every irreducible occurs at most once in
/// C[X]. Fills `mults` with the multiplicity vector when given.
bool is_multiplicity_free(const CharacterTable& t, const GSet& x,
                          std::vector<Integer>* mults = nullptr);

/// The fixed-point criterion: X = G/H is multiplicity free iff
///   sum_{g,h} #X^{[g,h]}  ==  sum_{g,h} #X^g #X^h #X^{gh}.
/// Both sides are aggregated over conjugacy classes (the left by classes
/// of g, the right through the class-algebra structure constants); the
/// literal double loops serve as a cross-check on small groups.
struct CommutatorCriterion {
  Integer lhs;
  Integer rhs;
  bool multiplicity_free = false;
};
CommutatorCriterion commutator_criterion(const GSet& x, const ClassAlgebra& alg,
                                         const Config& cfg = {});
/// Literal O(|G|^2) evaluation of both sums.
CommutatorCriterion commutator_criterion_naive(const GSet& x,
                                               const Config& cfg = {});

/// f(k,m) = sum over (h_1..h_m, a_1,b_1,..,a_k,b_k) in G^(m+2k) of
/// #X^{h_1..h_m [a_1,b_1]..[a_k,b_k]} prod_i #X^{h_i}. The empty product
/// (k = m = 0) is the identity with weight 1.
///
/// Character route (derived from the counting formula with one extra
/// puncture): f(k,m) = |G|^(m+2k) sum_pi mult^(m+1) / dim^(m+2k-1).
Integer f_stat_chars(const CharacterTable& t, const GSet& x, unsigned k,
                     unsigned m);
/// Literal enumeration route.
Integer f_stat_direct(const GSet& x, unsigned k, unsigned m,
                      const Config& cfg = {});
/// Character route, validated against the literal route whenever the
/// latter fits the direct-check budget.
Integer f_stat(const CharacterTable& t, const GSet& x, unsigned k, unsigned m,
               const Config& cfg = {});

/// Genus-for-punctures trade at fixed Euler characteristic: compares
/// f(k-l, m+2l) with f(k, m) for 0 < l <= k. Equality for any one
/// admissible (k, m, l) is equivalent to X being multiplicity free.
struct FEquivalence {
  Integer f_reduced_genus;  // f(k-l, m+2l)
  Integer f_original;       // f(k, m)
  bool equal = false;
};
FEquivalence f_equivalence_check(const CharacterTable& t, const GSet& x,
                                 unsigned k, unsigned m, unsigned l,
                                 const Config& cfg = {});

/// Verdicts from all three routes; they must agree (hard assertion).
struct GelfandReport {
  std::vector<Integer> multiplicities;
  bool multiplicity_free = false;
  Integer commutator_lhs;
  Integer commutator_rhs;
  bool commutator_verdict = false;
  struct FSample {
    unsigned k, m, l;
    Integer f_reduced_genus;
    Integer f_original;
    bool equal;
    bool direct_validated;
  };
  std::vector<FSample> f_samples;
  bool f_verdict = false;
  bool agree = false;
};

/// Runs all three routes on X (typically a coset space G/H) with
/// f-samples over k <= 2, m <= 2, 0 < l <= k. Throws
/// InternalInconsistency if any two routes disagree.
GelfandReport gelfand_report(const CharacterTable& t, const GSet& x,
                             const Config& cfg = {});

}  // namespace relfrob
