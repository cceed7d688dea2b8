#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relfrob/gelfand.hpp"
#include "relfrob/groupspec.hpp"

using namespace relfrob;

namespace {

GSet coset_of_stabilizer(const ResolvedGroup& rg, Elt point) {
  return coset_gset(rg.group, rg.natural->stabilizer(point));
}

}  // namespace

TEST_CASE("multiplicity freeness") {
  ResolvedGroup s3 = builtin_group("S3");
  CharacterTable t = CharacterTable::compute(s3.group);

  std::vector<Integer> mults;
  CHECK(is_multiplicity_free(t, *s3.natural, &mults));
  std::sort(mults.begin(), mults.end());
  CHECK(mults == std::vector<Integer>{0, 1, 1});

  CHECK_FALSE(is_multiplicity_free(t, regular_gset(s3.group), &mults));
  std::sort(mults.begin(), mults.end());
  CHECK(mults == std::vector<Integer>{1, 1, 2});

  // the one-point set is multiplicity free for any group
  for (const char* name : {"S3", "D4", "Q8", "S4"}) {
    ResolvedGroup rg = builtin_group(name);
    CharacterTable tt = CharacterTable::compute(rg.group);
    CHECK(is_multiplicity_free(tt, one_point_gset(rg.group)));
  }
}

TEST_CASE("commutator criterion values for S3") {
  ResolvedGroup s3 = builtin_group("S3");
  ClassAlgebra alg(s3.group);

  GSet x = coset_of_stabilizer(s3, 0);  // S3 / S2
  CommutatorCriterion a = commutator_criterion(x, alg);
  CHECK(a.lhs == 54);
  CHECK(a.rhs == 54);
  CHECK(a.multiplicity_free);
  CommutatorCriterion a2 = commutator_criterion_naive(x);
  CHECK(a2.lhs == a.lhs);
  CHECK(a2.rhs == a.rhs);

  GSet reg = coset_gset(s3.group, {});  // S3 / 1
  CommutatorCriterion b = commutator_criterion(reg, alg);
  CHECK(b.lhs == 108);
  CHECK(b.rhs == 216);
  CHECK_FALSE(b.multiplicity_free);
  CommutatorCriterion b2 = commutator_criterion_naive(reg);
  CHECK(b2.lhs == b.lhs);
  CHECK(b2.rhs == b.rhs);
}

TEST_CASE("commutator criterion is conjugation invariant") {
  ResolvedGroup s4 = builtin_group("S4");
  ClassAlgebra alg(s4.group);
  const FiniteGroup& g = *s4.group;
  // stabilizers of different points are conjugate subgroups
  CommutatorCriterion base =
      commutator_criterion(coset_of_stabilizer(s4, 0), alg);
  for (Elt p = 1; p < 4; ++p) {
    CommutatorCriterion other =
        commutator_criterion(coset_of_stabilizer(s4, p), alg);
    CHECK(other.lhs == base.lhs);
    CHECK(other.rhs == base.rhs);
  }
  (void)g;
}

TEST_CASE("f statistic examples for (S3, S2)") {
  ResolvedGroup s3 = builtin_group("S3");
  CharacterTable t = CharacterTable::compute(s3.group);
  GSet x = coset_of_stabilizer(s3, 0);

  CHECK(f_stat_direct(x, 1, 0) == 54);   // sum over pairs of #X^[a,b]
  CHECK(f_stat_direct(x, 0, 1) == 12);   // sum of (#X^h)^2
  CHECK(f_stat_direct(x, 0, 0) == 3);    // #X^e = |X|
  CHECK(f_stat_chars(t, x, 1, 0) == 54);
  CHECK(f_stat_chars(t, x, 0, 1) == 12);
  CHECK(f_stat_chars(t, x, 0, 0) == 3);
  CHECK(f_stat(t, x, 1, 1) == f_stat_direct(x, 1, 1));
}

TEST_CASE("f statistic routes agree wherever the literal loop is feasible") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    CAPTURE(name);
    ResolvedGroup rg = builtin_group(name);
    CharacterTable t = CharacterTable::compute(rg.group);
    GSet x = coset_gset(rg.group, rg.group->center());
    for (unsigned k = 0; k <= 2; ++k)
      for (unsigned m = 0; m <= 2; ++m)
        CHECK(f_stat_chars(t, x, k, m) == f_stat_direct(x, k, m));
  }
}

TEST_CASE("f equivalence tracks the Gelfand property") {
  ResolvedGroup s3 = builtin_group("S3");
  CharacterTable t = CharacterTable::compute(s3.group);

  GSet gelf = coset_of_stabilizer(s3, 0);
  FEquivalence good = f_equivalence_check(t, gelf, 1, 0, 1);
  CHECK(good.equal);
  CHECK(good.f_reduced_genus == 54);  // f(0,2)
  CHECK(good.f_original == 54);       // f(1,0)

  GSet reg = coset_gset(s3.group, {});
  FEquivalence bad = f_equivalence_check(t, reg, 1, 0, 1);
  CHECK_FALSE(bad.equal);
  CHECK(bad.f_reduced_genus == 216);
  CHECK(bad.f_original == 108);

  CHECK_THROWS_AS(f_equivalence_check(t, gelf, 1, 0, 2), Error);
}

TEST_CASE("abelian groups give Gelfand pairs for every subgroup") {
  for (const char* name : {"C4", "C6"}) {
    ResolvedGroup rg = builtin_group(name);
    CharacterTable t = CharacterTable::compute(rg.group);
    const FiniteGroup& g = *rg.group;
    for (Elt h = 0; h < g.order(); ++h) {
      GSet x = coset_gset(rg.group, {h});
      GelfandReport rep = gelfand_report(t, x);
      CHECK(rep.agree);
      CHECK(rep.multiplicity_free);
      for (auto [k, m, l] :
           {std::tuple<unsigned, unsigned, unsigned>{1, 0, 1}, {2, 1, 2}})
        CHECK(f_equivalence_check(t, x, k, m, l).equal);
    }
  }
}

TEST_CASE("route agreement on the named pairs") {
  struct Case {
    const char* group;
    const char* subgroup;  // "stab0" | "stab3" | "center" | "trivial"
    bool gelfand;
  };
  for (const Case& c : {Case{"S3", "stab0", true},
                        Case{"S3", "trivial", false},
                        Case{"S4", "stab3", true},
                        Case{"D4", "center", true},
                        Case{"Q8", "center", true}}) {
    CAPTURE(c.group);
    CAPTURE(c.subgroup);
    ResolvedGroup rg = builtin_group(c.group);
    CharacterTable t = CharacterTable::compute(rg.group);
    std::vector<Elt> gens;
    if (std::string(c.subgroup) == "stab0")
      gens = rg.natural->stabilizer(0);
    else if (std::string(c.subgroup) == "stab3")
      gens = rg.natural->stabilizer(3);
    else if (std::string(c.subgroup) == "center")
      gens = rg.group->center();
    GSet x = coset_gset(rg.group, gens);
    GelfandReport rep = gelfand_report(t, x);
    CHECK(rep.agree);
    CHECK(rep.multiplicity_free == c.gelfand);
    CHECK(rep.commutator_verdict == c.gelfand);
    CHECK(rep.f_verdict == c.gelfand);
    CHECK(rep.f_samples.size() == 9);  // k <= 2, m <= 2, 0 < l <= k
  }
}
