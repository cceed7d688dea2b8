#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relfrob/fock_goncharov.hpp"
#include "relfrob/groupspec.hpp"

using namespace relfrob;

namespace {

Rational rat(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

}  // namespace

TEST_CASE("surface type invariants") {
  CHECK(SurfaceType(0, 1).euler_char() == 1);   // disk
  CHECK(SurfaceType(1, 1).euler_char() == -1);  // torus minus a point
  CHECK(SurfaceType(0, 2).euler_char() == 0);   // sphere minus two points
  CHECK(SurfaceType(2, 3).euler_char() == -5);
  CHECK_THROWS_AS(SurfaceType(1, 0), Error);
}

TEST_CASE("framed counts for S3 on three points") {
  ResolvedGroup s3 = builtin_group("S3");
  CharacterTable t = CharacterTable::compute(s3.group);
  GSet nat = *s3.natural;

  CHECK(framed_count(t, nat, SurfaceType(0, 1)) == 3);

  // torus minus a point: double loop over commutators
  Integer expect = 0;
  for (Elt a = 0; a < 6; ++a)
    for (Elt b = 0; b < 6; ++b)
      expect += nat.fixed_points(s3.group->commutator(a, b));
  CHECK(expect == 54);
  CHECK(framed_count(t, nat, SurfaceType(1, 1)) == 54);

  // sphere minus two points: sum of squared fixed-point counts
  Integer sq = 0;
  for (Elt h = 0; h < 6; ++h) {
    Integer f(nat.fixed_points(h));
    sq += f * f;
  }
  CHECK(sq == 12);
  CHECK(framed_count(t, nat, SurfaceType(0, 2)) == 12);

  CHECK(groupoid_volume(t, nat, SurfaceType(0, 1)) == rat(1, 2));
  CHECK(groupoid_volume(t, nat, SurfaceType(1, 1)) == rat(9));
  CHECK(groupoid_volume(t, nat, SurfaceType(0, 2)) == rat(2));
}

TEST_CASE("enumeration agrees with the character sum") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4", "GL n=2 q=3"}) {
    CAPTURE(name);
    ResolvedGroup rg = builtin_group(name);
    CharacterTable t = CharacterTable::compute(rg.group);
    std::vector<GSet> xs;
    if (rg.natural) xs.push_back(*rg.natural);
    xs.push_back(regular_gset(rg.group));
    xs.push_back(one_point_gset(rg.group));
    for (const GSet& x : xs)
      for (auto [k, m] : {std::pair<unsigned, unsigned>{0, 1},
                          {0, 2},
                          {0, 3},
                          {1, 1},
                          {1, 2}}) {
        SurfaceType s(k, m);
        CHECK(framed_count(t, x, s) == framed_count_brute(x, s));
      }
  }
}

TEST_CASE("disk counts and one-point framings") {
  for (const char* name : {"S3", "D4", "A4", "GL n=3 q=2"}) {
    ResolvedGroup rg = builtin_group(name);
    CharacterTable t = CharacterTable::compute(rg.group);
    std::vector<GSet> xs;
    if (rg.natural) xs.push_back(*rg.natural);
    xs.push_back(regular_gset(rg.group));
    xs.push_back(one_point_gset(rg.group));
    for (const GSet& x : xs) {
      CHECK(framed_count(t, x, SurfaceType(0, 1)) == Integer(x.size()));
      // volume * |G| = count, always
      for (auto [k, m] :
           {std::pair<unsigned, unsigned>{0, 1}, {1, 1}, {2, 2}}) {
        SurfaceType s(k, m);
        CHECK(groupoid_volume(t, x, s) * rat(rg.group->order()) ==
              Rational(framed_count(t, x, s)));
      }
    }
    // one-point X: |G|^(2k+m-1) homomorphisms, every framing trivial
    GSet pt = one_point_gset(rg.group);
    Integer n(rg.group->order());
    CHECK(framed_count_brute(pt, SurfaceType(1, 1)) == n * n);
    CHECK(framed_count_brute(pt, SurfaceType(0, 2)) == n);
  }
}

TEST_CASE("topology invariance characterizes multiplicity freeness") {
  ResolvedGroup s3 = builtin_group("S3");
  CharacterTable t = CharacterTable::compute(s3.group);
  GSet nat = *s3.natural;
  GSet reg = regular_gset(s3.group);

  for (int chi : {-1, -2}) {
    TopologyInvarianceReport pos = topology_invariance_check(t, nat, chi);
    CHECK(pos.multiplicity_free);
    CHECK(pos.all_equal);
    CHECK(pos.consistent);
    // chi = -1 realizations: (0,3) and (1,1); chi = -2: (0,4) and (1,2)
    CHECK(pos.volumes.size() == 2);

    TopologyInvarianceReport neg = topology_invariance_check(t, reg, chi);
    CHECK_FALSE(neg.multiplicity_free);
    CHECK_FALSE(neg.all_equal);
    CHECK(neg.consistent);
  }

  // chi = -1 volumes for the multiplicity-free instance are both 9
  TopologyInvarianceReport r = topology_invariance_check(t, nat, -1);
  for (const auto& [s, v] : r.volumes) CHECK(v == rat(9));
}

TEST_CASE("invariance verdicts agree across the battery") {
  for (const char* name : {"C6", "D4", "Q8", "A4", "S4"}) {
    CAPTURE(name);
    ResolvedGroup rg = builtin_group(name);
    CharacterTable t = CharacterTable::compute(rg.group);
    std::vector<GSet> xs;
    if (rg.natural) xs.push_back(*rg.natural);
    xs.push_back(regular_gset(rg.group));
    xs.push_back(coset_gset(rg.group, rg.group->center()));
    for (const GSet& x : xs)
      for (int chi : {-1, -2})
        CHECK(topology_invariance_check(t, x, chi).consistent);
  }
}
