#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "relfrob/groupspec.hpp"
#include "relfrob/serialize.hpp"

using namespace relfrob;

namespace {

Rational rat(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

Cyclotomic cyc(long v) { return Cyclotomic(rat(v)); }

bool row_equals(const CharacterTable& t, unsigned i,
                const std::vector<long>& vals) {
  for (unsigned c = 0; c < t.num_classes(); ++c)
    if (!(t.value(i, c) == cyc(vals[c]))) return false;
  return true;
}

unsigned find_row(const CharacterTable& t, const std::vector<long>& vals) {
  for (unsigned i = 0; i < t.num_irreps(); ++i)
    if (row_equals(t, i, vals)) return i;
  REQUIRE(false);
  return 0;
}

void check_orthogonality(const CharacterTable& t) {
  const FiniteGroup& g = t.group();
  const ConjugacyData& c = g.conjugacy();
  for (unsigned i = 0; i < t.num_irreps(); ++i)
    for (unsigned j = 0; j < t.num_irreps(); ++j) {
      Cyclotomic ip = class_inner_product(t.row(i), t.row(j));
      CHECK(ip == cyc(i == j ? 1 : 0));
    }
  for (unsigned a = 0; a < t.num_classes(); ++a)
    for (unsigned b = 0; b < t.num_classes(); ++b) {
      Cyclotomic acc;
      for (unsigned i = 0; i < t.num_irreps(); ++i)
        acc += t.value(i, a) * t.value(i, b).conj();
      Rational expect = a == b ? Rational(Integer(g.order()),
                                          Integer(c.class_size[a]))
                               : Rational(0);
      CHECK(acc == Cyclotomic(expect));
    }
  Integer sq = 0;
  for (unsigned i = 0; i < t.num_irreps(); ++i)
    sq += Integer(t.dim(i)) * t.dim(i);
  CHECK(sq == g.order());
}

}  // namespace

TEST_CASE("C2 table") {
  CharacterTable t = CharacterTable::compute(builtin_group("C2").group);
  REQUIRE(t.num_irreps() == 2);
  CHECK(t.dims() == std::vector<unsigned>{1, 1});
  // deterministic order: the sign row sorts before the trivial row
  CHECK(row_equals(t, 0, {1, -1}));
  CHECK(row_equals(t, 1, {1, 1}));
  check_orthogonality(t);
}

TEST_CASE("S3 table, pinned by orthogonality among three classes") {
  ResolvedGroup s3 = builtin_group("S3");
  CharacterTable t = CharacterTable::compute(s3.group);
  REQUIRE(t.num_irreps() == 3);
  CHECK(t.dims() == std::vector<unsigned>{1, 1, 2});
  // classes ordered: identity, 3-cycles, transpositions
  find_row(t, {1, 1, 1});
  find_row(t, {1, 1, -1});
  find_row(t, {2, -1, 0});
  check_orthogonality(t);
}

TEST_CASE("A4 table has cube roots of unity") {
  CharacterTable t = CharacterTable::compute(builtin_group("A4").group);
  REQUIRE(t.num_irreps() == 4);
  CHECK(t.dims() == std::vector<unsigned>{1, 1, 1, 3});
  check_orthogonality(t);
  bool saw_zeta3 = false;
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned c = 0; c < 4; ++c)
      if (!t.value(i, c).is_rational()) saw_zeta3 = true;
  CHECK(saw_zeta3);
}

TEST_CASE("battery tables are exactly orthogonal") {
  for (const char* name :
       {"C4", "C6", "D4", "Q8", "S4", "GL n=2 q=3", "GL n=2 q=4"}) {
    CAPTURE(name);
    CharacterTable t = CharacterTable::compute(builtin_group(name).group);
    check_orthogonality(t);
  }
}

TEST_CASE("GL_3(F_2) dimensions, found not assumed") {
  CharacterTable t = CharacterTable::compute(builtin_group("GL n=3 q=2").group);
  CHECK(t.num_irreps() == 6);
  CHECK(t.dims() == std::vector<unsigned>{1, 3, 3, 6, 7, 8});
  check_orthogonality(t);
}

TEST_CASE("permutation characters") {
  ResolvedGroup s3 = builtin_group("S3");
  CharacterTable t = CharacterTable::compute(s3.group);

  ClassFunction reg = permutation_character(regular_gset(s3.group));
  CHECK(reg.at(0) == cyc(6));
  CHECK(reg.at(1) == cyc(0));
  CHECK(reg.at(2) == cyc(0));

  ClassFunction nat = permutation_character(*s3.natural);
  CHECK(nat.at(0) == cyc(3));
  CHECK(nat.at(1) == cyc(0));
  CHECK(nat.at(2) == cyc(1));

  ResolvedGroup gl23 = builtin_group("GL n=2 q=3");
  GSet flags = *gl23.natural;
  CHECK(flags.orbit_count() == 1);
  ClassFunction fl = permutation_character(flags);
  CHECK(fl.at(0) == cyc(4));
}

TEST_CASE("multiplicities") {
  ResolvedGroup s3 = builtin_group("S3");
  CharacterTable t = CharacterTable::compute(s3.group);
  GSet nat = *s3.natural;

  unsigned triv = t.trivial_irrep();
  unsigned sign = find_row(t, {1, 1, -1});
  unsigned std_row = find_row(t, {2, -1, 0});
  CHECK(multiplicity(t, triv, nat) == 1);
  CHECK(multiplicity(t, sign, nat) == 0);
  CHECK(multiplicity(t, std_row, nat) == 1);

  // trivial multiplicity counts orbits
  for (const char* name : {"S3", "D4", "A4", "S4"}) {
    ResolvedGroup rg = builtin_group(name);
    CharacterTable tt = CharacterTable::compute(rg.group);
    std::vector<GSet> xs;
    xs.push_back(*rg.natural);
    xs.push_back(regular_gset(rg.group));
    xs.push_back(one_point_gset(rg.group));
    for (const GSet& x : xs)
      CHECK(multiplicity(tt, tt.trivial_irrep(), x) ==
            Integer(x.orbit_count()));
  }

  // regular representation: multiplicity equals dimension
  GSet reg = regular_gset(s3.group);
  for (unsigned i = 0; i < t.num_irreps(); ++i)
    CHECK(multiplicity(t, i, reg) == Integer(t.dim(i)));
}

TEST_CASE("fixed points decompose through multiplicities") {
  // sum_pi mult(pi, X) chi_pi(c) = #X^c
  for (const char* name : {"S3", "D4", "Q8", "A4", "GL n=2 q=3"}) {
    CAPTURE(name);
    ResolvedGroup rg = builtin_group(name);
    CharacterTable t = CharacterTable::compute(rg.group);
    const ConjugacyData& c = rg.group->conjugacy();
    std::vector<GSet> xs;
    if (rg.natural) xs.push_back(*rg.natural);
    xs.push_back(regular_gset(rg.group));
    xs.push_back(one_point_gset(rg.group));
    xs.push_back(coset_gset(rg.group, rg.group->center()));
    for (const GSet& x : xs) {
      std::vector<Integer> mult = multiplicities(t, x);
      for (unsigned cl = 0; cl < t.num_classes(); ++cl) {
        Cyclotomic acc;
        for (unsigned i = 0; i < t.num_irreps(); ++i)
          acc += t.value(i, cl) * Rational(mult[i]);
        CHECK(acc == cyc(x.fixed_points(c.representative[cl])));
      }
    }
  }
}

TEST_CASE("convolution of irreducible characters") {
  for (const char* name : {"S3", "D4", "A4"}) {
    CAPTURE(name);
    ResolvedGroup rg = builtin_group(name);
    CharacterTable t = CharacterTable::compute(rg.group);
    ClassAlgebra alg(rg.group);
    for (unsigned i = 0; i < t.num_irreps(); ++i)
      for (unsigned j = 0; j < t.num_irreps(); ++j) {
        ClassFunction conv = convolve(t.row(i), t.row(j), alg);
        ClassFunction expect = t.row(i);
        expect *= i == j ? Rational(Integer(rg.group->order()),
                                    Integer(t.dim(i)))
                         : Rational(0);
        CHECK(conv == expect);
      }
  }
}

TEST_CASE("convolution identities and cross-check") {
  ResolvedGroup c2 = builtin_group("C2");
  CharacterTable t = CharacterTable::compute(c2.group);
  ClassAlgebra alg(c2.group);

  // delta at the identity class is a convolution unit
  std::vector<Cyclotomic> delta_vals{cyc(1), cyc(0)};
  ClassFunction delta(c2.group, delta_vals);
  ClassFunction reg = permutation_character(regular_gset(c2.group));
  CHECK(convolve(delta, reg, alg) == reg);

  // (perm char of regular C2) * itself: direct double loop gives (4, 0)
  ClassFunction sq = convolve(reg, reg, alg);
  CHECK(sq.at(0) == cyc(4));
  CHECK(sq.at(1) == cyc(0));
  CHECK(convolve_direct(reg, reg) == sq);

  // structure-constant route equals the literal definition on small groups
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
    CAPTURE(name);
    ResolvedGroup rg = builtin_group(name);
    CharacterTable tt = CharacterTable::compute(rg.group);
    ClassAlgebra a2(rg.group);
    ClassFunction f = permutation_character(*rg.natural);
    ClassFunction g = tt.row(tt.num_irreps() - 1);
    CHECK(convolve(f, g, a2) == convolve_direct(f, g));
    CHECK(convolve(g, f, a2) == convolve_direct(g, f));
  }
}

TEST_CASE("cache round trip preserves the table bit for bit") {
  ResolvedGroup a4 = builtin_group("A4");
  CharacterTable t = CharacterTable::compute(a4.group);
  Json j = chartable_to_json(t);
  CharacterTable back = chartable_from_json(a4.group, j);
  CHECK(back == t);
  CHECK(chartable_to_json(back).dump() == j.dump());

  auto dir = std::filesystem::temp_directory_path() / "relfrob-test-cache";
  std::filesystem::remove_all(dir);
  CharacterTable cold = chartable_cached(a4.group, dir);
  CharacterTable warm = chartable_cached(a4.group, dir);
  CHECK(cold == t);
  CHECK(warm == t);
  std::filesystem::remove_all(dir);
}
