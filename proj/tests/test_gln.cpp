#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "relfrob/gln.hpp"
#include "relfrob/groupspec.hpp"

using namespace relfrob;

namespace {

Rational rat(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

LaurentPoly qpow(int e) { return LaurentPoly::monomial(rat(1), e, "q"); }

Partition part(std::vector<unsigned> parts) { return Partition{std::move(parts)}; }

}  // namespace

TEST_CASE("partition enumeration in reverse-lexicographic order") {
  auto p2 = partitions(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].parts == std::vector<unsigned>{2});
  CHECK(p2[1].parts == std::vector<unsigned>{1, 1});

  auto p3 = partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].parts == std::vector<unsigned>{3});
  CHECK(p3[1].parts == std::vector<unsigned>{2, 1});
  CHECK(p3[2].parts == std::vector<unsigned>{1, 1, 1});

  CHECK(partitions(6).size() == 11);
  // the reverse-lex order is strictly decreasing
  auto p6 = partitions(6);
  for (std::size_t i = 0; i + 1 < p6.size(); ++i)
    CHECK(p6[i].parts > p6[i + 1].parts);
}

TEST_CASE("hook lengths") {
  auto as_multiset = [](std::vector<unsigned> h) {
    std::sort(h.begin(), h.end());
    return h;
  };
  CHECK(as_multiset(hook_lengths(part({2}))) == std::vector<unsigned>{1, 2});
  CHECK(as_multiset(hook_lengths(part({2, 1}))) ==
        std::vector<unsigned>{1, 1, 3});
  CHECK(as_multiset(hook_lengths(part({1, 1, 1}))) ==
        std::vector<unsigned>{1, 2, 3});
}

TEST_CASE("hook sum identity") {
  for (unsigned n = 1; n <= 10; ++n)
    for (const Partition& lam : partitions(n)) {
      unsigned sum = 0;
      for (unsigned h : hook_lengths(lam)) sum += h;
      CHECK(sum == partition_weight_stat(lam) +
                       partition_weight_stat(conjugate_partition(lam)) + n);
    }
}

TEST_CASE("Specht dimensions") {
  CHECK(specht_dim(part({2, 1})) == 2);
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(specht_dim(part({n})) == 1);
    Integer sq = 0, fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    for (const Partition& lam : partitions(n)) {
      Integer d = specht_dim(lam);
      sq += d * d;
    }
    CHECK(sq == fact);
  }
}

TEST_CASE("unipotent dimension polynomials") {
  LaurentPoly one = LaurentPoly::constant(rat(1), "q");
  CHECK(unipotent_dim(part({2}), Convention::corrected) == one);
  CHECK(unipotent_dim(part({1, 1}), Convention::corrected) == qpow(1));
  CHECK(unipotent_dim(part({1, 1, 1}), Convention::corrected) == qpow(3));
  CHECK(unipotent_dim(part({2, 1}), Convention::corrected) ==
        qpow(2) + qpow(1));

  // Steinberg at q = 2 under both conventions
  CHECK(unipotent_dim(part({1, 1}), Convention::corrected).eval(rat(2)) ==
        rat(2));
  CHECK(unipotent_dim(part({1, 1}), Convention::paper_literal).eval(rat(2)) ==
        rat(4));
  CHECK(unipotent_dim(part({1, 1, 1}), Convention::corrected).eval(rat(2)) ==
        rat(8));

  for (unsigned n = 1; n <= 8; ++n)
    for (const Partition& lam : partitions(n)) {
      LaurentPoly d = unipotent_dim(lam, Convention::corrected);
      // q -> 1 degeneration recovers the symmetric group dimension
      CHECK(d.eval(rat(1)) == Rational(specht_dim(lam)));
      // polynomial with nonnegative integer coefficients
      CHECK(d.is_polynomial());
      for (const auto& [e, c] : d.coefficients()) CHECK(c.is_nonneg_integer());
      // the literal reading differs by exactly q^(n(n-1)/2)
      CHECK(unipotent_dim(lam, Convention::paper_literal) ==
            d.shifted(static_cast<int>(n * (n - 1) / 2)));
    }
}

TEST_CASE("GL_n(F_q) flag construction") {
  struct Expected {
    unsigned n, q, order, flags;
  };
  for (const Expected& e : {Expected{2, 2, 6, 3}, Expected{2, 3, 48, 4},
                            Expected{2, 4, 180, 5}, Expected{3, 2, 168, 21}}) {
    CAPTURE(e.n);
    CAPTURE(e.q);
    GLFlag gl = build_gl_flag(e.n, e.q);
    CHECK(gl.group->order() == e.order);
    CHECK(gl.flags.size() == e.flags);
    CHECK(gl.flags.orbit_count() == 1);

    // the Borel subgroup is exactly the stabilizer of the standard flag
    std::vector<Elt> stab = gl.flags.stabilizer(gl.standard_flag);
    CHECK(stab == gl.upper_triangular);

    // G/B and the flag set carry the same permutation character
    GSet cosets = coset_gset(gl.group, gl.upper_triangular);
    CHECK(cosets.size() == gl.flags.size());
    for (Elt g = 0; g < gl.group->order(); ++g)
      CHECK(cosets.fixed_points(g) == gl.flags.fixed_points(g));
  }
  CHECK_THROWS_AS(build_gl_flag(4, 2), Error);
  CHECK_THROWS_AS(build_gl_flag(3, 5), Error);
}

TEST_CASE("closed-form volume for n = 2") {
  SurfaceType torus_minus_point(1, 1);
  LaurentPoly vol =
      fg_vol_closed_poly(2, torus_minus_point, Convention::corrected);
  LaurentPoly q2m1 = qpow(2) - LaurentPoly::constant(rat(1), "q");
  CHECK(vol == q2m1 * q2m1);  // (q^2 - 1)^2
  CHECK(vol.eval(rat(2)) == rat(9));

  CHECK(fg_vol_closed_at(2, torus_minus_point, Convention::paper_literal,
                         rat(2)) == rat(9, 2));

  // disk: chi = 1, numeric only
  SurfaceType disk(0, 1);
  CHECK_THROWS_AS(fg_vol_closed_poly(2, disk, Convention::corrected),
                  NonPolynomial);
  CHECK(fg_vol_closed_at(2, disk, Convention::corrected, rat(2)) == rat(1, 2));

  // the two conventions differ by exactly q^(-chi n(n-1)/2)
  for (auto [k, m] : {std::pair<unsigned, unsigned>{1, 1}, {0, 2}, {1, 2}}) {
    SurfaceType s(k, m);
    int chi = s.euler_char();
    LaurentPoly lit = fg_vol_closed_poly(2, s, Convention::paper_literal);
    LaurentPoly cor = fg_vol_closed_poly(2, s, Convention::corrected);
    CHECK(cor == lit.shifted(-chi * 1));  // n(n-1)/2 = 1
  }
}

TEST_CASE("closed forms match the actual flag groups") {
  for (auto [n, q] : {std::pair<unsigned, unsigned>{2, 2},
                      {2, 3},
                      {2, 4},
                      {3, 2}}) {
    CAPTURE(n);
    CAPTURE(q);
    GLFlag gl = build_gl_flag(n, q);
    CharacterTable t = CharacterTable::compute(gl.group);
    Rational qr(static_cast<long>(q));
    for (auto [k, m] : {std::pair<unsigned, unsigned>{0, 1}, {0, 2}, {1, 1}}) {
      SurfaceType s(k, m);
      Rational vol = fg_vol_closed_at(n, s, Convention::corrected, qr);
      CHECK(vol == groupoid_volume(t, gl.flags, s));
      if (s.euler_char() <= 0) {
        LaurentPoly e = fg_epoly(n, s, Convention::corrected);
        CHECK(e.eval(qr) == Rational(framed_count(t, gl.flags, s)));
      }
    }
  }
}

TEST_CASE("E-polynomials for n = 2") {
  LaurentPoly t = LaurentPoly::variable("t");
  LaurentPoly one = LaurentPoly::constant(rat(1), "t");
  LaurentPoly t2m1 = t * t - one;
  LaurentPoly t2mt = t * t - t;

  LaurentPoly torus = fg_epoly(2, SurfaceType(1, 1), Convention::corrected);
  CHECK(torus == t2m1 * t2mt * t2m1 * t2m1);
  CHECK(torus.eval(rat(2)) == rat(54));

  LaurentPoly sphere2 = fg_epoly(2, SurfaceType(0, 2), Convention::corrected);
  CHECK(sphere2 == t2m1 * t2mt * rat(2));
  CHECK(sphere2.eval(rat(2)) == rat(12));

  // n=2, q=3, torus minus a point: 48 * (9-1)^2 = 3072
  CHECK(torus.eval(rat(3)) == rat(48 * 64));
  GLFlag gl = build_gl_flag(2, 3);
  CharacterTable tbl = CharacterTable::compute(gl.group);
  CHECK(Rational(framed_count(tbl, gl.flags, SurfaceType(1, 1))) ==
        rat(3072));

  CHECK_THROWS_AS(fg_epoly(2, SurfaceType(0, 1), Convention::corrected),
                  NonPolynomial);
}

TEST_CASE("unipotent decomposition of the flag representation") {
  UnipotentCheckReport r22 = unipotent_multiplicity_check(2, 2);
  CHECK(r22.ok);
  CHECK(r22.actual ==
        std::vector<std::pair<Integer, Integer>>{{1, 1}, {2, 1}});

  UnipotentCheckReport r23 = unipotent_multiplicity_check(2, 3);
  CHECK(r23.ok);
  CHECK(r23.actual ==
        std::vector<std::pair<Integer, Integer>>{{1, 1}, {3, 1}});

  UnipotentCheckReport r32 = unipotent_multiplicity_check(3, 2);
  CHECK(r32.ok);
  CHECK(r32.flag_count == 21);
  CHECK(r32.actual ==
        std::vector<std::pair<Integer, Integer>>{{1, 1}, {6, 2}, {8, 1}});

  UnipotentCheckReport r24 = unipotent_multiplicity_check(2, 4);
  CHECK(r24.ok);
  CHECK(r24.actual ==
        std::vector<std::pair<Integer, Integer>>{{1, 1}, {4, 1}});
}
