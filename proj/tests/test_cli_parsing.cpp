#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "relfrob/groupspec.hpp"
#include "relfrob/serialize.hpp"

using namespace relfrob;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "relfrob-spec-test";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream out(p);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("permutation group file") {
  auto p = write_temp("s3.grp",
                      "# symmetric group on three letters\n"
                      "degree: 3\n"
                      "gen: (1 2)\n"
                      "gen: (1 2 3)\n");
  GroupSpec spec = parse_group_file(p);
  CHECK(spec.kind == GroupSpec::Kind::perm);
  CHECK(spec.degree == 3);
  CHECK(spec.generator_cycles.size() == 2);
  ResolvedGroup rg = resolve_group(spec);
  CHECK(rg.group->order() == 6);
  CHECK(rg.natural->size() == 3);
}

TEST_CASE("builtin file") {
  auto p = write_temp("gl23.grp", "builtin: GL n=2 q=3\n");
  ResolvedGroup rg = resolve_group(parse_group_file(p));
  CHECK(rg.group->order() == 48);
  CHECK(rg.gl.has_value());
  CHECK(rg.natural->size() == 4);
}

TEST_CASE("cayley table file") {
  auto table = write_temp("c3.json",
                          "{\"table\": [[0,1,2],[1,2,0],[2,0,1]]}");
  auto p = write_temp("c3.grp", "cayley: " + table.string() + "\n");
  ResolvedGroup rg = resolve_group(parse_group_file(p));
  CHECK(rg.group->order() == 3);
  CHECK(rg.group->is_abelian());
}

TEST_CASE("parse errors carry line numbers") {
  auto p = write_temp("bad.grp",
                      "degree: 3\n"
                      "gen: (1 2\n");
  try {
    parse_group_file(p);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  auto p2 = write_temp("bad2.grp", "gen: (1 2)\n");
  try {
    parse_group_file(p2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }

  CHECK_THROWS_AS(parse_group_file(write_temp("bad3.grp", "frobnicate: 1\n")),
                  ParseError);
  CHECK_THROWS_AS(parse_group_file(write_temp("empty.grp", "# nothing\n")),
                  ParseError);
}

TEST_CASE("element expressions") {
  ResolvedGroup s3 = builtin_group("S3");
  CHECK(parse_element(s3, "e") == 0);
  Elt t = parse_element(s3, "(1 2)");
  Elt c = parse_element(s3, "(1 2 3)");
  CHECK(s3.group->element_order(t) == 2);
  CHECK(s3.group->element_order(c) == 3);
  // g0 = first generator = (1 2), g1 = (1 2 3)
  CHECK(parse_element(s3, "g0") == t);
  CHECK(parse_element(s3, "g1") == c);
  CHECK(parse_element(s3, "g1^-1") == s3.group->inv(c));
  CHECK(parse_element(s3, "g0*g1^-1*g0") ==
        s3.group->mul(s3.group->mul(t, s3.group->inv(c)), t));
  CHECK(parse_element(s3, "g1^3") == 0);
  CHECK_THROWS_AS(parse_element(s3, "g7"), ParseError);
  CHECK_THROWS_AS(parse_element(s3, "(1 2 3 4)"), ParseError);
  CHECK_THROWS_AS(parse_element(s3, ""), ParseError);

  // table-defined groups address elements by index
  ResolvedGroup q8 = builtin_group("Q8");
  CHECK(parse_element(q8, "g2") == 2);
  CHECK(parse_element(q8, "g2*g2") == 1);  // i^2 = -1
  CHECK_THROWS_AS(parse_element(q8, "(1 2)"), ParseError);
}

TEST_CASE("element lists split outside parentheses") {
  ResolvedGroup s4 = builtin_group("S4");
  std::vector<Elt> els = parse_element_list(s4, "(1 2), (3 4), g0*g1");
  CHECK(els.size() == 3);
  CHECK(parse_element_list(s4, "").empty());
}

TEST_CASE("gset resolution") {
  ResolvedGroup s3 = builtin_group("S3");
  CHECK(resolve_gset(s3, "natural").size() == 3);
  CHECK(resolve_gset(s3, "regular").size() == 6);
  CHECK(resolve_gset(s3, "point").size() == 1);
  CHECK(resolve_gset(s3, "cosets:(1 2)").size() == 3);
  CHECK(resolve_gset(s3, "cosets:(1 2 3)").size() == 2);
  CHECK_THROWS_AS(resolve_gset(s3, "flags"), ParseError);
  CHECK_THROWS_AS(resolve_gset(s3, "unknown"), ParseError);

  ResolvedGroup q8 = builtin_group("Q8");
  CHECK_THROWS_AS(resolve_gset(q8, "natural"), ParseError);

  ResolvedGroup gl = builtin_group("GL n=2 q=2");
  CHECK(resolve_gset(gl, "flags").size() == 3);
  CHECK(resolve_gset(gl, "natural").size() == 3);
}

TEST_CASE("group content hash is stable and collision-sensitive") {
  ResolvedGroup a = builtin_group("S3");
  ResolvedGroup b = builtin_group("S3");
  CHECK(group_content_hash(*a.group) == group_content_hash(*b.group));
  CHECK(group_content_hash(*a.group).size() == 64);
  ResolvedGroup c = builtin_group("C6");
  CHECK(group_content_hash(*a.group) != group_content_hash(*c.group));
}

TEST_CASE("cyclotomic json round trip") {
  Cyclotomic v = Cyclotomic::root_of_unity(12, 7) * Rational(Integer(3), Integer(2)) +
                 Cyclotomic(Rational(Integer(-1), Integer(5)), 12);
  Json j = cyclotomic_to_json(v);
  CHECK(cyclotomic_from_json(j) == v);
  CHECK(j.at("conductor") == 12);
}
