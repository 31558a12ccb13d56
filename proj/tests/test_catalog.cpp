#include <doctest.h>

#include "hollab/catalog.hpp"
#include "hollab/cycle_notation.hpp"
#include "hollab/errors.hpp"
#include "hollab/report.hpp"
#include "oracles.hpp"

using namespace hollab;

namespace {

// Perfect, and every generator has full normal closure.
bool looks_simple(const Group& g) {
  if (!same_group(derived_subgroup(g), g))
    return false;
  for (const auto& x : g.generators())
    if (!x.is_identity() && !same_group(normal_closure(g, {x}), g))
      return false;
  return true;
}

} // namespace

TEST_CASE("cycle notation") {
  Perm p = parse_perm("(1,2,3)(4,5)", 6);
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(3) == 4);
  CHECK(p(5) == 5);
  CHECK(format_perm(p) == "(1,2,3)(4,5)");
  CHECK(parse_perm("(1 2 3) (4 5)", 6) == p);
  CHECK(parse_perm("  ", 3).is_identity());
  CHECK(format_perm(Perm(4)) == "()");
  CHECK(parse_perm("()", 4).is_identity());
  CHECK_THROWS_AS(parse_perm("(1,7)", 6), InputError);
  CHECK_THROWS_AS(parse_perm("(1,2", 6), InputError);
  CHECK_THROWS_AS(parse_perm("(1,2,1)", 6), InputError);
  CHECK_THROWS_AS(parse_perm("1,2", 6), InputError);

  Group g = parse_inline_spec("perm:5:(1,2,3,4,5);(1,2,3)");
  CHECK(g.order() == 60);
  CHECK(same_group(parse_inline_spec(format_inline_spec(g)), g));
  CHECK_THROWS_AS(parse_inline_spec("perm:x:(1,2)"), InputError);
  CHECK_THROWS_AS(parse_inline_spec("5:(1,2)"), InputError);

  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    Perm r = oracle::random_perm(9, rng);
    CHECK(parse_perm(format_perm(r), 9) == r);
  }
}

TEST_CASE("catalog orders") {
  for (const auto& l : catalog::list()) {
    if (l.order == 0)
      continue;
    CAPTURE(l.name);
    if (l.name == "PSU3(8)") {
      CHECK_THROWS_AS(catalog::lookup(l.name), ResourceError);
      continue;
    }
    CHECK(catalog::lookup(l.name).group.order() == l.order);
  }
  const std::vector<std::pair<std::string, std::uint64_t>> families{
      {"PSL2(7)", 168},       {"PGL2(7)", 336},      {"PGammaL2(8)", 1512}, {"PSigmaL2(9)", 720},
      {"PGammaL2(9)", 1440},  {"PSL2(27)", 9828},    {"PSL3(3)", 5616},     {"PGL3(3)", 5616},
      {"AutPSL3(3)", 11232},  {"PSL3(4)", 20160},    {"PGL3(4)", 60480},    {"PGammaL3(4)", 120960},
      {"AutPSL3(4)", 241920}, {"PSL3(8)", 16482816}, {"AutPSL3(8)", 98896896}};
  for (const auto& [name, order] : families) {
    CAPTURE(name);
    CHECK(catalog::lookup(name).group.order() == order);
  }
  CHECK_THROWS_AS(catalog::lookup("Q8"), InputError);
  CHECK_THROWS_AS(catalog::lookup("PSL2(6)"), InputError);
  CHECK_THROWS_AS(catalog::lookup("PSL2(3)"), InputError);
}

TEST_CASE("catalog simplicity and solvability") {
  for (const char* name : {"A5", "A7", "M11", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL3(3)", "PSL3(4)", "PSU4(2)"}) {
    CAPTURE(name);
    CHECK(looks_simple(catalog::lookup(name).group));
  }
  for (const char* name : {"S3", "S4", "C4", "C5", "D8", "E16"}) {
    CAPTURE(name);
    CHECK(is_solvable(catalog::lookup(name).group));
  }
  CHECK_FALSE(looks_simple(catalog::lookup("S5").group));
  CHECK_FALSE(looks_simple(catalog::lookup("M10").group));
}

TEST_CASE("catalog families share a domain") {
  for (const char* name : {"S5", "A7", "PGL2(7)", "PSigmaL2(9)", "M10", "PGammaL3(4)", "AutPSU4(2)", "M11"}) {
    CAPTURE(name);
    auto e = catalog::lookup(name);
    auto socle = catalog::lookup(e.socle).group;
    auto ambient = catalog::lookup(e.ambient).group;
    CHECK(is_subgroup(socle, e.group));
    CHECK(is_subgroup(e.group, ambient));
    CHECK(is_normal(ambient, socle));
  }
  // M10 is neither PGL2(9) nor PSigmaL2(9).
  auto m10 = catalog::lookup("M10").group;
  CHECK_FALSE(same_group(m10, catalog::lookup("PGL2(9)").group));
  CHECK_FALSE(same_group(m10, catalog::lookup("PSigmaL2(9)").group));
}

TEST_CASE("catalog automorphism actions normalize") {
  for (const char* name : {"A5", "S4", "C4", "C5", "E16", "PSL2(7)", "M10"}) {
    CAPTURE(name);
    auto e = catalog::lookup(name);
    REQUIRE(e.aut_action);
    for (const auto& a : e.aut_action->generators())
      for (const auto& g : e.group.generators())
        CHECK(e.group.contains(conjugate(g, a)));
  }
  CHECK(catalog::lookup("E16").aut_action->order() == 20160);
}

TEST_CASE("witness JSON round trip") {
  auto s5 = catalog::lookup("S5").group, a5 = catalog::lookup("A5").group;
  auto v = criterion::classify(criterion::make_context(s5, a5, a5));
  auto j = report::verdict_json("A5", a5, v);
  auto text = j.dump();
  auto back = report::verdict_from_json(report::Json::parse(text));
  CHECK(back.conclusion == v.conclusion);
  CHECK(back.index == v.index);
  CHECK(back.n_order == 60);
  REQUIRE(back.witnesses.size() == v.witnesses.size());
  for (std::size_t i = 0; i < back.witnesses.size(); ++i) {
    CHECK_NOTHROW(criterion::verify_witness(a5, back.witnesses[i]));
    CHECK(same_group(back.witnesses[i].A, v.witnesses[i].A));
  }
  auto g = report::group_json(a5);
  g["order"] = 61;
  CHECK_THROWS_AS(report::group_from_json(g), InputError);
}
