#include <doctest.h>

#include <random>

#include "hollab/errors.hpp"
#include "hollab/lattice.hpp"
#include "oracles.hpp"

using namespace hollab;
using namespace hollab::lattice;
using oracle::cyc;

namespace {

Group s3() { return Group(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}); }
Group s4() { return Group(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}); }
Group a4() { return Group(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})}); }
Group a5() { return Group(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}); }
Group s5() { return Group(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}); }
Group d4() { return Group(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}); }
Group c6() { return Group(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})}); }
Group c2_4() {
  return Group(8, {cyc(8, {{0, 1}}), cyc(8, {{2, 3}}), cyc(8, {{4, 5}}), cyc(8, {{6, 7}})});
}
Group pgl25() {
  return Group(6, {cyc(6, {{0, 1, 2, 3, 4}}), cyc(6, {{1, 2, 4, 3}}), cyc(6, {{0, 5}, {1, 4}})});
}

std::multiset<std::pair<std::size_t, std::size_t>> signature(const SubgroupClassList& l) {
  std::multiset<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : l.classes)
    out.insert({c.order, c.class_size});
  return out;
}

std::multiset<std::size_t> class_orders(const SubgroupClassList& l) {
  std::multiset<std::size_t> out;
  for (const auto& c : l.classes)
    out.insert(c.order);
  return out;
}

void check_against_oracle(const Group& g, bool solvable_only) {
  oracle::Table t(oracle::closure(g.degree(), g.generators()));
  auto expected = t.classes(t.subgroups(solvable_only));
  auto got = solvable_only ? solvable_subgroup_classes(g) : all_subgroup_classes_of_solvable(g);
  CHECK(signature(got) == expected);
  for (const auto& c : got.classes) {
    CHECK(g.order() % c.order == 0);
    CHECK(c.representative.order() == c.order);
    CHECK(is_subgroup(c.representative, g));
    CHECK(is_solvable(c.representative));
  }
}

} // namespace

TEST_CASE("solvable subgroup classes: examples") {
  CHECK(class_orders(solvable_subgroup_classes(s3())) == std::multiset<std::size_t>{1, 2, 3, 6});
  CHECK(class_orders(solvable_subgroup_classes(a4())) ==
        std::multiset<std::size_t>{1, 2, 3, 4, 12});
  CHECK(class_orders(solvable_subgroup_classes(a5())) ==
        std::multiset<std::size_t>{1, 2, 3, 4, 5, 6, 10, 12});
  CHECK_THROWS_AS(solvable_subgroup_classes(s5(), LatticeOptions{.max_order = 100}),
                  ResourceError);
}

TEST_CASE("all subgroup classes of solvable groups: examples") {
  CHECK(all_subgroup_classes_of_solvable(c6()).classes.size() == 4);
  auto d = all_subgroup_classes_of_solvable(d4());
  CHECK(d.classes.size() == 8);
  std::uint64_t total = 0;
  for (const auto& c : d.classes)
    total += c.class_size;
  CHECK(total == 10);
  CHECK(all_subgroup_classes_of_solvable(s4()).classes.size() == 11);
  CHECK(d.complete_for == Completeness::AllSubgroups);
  CHECK_THROWS_AS(all_subgroup_classes_of_solvable(a5()), InputError);
}

TEST_CASE("conjugacy dedupe") {
  auto one = conjugacy_dedupe(s3(), {Group(3, {cyc(3, {{0, 1}})}), Group(3, {cyc(3, {{0, 2}})})});
  CHECK(one.classes.size() == 1);
  auto two = conjugacy_dedupe(s4(), {Group(4, {cyc(4, {{0, 1}})}),
                                     Group(4, {cyc(4, {{0, 1}, {2, 3}})})});
  CHECK(two.classes.size() == 2);
  // the representative is the member with the smallest sorted rank list,
  // whichever member was supplied
  auto x = conjugacy_dedupe(s4(), {Group(4, {cyc(4, {{2, 3}})})});
  auto y = conjugacy_dedupe(s4(), {Group(4, {cyc(4, {{0, 3}})})});
  CHECK(x.classes[0].elements == y.classes[0].elements);
  CHECK(x.classes[0].class_size == 6);
}

TEST_CASE("keep_members lists every member once") {
  SubgroupClassList l = solvable_subgroup_classes(s4(), LatticeOptions{.keep_members = true});
  for (const auto& c : l.classes) {
    CHECK(c.members.size() == c.class_size);
    CHECK(c.member_elements.size() == c.class_size);
    std::set<std::vector<Rank>> distinct(c.member_elements.begin(), c.member_elements.end());
    CHECK(distinct.size() == c.class_size);
    for (const auto& m : c.members)
      CHECK(m.order() == c.order);
  }
}

TEST_CASE("pruned lattice keeps only accepted subgroups") {
  // subgroups of S4 of 2-power order
  LatticeOptions opts;
  opts.keep = [](const EnumeratedGroup&, std::span<const Rank> key) {
    return (key.size() & (key.size() - 1)) == 0;
  };
  auto l = solvable_subgroup_classes(s4(), opts);
  std::multiset<std::size_t> orders = class_orders(l);
  CHECK(orders == std::multiset<std::size_t>{1, 2, 2, 4, 4, 4, 8});
}

TEST_CASE("oracle equivalence") {
  check_against_oracle(s4(), false);
  check_against_oracle(d4(), false);
  check_against_oracle(c2_4(), false);
  check_against_oracle(a5(), true);
  check_against_oracle(s5(), true);
  check_against_oracle(pgl25(), true);
}

TEST_CASE("random solvable subgroups have a conjugate representative") {
  Group g = s5();
  auto classes = solvable_subgroup_classes(g);
  EnumeratedGroup eg(g);
  auto elems = g.elements();
  std::mt19937 rng(1234);
  int sampled = 0;
  while (sampled < 100) {
    std::vector<Perm> gens;
    for (std::size_t i = 0, k = 1 + rng() % 3; i < k; ++i)
      gens.push_back(elems[rng() % elems.size()]);
    Group h(5, gens);
    if (!is_solvable(h))
      continue;
    ++sampled;
    auto found = std::any_of(classes.classes.begin(), classes.classes.end(), [&](const auto& c) {
      if (c.order != h.order())
        return false;
      for (const auto& x : elems)
        if (same_group(conjugate(c.representative, x), h))
          return true;
      return false;
    });
    CHECK(found);
  }
}
