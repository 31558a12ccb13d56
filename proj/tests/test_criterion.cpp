#include <doctest.h>

#include <chrono>
#include <unordered_set>

#include "hollab/criterion.hpp"
#include "hollab/errors.hpp"
#include "oracles.hpp"

using namespace hollab;
using namespace hollab::criterion;
using oracle::cyc;

namespace {

Group sym(std::size_t n) {
  std::vector<Point> full(n);
  for (std::size_t i = 0; i < n; ++i)
    full[i] = static_cast<Point>(i);
  return Group(n, {cyc(n, {{0, 1}}), cyc(n, {full})});
}
Group alt(std::size_t n) {
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i)
    gens.push_back(cyc(n, {{0, 1, i}}));
  return Group(n, gens);
}
Group m11() {
  return Group(11, {cyc(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}), cyc(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})});
}

// Independent check of a factorization by closure and product sets.
void oracle_check(const Group& N, const CriterionWitness& w) {
  auto p = oracle::closure(w.P.degree(), w.P.generators());
  auto a = oracle::closure(w.A.degree(), w.A.generators());
  auto b = oracle::closure(w.B.degree(), w.B.generators());
  std::unordered_set<Perm, PermHash> ps(p.begin(), p.end());
  std::unordered_set<Perm, PermHash> prod;
  for (const auto& x : a)
    for (const auto& y : b) {
      prod.insert(x * y);
      REQUIRE(ps.count(x * y));
    }
  CHECK(prod.size() == p.size());
  std::unordered_set<Perm, PermHash> bs(b.begin(), b.end());
  std::size_t meet = 0;
  for (const auto& x : a)
    meet += bs.count(x);
  if (w.part == Part::B)
    CHECK(meet == 1);
  auto an = oracle::closure(N.degree(), [&] {
    auto g = N.generators();
    g.insert(g.end(), w.A.generators().begin(), w.A.generators().end());
    return g;
  }());
  std::unordered_set<Perm, PermHash> ans(an.begin(), an.end());
  for (const auto& y : b)
    CHECK(ans.count(y));
}

} // namespace

TEST_CASE("has_complement examples") {
  Group s3 = sym(3), a3 = alt(3);
  auto c = has_complement(s3, a3);
  REQUIRE(c);
  CHECK(c->order() == 2);
  CHECK(intersection(*c, a3).order() == 1);

  Group c4(4, {cyc(4, {{0, 1, 2, 3}})});
  Group c2(4, {cyc(4, {{0, 2}, {1, 3}})});
  CHECK_FALSE(has_complement(c4, c2));

  Group s4 = sym(4);
  Group v4(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  auto s = has_complement(s4, v4);
  REQUIRE(s);
  CHECK(s->order() == 6);

  CHECK_THROWS_AS(has_complement(s4, Group(4, {cyc(4, {{0, 1}})})), InputError);
  CHECK(has_complement(s4, s4)->order() == 1);
}

TEST_CASE("intermediate subgroups") {
  Group s5 = sym(5), a5 = alt(5);
  CHECK(intermediate_between(s5, a5).size() == 2);
  CHECK(intermediate_between(a5, a5).size() == 1);
  CHECK_THROWS_AS(intermediate_between(s5, Group(5, {cyc(5, {{0, 1}})})), InputError);
}

TEST_CASE("make_context validation") {
  Group s5 = sym(5), a5 = alt(5);
  auto ctx = make_context(s5, a5, a5);
  CHECK(ctx.autN.order() == 120);
  CHECK_THROWS_AS(make_context(a5, a5, s5), InputError);
  Group s4 = sym(4), v4(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  CHECK_THROWS_AS(make_context(s4, v4, v4), InputError);
}

TEST_CASE("A5 and S5 both true") {
  Group s5 = sym(5), a5 = alt(5);
  for (const Group& n : {a5, s5}) {
    auto ctx = make_context(s5, a5, n);
    auto v = classify(ctx);
    CHECK(v.conclusion == Conclusion::True);
    REQUIRE_FALSE(v.witnesses.empty());
    for (const auto& w : v.witnesses) {
      CHECK_NOTHROW(verify_witness(n, w));
      oracle_check(n, w);
    }
  }
  auto va = classify(make_context(s5, a5, a5));
  CHECK(format_tuple(va) == "<1, \"normal\", \"true\">");
  auto vs = classify(make_context(s5, a5, s5));
  CHECK(format_tuple(vs) == "<2, \"normal\", \"true\">");
}

TEST_CASE("A7 and S7 both false") {
  Group s7 = sym(7), a7 = alt(7);
  for (const Group& n : {a7, s7}) {
    auto v = classify(make_context(s7, a7, n));
    CHECK(v.conclusion == Conclusion::False);
    CHECK(v.witnesses.empty());
    for (const auto& r : v.rows) {
      CHECK_FALSE(r.part_a);
      CHECK_FALSE(r.at_scale);
    }
  }
}

TEST_CASE("M11 factorization") {
  Group g = m11();
  REQUIRE(g.order() == 7920);
  auto v = classify(make_context(g, g, g));
  CHECK(format_tuple(v) == "<1, \"normal\", \"true\">");
  REQUIRE(v.witnesses.size() == 1);
  const auto& w = v.witnesses[0];
  CHECK(w.A.order() * w.B.order() == 7920);
  CHECK(intersection(w.A, w.B).order() == 1);
  std::set<std::uint64_t> orders{w.A.order(), w.B.order()};
  CHECK(orders == std::set<std::uint64_t>{55, 144});
  oracle_check(g, w);
}

TEST_CASE("part (a) listing") {
  Group s5 = sym(5), a5 = alt(5);
  auto ctx = make_context(s5, a5, a5);
  auto all = check_part_a(ctx);
  CHECK_FALSE(all.empty());
  for (const auto& w : all)
    CHECK_NOTHROW(verify_witness(a5, w));
  SearchOptions capped;
  capped.max_witnesses = 1;
  CHECK(check_part_a(ctx, capped).size() == 1);
  auto b = check_part_b(ctx);
  REQUIRE(b);
  CHECK(b->A.order() * b->B.order() == 60);
}

TEST_CASE("resource bound gives inconclusive at scale") {
  Group s7 = sym(7), a7 = alt(7);
  SearchOptions opts;
  opts.max_order = 1000;
  auto v = classify(make_context(s7, a7, a7), opts);
  CHECK(v.conclusion == Conclusion::Inconclusive);
  CHECK(v.kind == InconclusiveKind::AtScale);
}

TEST_CASE("thread count does not change the witness") {
  Group s5 = sym(5), a5 = alt(5);
  auto ctx = make_context(s5, a5, s5);
  SearchOptions one, four;
  four.threads = 4;
  auto w1 = check_part_b(ctx, one), w4 = check_part_b(ctx, four);
  REQUIRE(w1);
  REQUIRE(w4);
  CHECK(same_group(w1->A, w4->A));
  CHECK(same_group(w1->B, w4->B));
}

TEST_CASE("tampered witness is rejected") {
  Group s5 = sym(5), a5 = alt(5);
  auto w = check_part_b(make_context(s5, a5, a5));
  REQUIRE(w);
  auto bad = *w;
  bad.B = Group::trivial(5);
  CHECK_THROWS_AS(verify_witness(a5, bad), VerificationError);
}
