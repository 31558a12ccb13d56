#include <doctest.h>

#include <numeric>
#include <set>
#include <unordered_set>

#include "hollab/errors.hpp"
#include "hollab/psl2.hpp"
#include "oracles.hpp"

using namespace hollab;
using namespace hollab::psl2;

namespace {

const std::vector<std::uint64_t> kQs{4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27};

// Number of subgroups of C_a x C_b, by brute force over pairs of generators.
std::size_t subgroups_of_abelian(std::uint64_t a, std::uint64_t b) {
  std::set<std::set<std::pair<std::uint64_t, std::uint64_t>>> subs;
  for (std::uint64_t x1 = 0; x1 < a; ++x1)
    for (std::uint64_t y1 = 0; y1 < b; ++y1)
      for (std::uint64_t x2 = 0; x2 < a; ++x2)
        for (std::uint64_t y2 = 0; y2 < b; ++y2) {
          std::set<std::pair<std::uint64_t, std::uint64_t>> s;
          for (std::uint64_t i = 0; i < a * b; ++i)
            for (std::uint64_t j = 0; j < a * b; ++j)
              s.insert({(i * x1 + j * x2) % a, (i * y1 + j * y2) % b});
          subs.insert(s);
        }
  return subs.size();
}

std::uint64_t closure_order(const Group& g) {
  return oracle::closure(g.degree(), g.generators()).size();
}

} // namespace

TEST_CASE("matrix action") {
  auto ctx = build_context(5);
  auto one = ctx.elem(1), zero = ctx.elem(0), two = ctx.elem(2);
  CHECK(ctx.matrix_perm(Matrix{one, zero, zero, one}).is_identity());
  Matrix m{ctx.elem(2), ctx.elem(3), ctx.elem(1), ctx.elem(1)};
  Matrix m2{two * m.a, two * m.b, two * m.c, two * m.d};
  CHECK(ctx.matrix_perm(m) == ctx.matrix_perm(m2));
  CHECK_THROWS_AS(ctx.matrix_perm(Matrix{one, one, one, one}), InputError);
  // Composition matches matrix multiplication.
  Matrix n{ctx.elem(1), ctx.elem(1), ctx.elem(0), ctx.elem(3)};
  Matrix mn{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
  CHECK(ctx.matrix_perm(mn) == ctx.matrix_perm(m) * ctx.matrix_perm(n));
}

TEST_CASE("q=4: all invertible matrices give a group of order 60") {
  auto ctx = build_context(4);
  std::unordered_set<Perm, PermHash> perms;
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      for (std::uint32_t c = 0; c < 4; ++c)
        for (std::uint32_t d = 0; d < 4; ++d)
          if (ctx.add(ctx.mul(a, d), ctx.mul(b, c)) != 0)
            perms.insert(ctx.matrix_perm(a, b, c, d));
  CHECK(perms.size() == 60);
  CHECK(ctx.pgl.order() == 60);
}

TEST_CASE("context orders") {
  auto c5 = build_context(5);
  CHECK(c5.pgl.order() == 120);
  CHECK(c5.psl.order() == 60);
  CHECK(c5.aut.order() == 120);
  CHECK(c5.frobenius_perm().is_identity());
  auto c8 = build_context(8);
  CHECK(c8.psl.order() == 504);
  CHECK(c8.pgl.order() == 504);
  CHECK(c8.aut.order() == 1512);
  auto c9 = build_context(9);
  CHECK(c9.aut.order() == 1440);
  CHECK(closure_order(c9.aut) == 1440);
  CHECK(build_context(4).frobenius_perm().order() == 2);
  CHECK_THROWS_AS(build_context(2), InputError);
  CHECK_THROWS_AS(build_context(3), InputError);
  CHECK_THROWS_AS(build_context(6), InputError);
}

TEST_CASE("psl2 is the square-determinant subgroup") {
  for (std::uint64_t q : {5, 7, 9, 11}) {
    auto ctx = build_context(q);
    std::vector<char> square(q, 0);
    for (std::uint32_t x = 1; x < q; ++x)
      square[ctx.mul(x, x)] = 1;
    std::unordered_set<Perm, PermHash> psl;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          for (std::uint32_t d = 0; d < q; ++d) {
            auto det = ctx.add(ctx.mul(a, d), ctx.neg(ctx.mul(b, c)));
            if (det != 0 && square[det])
              psl.insert(ctx.matrix_perm(a, b, c, d));
          }
    CHECK(psl.size() == ctx.psl.order());
    for (const auto& g : psl)
      REQUIRE(ctx.psl.contains(g));
  }
}

TEST_CASE("subgroups C and D") {
  for (std::uint64_t q : kQs) {
    CAPTURE(q);
    auto ctx = build_context(q);
    Group c = subgroup_C(ctx), d = subgroup_D(ctx);
    CHECK(c.order() == q + 1);
    CHECK(d.order() == q * (q - 1));
    CHECK(is_abelian(c));
    CHECK(is_solvable(d));
    CHECK(same_group(conjugate(d, ctx.frobenius_perm()), d));
    const std::uint64_t meet = intersection(d, ctx.psl).order();
    CHECK(meet == (q % 2 ? q * (q - 1) / 2 : q * (q - 1)));
  }
  // Pairwise commutators in C, literally.
  auto ctx = build_context(7);
  auto els = oracle::closure(8, subgroup_C(ctx).generators());
  for (const auto& x : els)
    for (const auto& y : els)
      CHECK(x * y == y * x);
}

TEST_CASE("frobenius conjugates matrices entrywise") {
  auto ctx = build_context(9);
  Perm th = ctx.frobenius_perm();
  for (std::uint32_t a : {1u, 2u, 4u})
    for (std::uint32_t b : {0u, 3u, 5u, 7u}) {
      if (ctx.add(ctx.mul(a, 8), ctx.neg(ctx.mul(b, 2))) == 0)
        continue;
      Perm m = ctx.matrix_perm(a, b, 2, 8);
      auto cube = [&](std::uint32_t x) { return ctx.mul(ctx.mul(x, x), x); };
      Perm fm = ctx.matrix_perm(cube(a), cube(b), cube(2), cube(8));
      CHECK(conjugate(m, th) == fm);
    }
}

TEST_CASE("CD factorization") {
  for (std::uint64_t q : kQs) {
    CAPTURE(q);
    auto ctx = build_context(q);
    auto r = verify_cd_factorization(ctx);
    CHECK(r.c_order * r.d_order == q * q * q - q);
  }
  // Literal product set at q=5.
  auto ctx = build_context(5);
  auto c = oracle::closure(6, subgroup_C(ctx).generators());
  auto d = oracle::closure(6, subgroup_D(ctx).generators());
  std::unordered_set<Perm, PermHash> prod;
  for (const auto& x : c)
    for (const auto& y : d)
      prod.insert(x * y);
  CHECK(prod.size() == 120);
}

TEST_CASE("splitting") {
  auto s5 = splitting_check(build_context(5));
  CHECK(s5.which == 'C');
  CHECK(s5.meet.order() == 3);
  CHECK(s5.complement.order() == 2);
  auto s7 = splitting_check(build_context(7));
  CHECK(s7.which == 'D');
  CHECK(s7.meet.order() == 21);
  CHECK(s7.complement.order() == 2);
  auto s9 = splitting_check(build_context(9));
  CHECK(s9.which == 'C');
  CHECK(s9.meet.order() == 5);
  CHECK(s9.complement.order() == 2);
  CHECK_THROWS_AS(splitting_check(build_context(8)), InputError);
}

TEST_CASE("almost simple groups") {
  for (std::uint64_t q : kQs) {
    CAPTURE(q);
    auto ctx = build_context(q);
    auto ns = enumerate_almost_simple(ctx);
    CHECK(ns.size() == subgroups_of_abelian(q % 2 ? 2 : 1, ctx.f));
    CHECK(same_group(ns.front(), ctx.psl));
    for (const auto& n : ns) {
      Group e = projection_E(ctx, n);
      CHECK(same_group(join(ctx.pgl, e), join(ctx.pgl, n)));
    }
  }
  auto ctx = build_context(9);
  CHECK(projection_E(ctx, ctx.psl).order() == 1);
  CHECK(projection_E(ctx, ctx.aut).order() == 2);
  // M10: PSL2(9) extended by diag(w,1) composed with the Frobenius.
  auto w = static_cast<std::uint32_t>(gf::primitive_generator(ctx.field).index());
  Group m10(10, {ctx.psl.generators()[0], ctx.psl.generators()[1], ctx.psl.generators()[2],
                 ctx.psl.generators()[3], ctx.matrix_perm(w, 0, 0, 1) * ctx.frobenius_perm()});
  CHECK(m10.order() == 720);
  CHECK_FALSE(same_group(m10, join(ctx.psl, Group(10, {ctx.matrix_perm(w, 0, 0, 1)}))));
  CHECK(projection_E(ctx, m10).order() == 2);
  CHECK_THROWS_AS(projection_E(ctx, subgroup_C(ctx)), InputError);
}

TEST_CASE("theorem witnesses") {
  for (std::uint64_t q : kQs) {
    CAPTURE(q);
    auto ctx = build_context(q);
    for (const auto& n : enumerate_almost_simple(ctx)) {
      auto w = build_theorem_witness(ctx, n);
      CHECK(w.checks.product);
      CHECK(w.checks.trivial_meet);
      CHECK(w.checks.same_join);
      CHECK(w.checks.splits);
      // Fresh handles, membership only.
      Group a(w.A.degree(), w.A.generators()), b(w.B.degree(), w.B.generators());
      Group p(w.P.degree(), w.P.generators());
      CHECK(a.order() * b.order() == p.order());
      CHECK(intersection(a, b).order() == 1);
      CHECK(same_group(join(a, n), join(b, n)));
      Group k = intersection(a, n);
      CHECK(intersection(w.complement, k).order() == 1);
      CHECK(w.complement.order() * k.order() == a.order());
      CHECK(is_subgroup(w.complement, a));
      if (q % 2 == 0)
        CHECK(w.case_tag == CaseTag::Even);
      else
        CHECK(w.case_tag == (q % 4 == 1 ? CaseTag::OneMod4 : CaseTag::ThreeMod4));
    }
  }
}

TEST_CASE("theorem witness examples") {
  auto c4 = build_context(4);
  auto w4 = build_theorem_witness(c4, c4.aut);
  CHECK(w4.A.order() == 5);
  CHECK(w4.B.order() == 24);
  auto c5 = build_context(5);
  auto w5 = build_theorem_witness(c5, c5.pgl);
  CHECK(w5.A.order() == 6);
  CHECK(w5.B.order() == 20);
  CHECK(w5.complement.order() == 1);
  auto c7 = build_context(7);
  auto w7 = build_theorem_witness(c7, c7.psl);
  CHECK(w7.A.order() == 42);
  CHECK(w7.B.order() == 8);
  CHECK(intersection(w7.A, c7.psl).order() == 21);
  CHECK(w7.complement.order() == 2);
}
