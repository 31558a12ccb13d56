#include <doctest.h>

#include <set>

#include "hollab/errors.hpp"
#include "hollab/gfield.hpp"

using namespace hollab;
using namespace hollab::gf;

namespace {

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n; ++q) {
    std::uint32_t p, f;
    if (prime_power(q, p, f))
      out.push_back(q);
  }
  return out;
}

FieldPtr field_of(std::uint64_t q) {
  std::uint32_t p, f;
  REQUIRE(prime_power(q, p, f));
  return field_make(p, f);
}

// Multiplicative order of X in GF(q)[X]/(X^2 + cX + d), computed with pairs
// (a, b) = a + bX. Returns 0 if X^2 + cX + d has a root in GF(q).
std::uint64_t quadratic_root_order(const FieldPtr& k, const FieldElem& c, const FieldElem& d) {
  for (std::uint64_t i = 0; i < k->q(); ++i) {
    auto x = FieldElem::from_index(k, i);
    if ((x * x + c * x + d).is_zero())
      return 0;
  }
  using Pair = std::pair<FieldElem, FieldElem>;
  auto mul = [&](const Pair& u, const Pair& v) {
    auto bg = u.second * v.second;
    return Pair{u.first * v.first - bg * d, u.first * v.second + u.second * v.first - bg * c};
  };
  const Pair x{FieldElem::zero(k), FieldElem::one(k)};
  Pair acc = x;
  std::uint64_t n = 1;
  while (!(acc.first.is_one() && acc.second.is_zero())) {
    acc = mul(acc, x);
    ++n;
  }
  return n;
}

} // namespace

TEST_CASE("field_make examples") {
  auto f2 = field_make(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->modulus() == Field::Coeffs{0, 1});
  auto f4 = field_make(2, 2);
  CHECK(f4->modulus() == Field::Coeffs{1, 1, 1});

  // oracle: scan the 9 monic quadratics over GF(3), keep the first without roots
  Field::Coeffs expected;
  for (std::uint32_t code = 0; code < 9 && expected.empty(); ++code) {
    std::uint32_t a0 = code % 3, a1 = code / 3;
    bool root = false;
    for (std::uint32_t x = 0; x < 3; ++x)
      root |= (x * x + a1 * x + a0) % 3 == 0;
    if (!root)
      expected = {a0, a1, 1};
  }
  CHECK(field_make(3, 2)->modulus() == expected);

  CHECK_THROWS_AS(field_make(4, 1), InputError);
  CHECK_THROWS_AS(field_make(2, 0), InputError);
}

TEST_CASE("primitive generators") {
  auto f4 = field_make(2, 2);
  auto g = primitive_generator(f4);
  CHECK(g.pow(3).is_one());
  CHECK_FALSE(g.is_one());
  for (std::uint64_t q : {25, 49}) {
    auto k = field_of(q);
    auto h = primitive_generator(k);
    CHECK(h.pow(q - 1).is_one());
    for (std::uint64_t e = 1; e < q - 1; ++e)
      if ((q - 1) % e == 0)
        CHECK_FALSE(h.pow(e).is_one());
    // smallest such element
    for (std::uint64_t i = 1; i < h.index(); ++i)
      CHECK(FieldElem::from_index(k, i).multiplicative_order() < q - 1);
  }
}

TEST_CASE("torus constants") {
  SUBCASE("q=4 against all monic quadratics") {
    auto k = field_make(2, 2);
    std::set<std::pair<std::uint64_t, std::uint64_t>> good;
    for (std::uint64_t c = 0; c < 4; ++c)
      for (std::uint64_t d = 0; d < 4; ++d)
        if (quadratic_root_order(k, FieldElem::from_index(k, c), FieldElem::from_index(k, d)) == 15)
          good.insert({c, d});
    auto t = torus_constants(k);
    CHECK(good.count({t.c.index(), t.d.index()}) == 1);
    CHECK(t.d.pow(3).is_one());
  }
  SUBCASE("q=5") {
    auto k = field_make(5, 1);
    auto t = torus_constants(k);
    CHECK(quadratic_root_order(k, t.c, t.d) == 24);
  }
  SUBCASE("q in {2,3} rejected") {
    CHECK_THROWS_AS(torus_constants(field_make(2, 1)), InputError);
    CHECK_THROWS_AS(torus_constants(field_make(3, 1)), InputError);
  }
}

TEST_CASE("frobenius") {
  auto f4 = field_make(2, 2);
  CHECK(frobenius(FieldElem::zero(f4)).is_zero());
  CHECK(frobenius(FieldElem::one(f4)).is_one());
  auto a = FieldElem::from_index(f4, 2), b = FieldElem::from_index(f4, 3);
  CHECK(frobenius(a) == b);
  CHECK(frobenius(b) == a);

  auto f9 = field_make(3, 2);
  int fixed = 0;
  for (std::uint64_t i = 0; i < 9; ++i) {
    auto x = FieldElem::from_index(f9, i);
    CHECK(frobenius(frobenius(x)) == x);
    fixed += frobenius(x) == x;
  }
  CHECK(fixed == 3);
}

TEST_CASE("property: field axioms for q <= 49") {
  for (std::uint64_t q : prime_powers_up_to(49)) {
    CAPTURE(q);
    auto k = field_of(q);
    std::vector<FieldElem> el;
    for (std::uint64_t i = 0; i < q; ++i)
      el.push_back(FieldElem::from_index(k, i));
    const auto zero = FieldElem::zero(k), one = FieldElem::one(k);
    bool ok = true;
    for (std::uint64_t i = 0; i < q; ++i) {
      if (!el[i].is_zero())
        ok &= (el[i] * el[i].inverse()).is_one();
      ok &= el[i] + zero == el[i] && el[i] * one == el[i];
      ok &= (el[i] + (-el[i])).is_zero();
      for (std::uint64_t j = 0; j < q; ++j) {
        ok &= el[i] + el[j] == el[j] + el[i];
        ok &= el[i] * el[j] == el[j] * el[i];
        ok &= frobenius(el[i] * el[j]) == frobenius(el[i]) * frobenius(el[j]);
        ok &= frobenius(el[i] + el[j]) == frobenius(el[i]) + frobenius(el[j]);
        const auto& z = el[(i * 7 + j * 3 + 1) % q];
        ok &= (el[i] * el[j]) * z == el[i] * (el[j] * z);
        ok &= (el[i] + el[j]) + z == el[i] + (el[j] + z);
        ok &= el[i] * (el[j] + z) == el[i] * el[j] + el[i] * z;
      }
    }
    CHECK(ok);
    // f-fold frobenius is the identity
    for (const auto& x : el) {
      FieldElem y = x;
      for (std::uint32_t r = 0; r < k->f(); ++r)
        y = frobenius(y);
      CHECK(y == x);
    }
  }
}

TEST_CASE("property: torus polynomial is irreducible with primitive root") {
  for (std::uint64_t q : prime_powers_up_to(49)) {
    if (q == 2 || q == 3)
      continue;
    CAPTURE(q);
    auto k = field_of(q);
    auto t = torus_constants(k);
    CHECK(quadratic_root_order(k, t.c, t.d) == q * q - 1);
  }
}

TEST_CASE("subfield embedding is a ring homomorphism") {
  auto k = field_make(3, 2), ext = field_make(3, 4);
  auto table = subfield_embedding(k, ext);
  for (std::uint64_t i = 0; i < 9; ++i)
    for (std::uint64_t j = 0; j < 9; ++j) {
      auto a = FieldElem::from_index(k, i), b = FieldElem::from_index(k, j);
      auto ea = FieldElem::from_index(ext, table[i]), eb = FieldElem::from_index(ext, table[j]);
      CHECK(FieldElem::from_index(ext, table[(a * b).index()]) == ea * eb);
      CHECK(FieldElem::from_index(ext, table[(a + b).index()]) == ea + eb);
    }
}
