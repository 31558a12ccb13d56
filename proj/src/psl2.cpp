#include "hollab/psl2.hpp"

#include <numeric>
#include <unordered_set>

#include "hollab/criterion.hpp"
#include "hollab/errors.hpp"
#include "hollab/homomorphism.hpp"

namespace hollab::psl2 {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok)
    throw VerificationError(what);
}

std::string qs(const Psl2Context& ctx) { return " (q=" + std::to_string(ctx.q) + ")"; }

} // namespace

Perm Psl2Context::matrix_perm(const Matrix& m) const {
  return matrix_perm(static_cast<std::uint32_t>(m.a.index()), static_cast<std::uint32_t>(m.b.index()),
                     static_cast<std::uint32_t>(m.c.index()), static_cast<std::uint32_t>(m.d.index()));
}

Perm Psl2Context::matrix_perm(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                              std::uint32_t d) const {
  if (add(mul(a, d), neg(mul(b, c))) == 0)
    throw InputError("singular matrix");
  const auto qq = static_cast<std::uint32_t>(q);
  std::vector<Point> img(q + 1);
  for (std::uint32_t i = 0; i <= qq; ++i) {
    std::uint32_t x = i < qq ? 1 : 0, y = i < qq ? i : 1;
    std::uint32_t X = add(mul(a, x), mul(b, y));
    std::uint32_t Y = add(mul(c, x), mul(d, y));
    img[i] = X != 0 ? mul(Y, inv(X)) : qq;
  }
  return Perm(std::move(img));
}

Perm Psl2Context::frobenius_perm() const {
  std::vector<Point> img(q + 1);
  for (std::uint64_t i = 0; i < q; ++i)
    img[i] = frob_[i];
  img[q] = static_cast<Point>(q);
  return Perm(std::move(img));
}

Psl2Context build_context(std::uint32_t p, std::uint32_t f) {
  if (!gf::is_prime(p) || f == 0)
    throw InputError("psl2: q must be a prime power");
  auto field = gf::field_make(p, f);
  if (field->q() <= 3)
    throw InputError("psl2: q must not be 2 or 3");
  Psl2Context ctx(field, gf::torus_constants(field));
  ctx.p = p;
  ctx.f = f;
  ctx.q = field->q();
  ctx.line.q = ctx.q;

  const std::uint64_t q = ctx.q;
  std::vector<gf::FieldElem> elems;
  for (std::uint64_t i = 0; i < q; ++i)
    elems.push_back(ctx.elem(i));
  ctx.add_.resize(q * q);
  ctx.mul_.resize(q * q);
  ctx.neg_.resize(q);
  ctx.inv_.assign(q, 0);
  ctx.frob_.resize(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      ctx.add_[x * q + y] = static_cast<std::uint32_t>((elems[x] + elems[y]).index());
      ctx.mul_[x * q + y] = static_cast<std::uint32_t>((elems[x] * elems[y]).index());
    }
    ctx.neg_[x] = static_cast<std::uint32_t>((-elems[x]).index());
    if (x != 0)
      ctx.inv_[x] = static_cast<std::uint32_t>(elems[x].inverse().index());
    ctx.frob_[x] = static_cast<std::uint32_t>(gf::frobenius(elems[x]).index());
  }

  // Transvections over a GF(p)-basis of GF(q) generate SL2(q).
  std::vector<Perm> gens;
  std::uint32_t basis = 1;
  for (std::uint32_t i = 0; i < f; ++i, basis *= p) {
    gens.push_back(ctx.matrix_perm(1, basis, 0, 1));
    gens.push_back(ctx.matrix_perm(1, 0, basis, 1));
  }
  const std::size_t deg = q + 1;
  ctx.psl = Group(deg, gens);
  auto omega = static_cast<std::uint32_t>(gf::primitive_generator(ctx.field).index());
  gens.push_back(ctx.matrix_perm(omega, 0, 0, 1));
  ctx.pgl = Group(deg, gens);
  ctx.frob = Group(deg, {ctx.frobenius_perm()});
  ctx.aut = join(ctx.pgl, ctx.frob);

  const std::uint64_t pgl_order = q * q * q - q;
  const std::uint64_t two = q % 2 == 0 ? 1 : 2;
  require(ctx.pgl.order() == pgl_order, "|PGL2| is not q^3-q" + qs(ctx));
  require(ctx.psl.order() * two == pgl_order, "[PGL2 : PSL2] is not gcd(2,q-1)" + qs(ctx));
  require(ctx.frob.order() == f, "the Frobenius subgroup does not have order f" + qs(ctx));
  require(ctx.aut.order() == pgl_order * f, "|aut| is not |PGL2| f" + qs(ctx));
  require(is_normal(ctx.aut, ctx.pgl), "PGL2 is not normal in aut" + qs(ctx));
  return ctx;
}

Psl2Context build_context(std::uint64_t q) {
  std::uint32_t p = 0, f = 0;
  if (!gf::prime_power(q, p, f))
    throw InputError("psl2: " + std::to_string(q) + " is not a prime power");
  return build_context(p, f);
}

Group subgroup_C(const Psl2Context& ctx) {
  const auto q = static_cast<std::uint32_t>(ctx.q);
  const auto c = static_cast<std::uint32_t>(ctx.torus.c.index());
  const auto d = static_cast<std::uint32_t>(ctx.torus.d.index());
  std::unordered_set<Perm, PermHash> images;
  std::vector<Perm> ordered;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0)
        continue;
      // [[x, -dy], [y, x - cy]]
      Perm g = ctx.matrix_perm(x, ctx.neg(ctx.mul(d, y)), y, ctx.add(x, ctx.neg(ctx.mul(c, y))));
      if (images.insert(g).second)
        ordered.push_back(g);
    }
  require(ordered.size() == ctx.q + 1, "the torus family does not have q+1 projective images" + qs(ctx));
  Group out = subgroup_from_elements(ctx.q + 1, ordered);
  require(out.order() == ctx.q + 1, "|C| is not q+1" + qs(ctx));
  return out;
}

Group subgroup_D(const Psl2Context& ctx) {
  const auto q = static_cast<std::uint32_t>(ctx.q);
  std::unordered_set<Perm, PermHash> images;
  std::vector<Perm> ordered;
  for (std::uint32_t u = 1; u < q; ++u)
    for (std::uint32_t v = 0; v < q; ++v)
      for (std::uint32_t w = 1; w < q; ++w) {
        Perm g = ctx.matrix_perm(u, v, 0, w);
        if (images.insert(g).second)
          ordered.push_back(g);
      }
  Group out = subgroup_from_elements(ctx.q + 1, ordered);
  require(out.order() == ctx.q * (ctx.q - 1), "|D| is not q(q-1)" + qs(ctx));
  return out;
}

CdReport verify_cd_factorization(const Psl2Context& ctx) {
  Group c = subgroup_C(ctx), d = subgroup_D(ctx);
  CdReport r{c.order(), d.order(), ctx.pgl.order()};
  require(r.c_order * r.d_order == r.pgl_order, "|C||D| differs from |PGL2|" + qs(ctx));
  require(intersection(c, d).order() == 1, "C meet D is not trivial" + qs(ctx));
  require(same_group(join(c, ctx.psl), join(d, ctx.psl)), "C PSL2 differs from D PSL2" + qs(ctx));
  return r;
}

SplitReport splitting_check(const Psl2Context& ctx) {
  if (ctx.q % 2 == 0)
    throw InputError("splitting_check: q must be odd");
  SplitReport r;
  r.which = ctx.q % 4 == 1 ? 'C' : 'D';
  r.whole = r.which == 'C' ? subgroup_C(ctx) : subgroup_D(ctx);
  r.meet = intersection(r.whole, ctx.psl);
  auto s = criterion::has_complement(r.whole, r.meet);
  require(s.has_value(), std::string(1, r.which) + " does not split over its meet with PSL2" + qs(ctx));
  r.complement = *s;
  return r;
}

std::vector<Group> enumerate_almost_simple(const Psl2Context& ctx) {
  return criterion::intermediate_between(ctx.aut, ctx.psl);
}

Group projection_E(const Psl2Context& ctx, const Group& N) {
  if (!is_subgroup(ctx.psl, N) || !is_subgroup(N, ctx.aut))
    throw InputError("projection_E: N must lie between PSL2 and aut");
  auto act = coset_action(ctx.aut, ctx.pgl);
  std::vector<Perm> imgs;
  for (const auto& g : N.generators())
    imgs.push_back(act.hom(g));
  const std::uint64_t m = Group(act.hom.target_degree(), imgs).order();
  Group e(ctx.q + 1, {ctx.frobenius_perm().pow(static_cast<std::int64_t>(ctx.f / m))});
  require(e.order() == m, "projection of N onto F has the wrong order" + qs(ctx));
  require(same_group(join(ctx.pgl, e), join(ctx.pgl, N)), "PGL2 E differs from PGL2 N" + qs(ctx));
  return e;
}

std::string to_string(CaseTag t) {
  switch (t) {
  case CaseTag::Even:
    return "q even";
  case CaseTag::OneMod4:
    return "q = 1 mod 4";
  case CaseTag::ThreeMod4:
    return "q = 3 mod 4";
  }
  return "";
}

TheoremWitness build_theorem_witness(const Psl2Context& ctx, const Group& N) {
  TheoremWitness w;
  w.N = N;
  w.E = projection_E(ctx, N);
  w.P = join(ctx.pgl, w.E);
  Group c = subgroup_C(ctx), d = subgroup_D(ctx);
  Group de = join(d, w.E);
  require(is_normal(de, d), "D is not normal in DE" + qs(ctx));
  require(de.order() == d.order() * w.E.order(), "D meet E is not trivial" + qs(ctx));

  if (ctx.q % 2 == 0) {
    w.case_tag = CaseTag::Even;
    require(same_group(w.P, N), "N differs from PGL2 E for even q" + qs(ctx));
  } else {
    w.case_tag = ctx.q % 4 == 1 ? CaseTag::OneMod4 : CaseTag::ThreeMod4;
  }
  if (w.case_tag == CaseTag::ThreeMod4) {
    w.A = de;
    w.B = c;
  } else {
    w.A = c;
    w.B = de;
  }

  require(is_subgroup(w.A, w.P) && is_subgroup(w.B, w.P), "A or B is not inside P" + qs(ctx));
  const std::uint64_t meet = intersection(w.A, w.B).order();
  w.checks.product = w.A.order() * w.B.order() / meet == w.P.order();
  require(w.checks.product, "P = AB fails" + qs(ctx));
  w.checks.trivial_meet = meet == 1;
  require(w.checks.trivial_meet, "A meet B = 1 fails" + qs(ctx));
  w.checks.same_join = same_group(join(w.A, N), join(w.B, N));
  require(w.checks.same_join, "AN = BN fails" + qs(ctx));

  Group k = intersection(w.A, N);
  const std::uint64_t index = w.A.order() / k.order();
  w.checks.coprime_split = std::gcd(k.order(), index) == 1;
  if (w.case_tag == CaseTag::ThreeMod4 && !is_subgroup(ctx.pgl, N)) {
    // N = PSL2 E: A meet N = (D meet PSL2) E has index 2 in A and |E| is odd.
    require(index == 2, "[A : A meet N] is not 2" + qs(ctx));
    require(k.order() == ctx.q * (ctx.q - 1) / 2 * w.E.order(), "|A meet N| is not q(q-1)|E|/2" + qs(ctx));
    require(w.E.order() % 2 == 1, "|E| is even" + qs(ctx));
  }
  auto s = criterion::has_complement(w.A, k);
  w.checks.splits = s.has_value();
  require(w.checks.splits, "A does not split over A meet N" + qs(ctx));
  w.complement = *s;
  return w;
}

} // namespace hollab::psl2
