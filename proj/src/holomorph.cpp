#include "hollab/holomorph.hpp"

#include <random>
#include <unordered_map>

#include "hollab/enumerated_group.hpp"
#include "hollab/errors.hpp"
#include "hollab/lattice.hpp"

namespace hollab::holomorph {

HolomorphContext build_holomorph(const Group& N, const Group& aut_action, std::uint64_t max_n) {
  if (N.order() > max_n)
    throw ResourceError("holomorph: |N| = " + std::to_string(N.order()) + " exceeds " +
                        std::to_string(max_n));
  if (aut_action.degree() != N.degree())
    throw InputError("holomorph: automorphism action has the wrong degree");
  for (const auto& a : aut_action.generators())
    for (const auto& g : N.generators())
      if (!N.contains(conjugate(g, a)))
        throw InputError("holomorph: automorphism action does not normalize N");

  HolomorphContext ctx;
  ctx.N = N;
  ctx.elements = N.elements();
  std::unordered_map<Perm, Point, PermHash> index;
  for (std::size_t i = 0; i < ctx.elements.size(); ++i) {
    index.emplace(ctx.elements[i], static_cast<Point>(i));
    if (ctx.elements[i].is_identity())
      ctx.identity_index = i;
  }
  const std::size_t n = ctx.elements.size();
  auto induced = [&](auto&& map) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = index.at(map(ctx.elements[i]));
    return Perm(std::move(img));
  };

  std::vector<Perm> lam, rho, aut;
  for (const auto& g : N.generators()) {
    lam.push_back(induced([&](const Perm& x) { return g * x; }));
    Perm gi = g.inverse();
    rho.push_back(induced([&](const Perm& x) { return x * gi; }));
  }
  for (const auto& a : aut_action.generators())
    aut.push_back(induced([&](const Perm& x) { return conjugate(x, a); }));
  ctx.lambda = Group(n, lam);
  ctx.rho = Group(n, rho);
  ctx.aut_image = Group(n, aut);
  ctx.hol = join(ctx.rho, ctx.aut_image);
  if (ctx.hol.order() != n * ctx.aut_image.order())
    throw VerificationError("holomorph: |hol| is not |N| |Aut|");
  return ctx;
}

bool is_regular(const Group& G) {
  return G.order() == G.degree() && is_transitive(G);
}

std::string to_string(const Fingerprint& f) {
  return "order " + std::to_string(f.order) + ", derived length " +
         (f.derived_length ? std::to_string(*f.derived_length) : std::string("none")) +
         ", exponent " + std::to_string(f.exponent);
}

std::string to_string(SearchStatus s) {
  switch (s) {
  case SearchStatus::Found:
    return "found";
  case SearchStatus::Absent:
    return "absent";
  case SearchStatus::UnknownAtScale:
    return "unknown at scale";
  }
  return "";
}

std::string to_string(Consistency c) {
  switch (c) {
  case Consistency::Consistent:
    return "consistent";
  case Consistency::Inconsistent:
    return "inconsistent";
  case Consistency::NotComparable:
    return "not comparable";
  }
  return "";
}

namespace {

RegularWitness make_witness(const Group& g) {
  RegularWitness w;
  w.G = g;
  w.solvable = is_solvable(g);
  w.hint.order = g.order();
  w.hint.derived_length = derived_length(g);
  w.hint.exponent = exponent(g);
  return w;
}

SearchResult random_search(const HolomorphContext& ctx, const SearchOptions& opts) {
  SearchResult r;
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t hol_order = ctx.hol.order();
  const std::uint64_t n = ctx.elements.size();
  std::uniform_int_distribution<std::uint64_t> pick(0, hol_order - 1);
  for (std::uint64_t t = 0; t < opts.random_trials; ++t) {
    Perm x = ctx.hol.element(pick(rng)), y = ctx.hol.element(pick(rng));
    if (n % x.order() != 0 || n % y.order() != 0)
      continue;
    Group g(n, {x, y});
    if (g.order() == n && is_regular(g) && is_solvable(g)) {
      r.status = SearchStatus::Found;
      r.witness = make_witness(g);
      return r;
    }
  }
  r.status = SearchStatus::UnknownAtScale;
  r.reason = "randomized search found nothing in " + std::to_string(opts.random_trials) + " trials";
  return r;
}

} // namespace

SearchResult find_solvable_regular(const HolomorphContext& ctx, const SearchOptions& opts) {
  SearchResult r;
  const std::uint64_t n = ctx.elements.size();
  if (ctx.hol.order() > opts.max_order) {
    if (opts.randomized_fallback)
      return random_search(ctx, opts);
    r.reason = "|Hol(N)| = " + std::to_string(ctx.hol.order()) + " exceeds the bound " +
               std::to_string(opts.max_order);
    return r;
  }

  try {
    EnumeratedGroup eh(ctx.hol, opts.max_order);
    lattice::LatticeOptions lopts;
    lopts.max_order = opts.max_order;
    std::vector<char> fixed_point_free;
    if (opts.prune) {
      fixed_point_free.resize(eh.size());
      for (Rank i = 0; i < eh.size(); ++i) {
        const Perm& g = eh.element(i);
        bool fpf = true;
        for (Point x = 0; x < n && fpf; ++x)
          fpf = g(x) != x;
        fixed_point_free[i] = fpf;
      }
      // Semiregular subgroups of order dividing |N|: closed under subgroups
      // and conjugation, and every regular subgroup is one.
      lopts.keep = [&](const EnumeratedGroup&, std::span<const Rank> key) {
        if (n % key.size() != 0)
          return false;
        for (Rank x : key)
          if (x != eh.identity() && !fixed_point_free[x])
            return false;
        return true;
      };
    } else {
      lopts.keep_members = true;
    }
    auto classes = lattice::solvable_subgroup_classes(eh, lopts);
    for (const auto& c : classes.classes) {
      if (c.order != n)
        continue;
      bool regular = is_regular(c.representative);
      if (!opts.prune) {
        for (const auto& m : c.members)
          if (is_regular(m) != regular)
            throw VerificationError("holomorph: regularity differs within a conjugacy class");
      } else if (!regular) {
        throw VerificationError("holomorph: semiregular subgroup of order |N| is not regular");
      }
      if (regular)
        r.regular_classes.push_back(c.representative);
    }
  } catch (const ResourceError& e) {
    r.status = SearchStatus::UnknownAtScale;
    r.reason = e.what();
    r.regular_classes.clear();
    return r;
  }

  if (r.regular_classes.empty()) {
    r.status = SearchStatus::Absent;
    return r;
  }
  r.status = SearchStatus::Found;
  r.witness = make_witness(r.regular_classes.front());
  if (!r.witness->solvable || !is_regular(r.witness->G) || !is_subgroup(r.witness->G, ctx.hol))
    throw VerificationError("holomorph: witness failed re-verification");
  return r;
}

CrossReport cross_validate(const HolomorphContext& ctx, const SearchResult& search,
                           const criterion::Verdict& verdict) {
  using criterion::Conclusion;
  if (verdict.n_order != ctx.N.order())
    return {Consistency::NotComparable, "the verdict concerns a group of a different order"};
  if (verdict.conclusion == Conclusion::Inconclusive)
    return {Consistency::NotComparable, "the criterion verdict is inconclusive"};
  if (search.status == SearchStatus::UnknownAtScale)
    return {Consistency::NotComparable, "the holomorph search is unknown at scale"};
  const bool found = search.status == SearchStatus::Found;
  if (verdict.conclusion == Conclusion::True && !found)
    return {Consistency::Inconsistent, "criterion true but no solvable regular subgroup exists"};
  if (verdict.conclusion == Conclusion::False && found)
    return {Consistency::Inconsistent, "criterion false but a solvable regular subgroup exists"};
  return {Consistency::Consistent, found ? "criterion true and a solvable regular subgroup exists"
                                         : "criterion false and no solvable regular subgroup exists"};
}

} // namespace hollab::holomorph
