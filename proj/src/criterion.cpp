#include "hollab/criterion.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "hollab/enumerated_group.hpp"
#include "hollab/errors.hpp"
#include "hollab/homomorphism.hpp"
#include "hollab/lattice.hpp"
#include "hollab/parallel.hpp"

namespace hollab::criterion {

namespace {

// Pair search inside one P. Subgroups are sets of ranks in P's enumeration;
// AN = BN is decided in the quotient P/N.
class PairSearch {
public:
  PairSearch(const Group& P, const Group& N, const SearchOptions& opts)
      : P_(P), N_(N), opts_(opts), ep_(P, opts.max_order) {
    lattice::LatticeOptions lopts;
    lopts.max_order = opts.max_order;
    lopts.keep_members = true;
    classes_ = lattice::solvable_subgroup_classes(ep_, lopts).classes;

    sorted_.resize(classes_.size());
    std::iota(sorted_.begin(), sorted_.end(), std::size_t{0});
    std::stable_sort(sorted_.begin(), sorted_.end(), [&](std::size_t a, std::size_t b) {
      return classes_[a].order > classes_[b].order;
    });

    in_n_.assign(ep_.size(), 0);
    for (Rank r : ep_.subgroup_ranks(N))
      in_n_[r] = 1;

    if (N.order() != P.order())
      quotient_.emplace(coset_action(P, N, opts.max_order));
    for (const auto& c : classes_) {
      std::uint64_t meet = 0;
      for (Rank r : c.elements)
        meet += in_n_[r];
      a_meet_n_.push_back(meet);
      an_order_.push_back(c.order * N.order() / meet);
      if (quotient_) {
        std::vector<Perm> imgs;
        for (const auto& g : c.representative.generators())
          imgs.push_back(quotient_->hom(g));
        images_.emplace_back(quotient_->hom.target_degree(), std::move(imgs));
      }
    }
  }

  std::optional<CriterionWitness> first(Part part) const {
    return parallel_first<CriterionWitness>(sorted_.size(), opts_.threads, [&](std::size_t i) {
      auto found = search_from(sorted_[i], part, true);
      return found.empty() ? std::nullopt : std::optional<CriterionWitness>(found.front());
    });
  }

  std::vector<CriterionWitness> all(Part part, std::size_t cap) const {
    auto per_a = parallel_map<std::vector<CriterionWitness>>(
        sorted_.size(), opts_.threads, [&](std::size_t i) { return search_from(sorted_[i], part, false); });
    std::vector<CriterionWitness> out;
    for (auto& v : per_a)
      for (auto& w : v) {
        if (out.size() >= cap)
          return out;
        out.push_back(std::move(w));
      }
    return out;
  }

private:
  std::vector<CriterionWitness> search_from(std::size_t ia, Part part, bool first_only) const {
    std::vector<CriterionWitness> out;
    const auto& a = classes_[ia];
    const std::uint64_t p = ep_.size();
    if (part == Part::B && p % a.order != 0)
      return out;

    std::optional<Group> complement;
    if (part == Part::B) {
      std::vector<Perm> meet;
      for (Rank r : a.elements)
        if (in_n_[r])
          meet.push_back(ep_.element(r));
      complement = has_complement(a.representative,
                                  subgroup_from_elements(P_.degree(), meet), opts_.max_order);
      if (!complement)
        return out;
    }

    std::vector<char> in_a(ep_.size(), 0);
    for (Rank r : a.elements)
      in_a[r] = 1;

    for (std::size_t ib : sorted_) {
      const auto& b = classes_[ib];
      const std::uint64_t ab = a.order * b.order;
      std::uint64_t target;
      if (part == Part::B) {
        if (ab != p)
          continue;
        target = 1;
      } else {
        if (ab % p != 0)
          continue;
        target = ab / p;
        if (std::gcd(a.order, b.order) % target != 0)
          continue;
      }
      if (an_order_[ia] != an_order_[ib])
        continue;

      for (std::size_t m = 0; m < b.members.size(); ++m) {
        std::uint64_t meet = 0;
        for (Rank r : b.member_elements[m])
          meet += in_a[r];
        if (meet != target)
          continue;
        if (quotient_) {
          const auto& img = images_[ia];
          bool same = std::all_of(b.members[m].generators().begin(), b.members[m].generators().end(),
                                  [&](const Perm& g) { return img.contains(quotient_->hom(g)); });
          if (!same)
            continue;
        }
        out.push_back(CriterionWitness{P_, a.representative, b.members[m], part, complement});
        if (first_only)
          return out;
        break;
      }
    }
    return out;
  }

  Group P_, N_;
  SearchOptions opts_;
  EnumeratedGroup ep_;
  std::vector<lattice::SubgroupClass> classes_;
  std::vector<std::size_t> sorted_;
  std::vector<char> in_n_;
  std::optional<CosetAction> quotient_;
  std::vector<Group> images_;
  std::vector<std::uint64_t> an_order_, a_meet_n_;
};

bool is_centre_free(const Group& n, std::uint64_t bound) {
  bool trivial = true;
  n.for_each_element([&](const Perm& z) {
    if (z.is_identity())
      return true;
    bool central = std::all_of(n.generators().begin(), n.generators().end(),
                               [&](const Perm& g) { return g * z == z * g; });
    if (central)
      trivial = false;
    return trivial;
  }, bound);
  return trivial;
}

} // namespace

AlmostSimpleContext make_context(const Group& ambient, const Group& socle, const Group& N,
                                 std::uint64_t scan_bound) {
  if (ambient.degree() != socle.degree() || ambient.degree() != N.degree())
    throw InputError("ambient, socle and N must have the same degree");
  if (!is_subgroup(socle, N))
    throw InputError("the socle is not contained in N");
  if (!is_subgroup(N, ambient))
    throw InputError("N is not contained in the ambient group");
  if (!is_normal(ambient, socle))
    throw InputError("the socle is not normal in the ambient group");
  Group autN = is_normal(ambient, N) ? ambient : normalizer(ambient, N, scan_bound);
  if (!is_centre_free(N, scan_bound))
    throw InputError("N has non-trivial centre");
  return {ambient, socle, N, autN};
}

std::vector<Group> intermediate_between(const Group& big, const Group& normal_sub,
                                        std::uint64_t bound) {
  if (!is_normal(big, normal_sub))
    throw InputError("intermediate_between: subgroup is not normal");
  auto act = coset_action(big, normal_sub, bound);
  Group quotient = act.hom.image();
  if (!is_solvable(quotient))
    throw InputError("intermediate_between: quotient is not solvable");
  lattice::LatticeOptions lopts;
  lopts.max_order = bound;
  auto classes = lattice::all_subgroup_classes_of_solvable(quotient, lopts);
  std::vector<Group> out;
  for (const auto& c : classes.classes) {
    auto gens = normal_sub.generators();
    for (const auto& s : c.representative.generators())
      gens.push_back(act.representatives[s(0)]);
    Group lifted(big.degree(), std::move(gens));
    if (lifted.order() != normal_sub.order() * c.order)
      throw VerificationError("lifted subgroup has the wrong order");
    out.push_back(std::move(lifted));
  }
  return out;
}

std::vector<Group> intermediate_subgroups(const AlmostSimpleContext& ctx, std::uint64_t bound) {
  return intermediate_between(ctx.autN, ctx.N, bound);
}

std::vector<CriterionWitness> check_part_a(const AlmostSimpleContext& ctx,
                                           const SearchOptions& opts) {
  std::vector<CriterionWitness> out;
  for (const auto& P : intermediate_subgroups(ctx, opts.max_order)) {
    PairSearch search(P, ctx.N, opts);
    auto found = search.all(Part::A, opts.max_witnesses - out.size());
    out.insert(out.end(), found.begin(), found.end());
    if (out.size() >= opts.max_witnesses)
      break;
  }
  return out;
}

std::optional<CriterionWitness> check_part_b(const AlmostSimpleContext& ctx,
                                             const SearchOptions& opts) {
  for (const auto& P : intermediate_subgroups(ctx, opts.max_order)) {
    PairSearch search(P, ctx.N, opts);
    if (auto w = search.first(Part::B))
      return w;
  }
  return std::nullopt;
}

std::optional<Group> has_complement(const Group& A, const Group& K, std::uint64_t bound) {
  if (!is_subgroup(K, A) || !is_normal(A, K))
    throw InputError("has_complement: K is not a normal subgroup of A");
  const std::uint64_t index = A.order() / K.order();
  if (index == 1)
    return Group::trivial(A.degree());
  EnumeratedGroup ea(A, bound);
  std::vector<char> in_k(ea.size(), 0);
  for (Rank r : ea.subgroup_ranks(K))
    in_k[r] = 1;
  // Subgroups of order dividing the index that meet K trivially; both
  // conditions pass to subgroups and are invariant under A-conjugation.
  lattice::LatticeOptions opts;
  opts.max_order = bound;
  opts.keep = [&](const EnumeratedGroup&, std::span<const Rank> key) {
    if (index % key.size() != 0)
      return false;
    return std::none_of(key.begin(), key.end(),
                        [&](Rank r) { return r != ea.identity() && in_k[r]; });
  };
  auto classes = lattice::solvable_subgroup_classes(ea, opts);
  for (const auto& c : classes.classes)
    if (c.order == index)
      return c.representative;
  return std::nullopt;
}

void verify_witness(const Group& N, const CriterionWitness& w) {
  auto fail = [](const std::string& what) { throw VerificationError("witness check failed: " + what); };
  if (!is_subgroup(w.A, w.P) || !is_subgroup(w.B, w.P))
    fail("A and B must be subgroups of P");
  if (!is_subgroup(N, w.P))
    fail("N must be a subgroup of P");
  if (!is_solvable(w.A) || !is_solvable(w.B))
    fail("A and B must be solvable");

  const std::uint64_t ab = w.A.order() * w.B.order();
  if (ab <= kScanBound) {
    auto ea = w.A.elements(), eb = w.B.elements();
    std::unordered_set<Perm, PermHash> product;
    for (const auto& x : ea)
      for (const auto& y : eb)
        product.insert(x * y);
    if (product.size() != w.P.order())
      fail("P = AB (literal product set has " + std::to_string(product.size()) + " elements, |P| = " +
           std::to_string(w.P.order()) + ")");
  } else if (ab / intersection(w.A, w.B).order() != w.P.order()) {
    fail("P = AB (|A||B|/|A meet B| differs from |P|)");
  }

  Group an = join(w.A, N), bn = join(w.B, N);
  if (!is_subgroup(an, bn) || !is_subgroup(bn, an))
    fail("AN = BN");

  if (w.part == Part::B) {
    if (intersection(w.A, w.B).order() != 1)
      fail("A meet B = 1");
    if (!w.complement)
      fail("A splits over A meet N (no complement attached)");
    const Group& s = *w.complement;
    Group k = intersection(w.A, N);
    if (!is_subgroup(s, w.A))
      fail("A splits over A meet N (complement is not inside A)");
    if (intersection(s, k).order() != 1 || s.order() * k.order() != w.A.order())
      fail("A splits over A meet N (complement has the wrong intersection or order)");
  }
}

Verdict at_scale_verdict(std::uint64_t index, bool normal, std::uint64_t n_order,
                         std::string reason) {
  Verdict v;
  v.index = index;
  v.normal = normal;
  v.n_order = n_order;
  v.conclusion = Conclusion::Inconclusive;
  v.kind = InconclusiveKind::AtScale;
  v.reason = std::move(reason);
  return v;
}

Verdict classify(const AlmostSimpleContext& ctx, const SearchOptions& opts) {
  Verdict v;
  v.index = ctx.N.order() / ctx.socle.order();
  v.normal = is_normal(ctx.ambient, ctx.N);
  v.n_order = ctx.N.order();

  std::vector<Group> ps;
  try {
    ps = intermediate_subgroups(ctx, opts.max_order);
  } catch (const ResourceError& e) {
    return at_scale_verdict(v.index, v.normal, v.n_order, e.what());
  }

  for (const auto& P : ps) {
    PRow row;
    row.P = P;
    try {
      PairSearch search(P, ctx.N, opts);
      if (auto w = search.first(Part::B)) {
        verify_witness(ctx.N, *w);
        row.part_a = row.part_b = true;
        row.witness = w;
        v.witnesses.push_back(*w);
      } else if (auto a = search.first(Part::A)) {
        verify_witness(ctx.N, *a);
        row.part_a = true;
        row.witness = a;
      }
    } catch (const ResourceError& e) {
      row.at_scale = true;
      row.reason = e.what();
    }
    v.rows.push_back(std::move(row));
  }

  auto any = [&](auto pred) { return std::any_of(v.rows.begin(), v.rows.end(), pred); };
  if (any([](const PRow& r) { return r.part_b; })) {
    v.conclusion = Conclusion::True;
  } else if (any([](const PRow& r) { return r.at_scale; })) {
    v.conclusion = Conclusion::Inconclusive;
    v.kind = InconclusiveKind::AtScale;
    for (const auto& r : v.rows)
      if (r.at_scale) {
        v.reason = r.reason;
        break;
      }
  } else if (!any([](const PRow& r) { return r.part_a; })) {
    v.conclusion = Conclusion::False;
  } else {
    v.conclusion = Conclusion::Inconclusive;
    v.kind = InconclusiveKind::Mathematical;
    v.reason = "a part (a) factorization exists but no part (b) witness";
  }
  return v;
}

std::string to_string(Conclusion c) {
  switch (c) {
  case Conclusion::True:
    return "true";
  case Conclusion::False:
    return "false";
  case Conclusion::Inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

std::string format_tuple(const Verdict& v) {
  return "<" + std::to_string(v.index) + ", \"" + (v.normal ? "normal" : "not normal") +
         "\", \"" + to_string(v.conclusion) + "\">";
}

} // namespace hollab::criterion
