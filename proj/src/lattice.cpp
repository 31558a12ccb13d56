#include "hollab/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "hollab/errors.hpp"
#include "hollab/gfield.hpp"

namespace hollab::lattice {

namespace {

using Key = std::vector<Rank>;
using KeySet = std::unordered_set<Key, RankVectorHash>;

struct Member {
  Key key;
  std::vector<Perm> gens;
};

Key conjugate_key(const EnumeratedGroup& g, std::size_t gen, const Key& key) {
  Key out(key.size());
  for (std::size_t i = 0; i < key.size(); ++i)
    out[i] = g.conjugate_by_generator(gen, key[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Walks the conjugacy class of `start` under the generators of g, marking
// every member as seen, and turns it into a SubgroupClass.
SubgroupClass close_class(const EnumeratedGroup& g, Member start, KeySet& seen,
                          bool keep_members) {
  std::vector<Member> members;
  seen.insert(start.key);
  members.push_back(std::move(start));
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t s = 0; s < g.generator_count(); ++s) {
      Key next = conjugate_key(g, s, members[k].key);
      if (seen.count(next))
        continue;
      seen.insert(next);
      const Perm& t = g.group().generators()[s];
      std::vector<Perm> gens;
      gens.reserve(members[k].gens.size());
      for (const auto& x : members[k].gens)
        gens.push_back(conjugate(x, t));
      members.push_back(Member{std::move(next), std::move(gens)});
    }
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < members.size(); ++k)
    if (members[k].key < members[best].key)
      best = k;

  SubgroupClass cls;
  const auto degree = g.group().degree();
  cls.representative = Group(degree, members[best].gens);
  cls.order = members[best].key.size();
  cls.class_size = members.size();
  cls.elements = members[best].key;
  if (keep_members) {
    for (auto& m : members) {
      cls.members.emplace_back(degree, std::move(m.gens));
      cls.member_elements.push_back(std::move(m.key));
    }
  }
  return cls;
}

} // namespace

SubgroupClassList solvable_subgroup_classes(const EnumeratedGroup& g,
                                            const LatticeOptions& opts) {
  const std::size_t n = g.size();
  if (n > opts.max_order)
    throw ResourceError("subgroup lattice of a group of order " + std::to_string(n) +
                        " exceeds the bound " + std::to_string(opts.max_order));

  SubgroupClassList out;
  out.ambient = g.group();
  KeySet seen;
  out.classes.push_back(
      close_class(g, Member{Key{g.identity()}, {}}, seen, opts.keep_members));

  std::vector<std::size_t> layer{0};
  std::vector<char> in_h(n), in_norm(n), done(n);
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t ci : layer) {
      // Copies: out.classes grows below.
      const Key h_key = out.classes[ci].elements;
      const std::vector<Perm> h_gens = out.classes[ci].representative.generators();

      std::fill(in_h.begin(), in_h.end(), 0);
      for (Rank r : h_key)
        in_h[r] = 1;
      std::fill(done.begin(), done.end(), 0);

      for (Rank r = 0; r < n; ++r) {
        if (in_h[r])
          continue;
        const Perm& x = g.element(r);
        in_norm[r] = std::all_of(h_gens.begin(), h_gens.end(), [&](const Perm& y) {
          return in_h[g.rank_of(conjugate(y, x))] != 0;
        });
      }

      for (Rank r = 0; r < n; ++r) {
        if (in_h[r] || !in_norm[r] || done[r])
          continue;
        const Perm& x = g.element(r);
        // Order of x modulo H.
        std::uint64_t k = 1;
        Perm y = x;
        while (!in_h[g.rank_of(y)]) {
          y = y * x;
          ++k;
        }
        if (!gf::is_prime(k))
          continue;

        Key key;
        key.reserve(h_key.size() * k);
        Perm xi(g.group().degree());
        for (std::uint64_t i = 0; i < k; ++i) {
          for (Rank hr : h_key)
            key.push_back(g.rank_of(xi * g.element(hr)));
          xi = xi * x;
        }
        for (Rank kr : key)
          done[kr] = 1;
        std::sort(key.begin(), key.end());
        if (seen.count(key))
          continue;
        if (opts.keep && !opts.keep(g, key)) {
          seen.insert(std::move(key));
          continue;
        }
        auto gens = h_gens;
        gens.push_back(x);
        out.classes.push_back(
            close_class(g, Member{std::move(key), std::move(gens)}, seen, opts.keep_members));
        next.push_back(out.classes.size() - 1);
      }
    }
    layer = std::move(next);
  }
  return out;
}

SubgroupClassList solvable_subgroup_classes(const Group& g, const LatticeOptions& opts) {
  if (g.order() > opts.max_order)
    throw ResourceError("subgroup lattice of a group of order " + std::to_string(g.order()) +
                        " exceeds the bound " + std::to_string(opts.max_order));
  EnumeratedGroup eg(g, opts.max_order);
  return solvable_subgroup_classes(eg, opts);
}

SubgroupClassList all_subgroup_classes_of_solvable(const Group& g, const LatticeOptions& opts) {
  if (g.order() > opts.max_order)
    throw ResourceError("subgroup lattice of a group of order " + std::to_string(g.order()) +
                        " exceeds the bound " + std::to_string(opts.max_order));
  if (!is_solvable(g))
    throw InputError("all_subgroup_classes_of_solvable: group is not solvable");
  auto list = solvable_subgroup_classes(g, opts);
  list.complete_for = Completeness::AllSubgroups;
  return list;
}

SubgroupClassList conjugacy_dedupe(const Group& ambient, const std::vector<Group>& subs,
                                   std::uint64_t max_order) {
  EnumeratedGroup eg(ambient, max_order);
  SubgroupClassList out;
  out.ambient = ambient;
  out.complete_for = Completeness::SolvableOnly;
  KeySet seen;
  for (const auto& h : subs) {
    if (!is_subgroup(h, ambient))
      throw InputError("conjugacy_dedupe: subgroup is not contained in the ambient group");
    Key key = eg.subgroup_ranks(h);
    if (seen.count(key))
      continue;
    out.classes.push_back(close_class(eg, Member{std::move(key), h.generators()}, seen, false));
  }
  return out;
}

} // namespace hollab::lattice
