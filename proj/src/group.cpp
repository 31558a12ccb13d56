#include "hollab/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "hollab/errors.hpp"

namespace hollab {

struct Group::Lazy {
  std::once_flag once;
  std::unique_ptr<StabChain> chain;
};

Group::Group(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  if (degree == 0)
    throw InputError("group degree must be positive");
  for (const auto& g : gens_)
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " + std::to_string(degree));
}

const StabChain& Group::chain() const {
  std::call_once(lazy_->once,
                 [this] { lazy_->chain = std::make_unique<StabChain>(degree_, gens_); });
  return *lazy_->chain;
}

bool Group::contains(const Perm& g) const { return chain().contains(g); }

void Group::for_each_element(const std::function<bool(const Perm&)>& visit,
                             std::uint64_t bound) const {
  const auto& ch = chain();
  if (ch.order() > bound)
    throw ResourceError("element scan of a group of order " + std::to_string(ch.order()) +
                        " exceeds the bound " + std::to_string(bound));
  const auto& levels = ch.levels();
  const std::size_t depth = levels.size();
  if (depth == 0) {
    visit(Perm(degree_));
    return;
  }
  // Odometer over transversal indices with cached prefix products.
  std::vector<std::size_t> digit(depth, 0);
  std::vector<Perm> prefix(depth + 1, Perm(degree_));
  for (std::size_t k = 0; k < depth; ++k)
    prefix[k + 1] = prefix[k] * levels[k].transversal[0];
  while (true) {
    if (!visit(prefix[depth]))
      return;
    std::size_t k = depth;
    while (k > 0) {
      --k;
      if (++digit[k] < levels[k].transversal.size())
        break;
      digit[k] = 0;
      if (k == 0)
        return;
    }
    for (std::size_t j = k; j < depth; ++j)
      prefix[j + 1] = prefix[j] * levels[j].transversal[digit[j]];
  }
}

std::vector<Perm> Group::elements(std::uint64_t bound) const {
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(std::min(order(), bound)));
  for_each_element([&](const Perm& g) {
    out.push_back(g);
    return true;
  }, bound);
  return out;
}

namespace {

void require_same_degree(const Group& a, const Group& b) {
  if (a.degree() != b.degree())
    throw InputError("groups have different degrees (" + std::to_string(a.degree()) +
                     " vs " + std::to_string(b.degree()) + ")");
}

} // namespace

Group join(const Group& g, const Group& h) {
  require_same_degree(g, h);
  auto gens = g.generators();
  for (const auto& x : h.generators())
    if (std::find(gens.begin(), gens.end(), x) == gens.end())
      gens.push_back(x);
  return Group(g.degree(), std::move(gens));
}

bool is_subgroup(const Group& h, const Group& g) {
  require_same_degree(g, h);
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Perm& x) { return g.contains(x); });
}

bool same_group(const Group& a, const Group& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

Group subgroup_by_predicate(const Group& g, const std::function<bool(const Perm&)>& pred,
                            std::uint64_t bound) {
  Group current = Group::trivial(g.degree());
  std::vector<Perm> gens;
  g.for_each_element([&](const Perm& x) {
    if (pred(x) && !current.contains(x)) {
      gens.push_back(x);
      current = Group(g.degree(), gens);
    }
    return true;
  }, bound);
  return current;
}

Group subgroup_from_elements(std::size_t degree, const std::vector<Perm>& elements) {
  Group current = Group::trivial(degree);
  std::vector<Perm> gens;
  for (const auto& x : elements) {
    if (!current.contains(x)) {
      gens.push_back(x);
      current = Group(degree, gens);
    }
  }
  return current;
}

Group intersection(const Group& a, const Group& b, std::uint64_t bound) {
  require_same_degree(a, b);
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& large = a.order() <= b.order() ? b : a;
  if (small.order() > bound)
    throw ResourceError("intersection: both groups exceed the scan bound " +
                        std::to_string(bound));
  return subgroup_by_predicate(small, [&](const Perm& x) { return large.contains(x); },
                               bound);
}

Group normal_closure(const Group& g, const std::vector<Perm>& seeds) {
  std::vector<Perm> gens;
  Group current = Group::trivial(g.degree());
  auto add = [&](const Perm& x) {
    if (!current.contains(x)) {
      gens.push_back(x);
      current = Group(g.degree(), gens);
      return true;
    }
    return false;
  };
  for (const auto& s : seeds)
    add(s);
  // Close under conjugation by the generators of g.
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (const auto& t : g.generators())
      add(conjugate(gens[k], t));
  return current;
}

Group derived_subgroup(const Group& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

std::vector<Group> derived_series(const Group& g) {
  std::vector<Group> series{g};
  while (!series.back().is_trivial()) {
    Group next = derived_subgroup(series.back());
    const bool stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable)
      break;
  }
  return series;
}

bool is_solvable(const Group& g) { return derived_series(g).back().is_trivial(); }

std::optional<std::size_t> derived_length(const Group& g) {
  auto series = derived_series(g);
  if (!series.back().is_trivial())
    return std::nullopt;
  return series.size() - 1;
}

bool is_normal(const Group& g, const Group& h) {
  if (!is_subgroup(h, g))
    throw InputError("is_normal: H is not a subgroup of G");
  for (const auto& x : g.generators())
    for (const auto& y : h.generators())
      if (!h.contains(conjugate(y, x)))
        return false;
  return true;
}

Group normalizer(const Group& g, const Group& h, std::uint64_t bound) {
  require_same_degree(g, h);
  return subgroup_by_predicate(g, [&](const Perm& x) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](const Perm& y) { return h.contains(conjugate(y, x)); });
  }, bound);
}

Group conjugate(const Group& h, const Perm& g) {
  if (g.degree() != h.degree())
    throw InputError("conjugate: degree mismatch");
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators())
    gens.push_back(conjugate(x, g));
  return Group(h.degree(), std::move(gens));
}

std::vector<Point> orbit(const Group& g, Point x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : g.generators()) {
      Point y = s(out[k]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

bool is_transitive(const Group& g) { return orbit(g, 0).size() == g.degree(); }

std::uint64_t exponent(const Group& g, std::uint64_t bound) {
  std::uint64_t e = 1;
  g.for_each_element([&](const Perm& x) {
    e = std::lcm(e, x.order());
    return true;
  }, bound);
  return e;
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

} // namespace hollab
