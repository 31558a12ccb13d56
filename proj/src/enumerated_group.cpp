#include "hollab/enumerated_group.hpp"

#include <algorithm>

#include "hollab/errors.hpp"

namespace hollab {

EnumeratedGroup::EnumeratedGroup(Group g, std::uint64_t bound)
    : group_(std::move(g)), elements_(group_.elements(bound)) {
  identity_ = rank_of(Perm(group_.degree()));
  for (const auto& s : group_.generators()) {
    std::vector<Rank> table(elements_.size());
    for (std::size_t r = 0; r < elements_.size(); ++r)
      table[r] = rank_of(conjugate(elements_[r], s));
    conj_.push_back(std::move(table));
  }
}

std::optional<Rank> EnumeratedGroup::find(const Perm& g) const {
  auto r = group_.rank(g);
  if (!r)
    return std::nullopt;
  return static_cast<Rank>(*r);
}

Rank EnumeratedGroup::rank_of(const Perm& g) const {
  auto r = group_.rank(g);
  if (!r)
    throw InputError("element is not in the enumerated group");
  return static_cast<Rank>(*r);
}

std::vector<Rank> EnumeratedGroup::subgroup_ranks(const Group& h) const {
  std::vector<Rank> out;
  out.reserve(static_cast<std::size_t>(h.order()));
  h.for_each_element([&](const Perm& x) {
    out.push_back(rank_of(x));
    return true;
  }, size());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t RankVectorHash::operator()(const std::vector<Rank>& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
  for (Rank r : v) {
    h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace hollab
