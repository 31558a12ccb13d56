#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hollab/group.hpp"

namespace hollab {

using Rank = std::uint32_t;

/// A group with all elements materialized in rank order, plus conjugation
/// tables for its generators. Used by every search that works with
/// subgroups as sets of element ranks.
class EnumeratedGroup {
public:
  explicit EnumeratedGroup(Group g, std::uint64_t bound = kScanBound);

  const Group& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const Perm& element(Rank r) const { return elements_[r]; }
  const std::vector<Perm>& elements() const { return elements_; }
  Rank identity() const { return identity_; }

  std::optional<Rank> find(const Perm& g) const;
  /// Throws InputError if g is not a member.
  Rank rank_of(const Perm& g) const;
  Rank multiply(Rank a, Rank b) const { return rank_of(elements_[a] * elements_[b]); }
  /// rank of s * e_r * s^-1 for the i-th generator s
  Rank conjugate_by_generator(std::size_t gen, Rank r) const { return conj_[gen][r]; }
  std::size_t generator_count() const { return conj_.size(); }

  /// Sorted ranks of the elements of a subgroup given by generators.
  std::vector<Rank> subgroup_ranks(const Group& h) const;

private:
  Group group_;
  std::vector<Perm> elements_;
  std::vector<std::vector<Rank>> conj_;
  Rank identity_ = 0;
};

struct RankVectorHash {
  std::size_t operator()(const std::vector<Rank>& v) const noexcept;
};

} // namespace hollab
