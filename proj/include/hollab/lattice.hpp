#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hollab/enumerated_group.hpp"
#include "hollab/group.hpp"

namespace hollab::lattice {

/// One conjugacy class of subgroups.
struct SubgroupClass {
  Group representative;
  std::uint64_t order = 1;
  std::uint64_t class_size = 1;
  /// Sorted ranks (in the ambient enumeration) of the representative.
  std::vector<Rank> elements;
  /// Every member of the class in discovery order, filled only when
  /// LatticeOptions::keep_members is set. members[0] is not necessarily
  /// the representative.
  std::vector<std::vector<Rank>> member_elements;
  std::vector<Group> members;
};

enum class Completeness { SolvableOnly, AllSubgroups };

struct SubgroupClassList {
  Group ambient;
  std::vector<SubgroupClass> classes;
  Completeness complete_for = Completeness::SolvableOnly;
};

struct LatticeOptions {
  std::uint64_t max_order = kScanBound;
  /// Optional pruning predicate on sorted element ranks. It must be closed
  /// under taking subgroups and invariant under conjugation in the ambient
  /// group; subgroups it rejects are neither reported nor extended.
  std::function<bool(const EnumeratedGroup&, std::span<const Rank>)> keep;
  bool keep_members = false;
};

/// Conjugacy classes of solvable subgroups by cyclic extension: each class
/// representative H is extended by elements x of N(H) whose order modulo H
/// is prime. Classes appear layer by layer (composition length), the
/// representative of a class being its member with the lexicographically
/// smallest sorted rank list.
SubgroupClassList solvable_subgroup_classes(const Group& g, const LatticeOptions& opts = {});
SubgroupClassList solvable_subgroup_classes(const EnumeratedGroup& g,
                                            const LatticeOptions& opts = {});

/// Every subgroup class of a solvable group. Throws InputError otherwise.
SubgroupClassList all_subgroup_classes_of_solvable(const Group& g,
                                                   const LatticeOptions& opts = {});

/// One representative per ambient-conjugacy class among `subs`.
SubgroupClassList conjugacy_dedupe(const Group& ambient, const std::vector<Group>& subs,
                                   std::uint64_t max_order = kScanBound);

} // namespace hollab::lattice
