#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hollab/perm.hpp"
#include "hollab/stab_chain.hpp"

namespace hollab {

/// Default bound on the number of elements any element scan may visit.
inline constexpr std::uint64_t kScanBound = 100'000;

/// A finitely generated permutation group. The stabilizer chain is built on
/// first use and shared between copies; handles are immutable afterwards
/// and safe to share across threads.
class Group {
public:
  Group() : Group(1, {}) {}
  Group(std::size_t degree, std::vector<Perm> generators);

  static Group trivial(std::size_t degree) { return Group(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const;

  std::uint64_t order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& g) const;

  std::optional<std::uint64_t> rank(const Perm& g) const { return chain().rank(g); }
  Perm element(std::uint64_t index) const { return chain().element(index); }

  /// All elements in rank order. Throws ResourceError above `bound`.
  std::vector<Perm> elements(std::uint64_t bound = kScanBound) const;
  /// Visits elements in rank order until `visit` returns false.
  void for_each_element(const std::function<bool(const Perm&)>& visit,
                        std::uint64_t bound = kScanBound) const;

private:
  struct Lazy;
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<Lazy> lazy_;
};

Group join(const Group& g, const Group& h);
/// Every generator of `h` lies in `g`.
bool is_subgroup(const Group& h, const Group& g);
bool same_group(const Group& a, const Group& b);

/// Smallest subgroup of `g` containing every element accepted by `pred`,
/// found by scanning the elements of `g`.
Group subgroup_by_predicate(const Group& g, const std::function<bool(const Perm&)>& pred,
                            std::uint64_t bound = kScanBound);
/// Subgroup generated by `elements`, keeping only those not already implied.
Group subgroup_from_elements(std::size_t degree, const std::vector<Perm>& elements);

Group intersection(const Group& a, const Group& b, std::uint64_t bound = kScanBound);
Group normal_closure(const Group& g, const std::vector<Perm>& seeds);
Group derived_subgroup(const Group& g);
std::vector<Group> derived_series(const Group& g);
bool is_solvable(const Group& g);
/// Length of the derived series down to 1; nullopt if g is not solvable.
std::optional<std::size_t> derived_length(const Group& g);

bool is_normal(const Group& g, const Group& h);
Group normalizer(const Group& g, const Group& h, std::uint64_t bound = kScanBound);
/// g h g^-1
Group conjugate(const Group& h, const Perm& g);

std::vector<Point> orbit(const Group& g, Point x);
bool is_transitive(const Group& g);
std::uint64_t exponent(const Group& g, std::uint64_t bound = kScanBound);
bool is_abelian(const Group& g);

} // namespace hollab
