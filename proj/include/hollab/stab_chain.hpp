#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hollab/perm.hpp"

namespace hollab {

/// One level of a stabilizer chain: the subgroup fixing all earlier base
/// points, its strong generators, and the orbit/transversal of `base`.
struct StabLevel {
  Point base = 0;
  std::vector<Perm> generators;
  /// Orbit points in ascending order; this order fixes element ranks.
  std::vector<Point> orbit;
  /// point -> index into `orbit`, or -1.
  std::vector<std::int32_t> position;
  /// transversal[i](base) == orbit[i]
  std::vector<Perm> transversal;
  std::vector<Perm> transversal_inv;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Base points are appended as the smallest point moved by the first
/// generator (or sifting residue) that fixes every existing base point.
class StabChain {
public:
  StabChain(std::size_t degree, const std::vector<Perm>& generators);

  std::size_t degree() const { return degree_; }
  const std::vector<StabLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;
  std::uint64_t order() const { return order_; }

  /// Residue after sifting from `from_level`, and the level where sifting
  /// stopped (levels().size() when it went all the way through).
  std::pair<Perm, std::size_t> sift(const Perm& g, std::size_t from_level = 0) const;
  bool contains(const Perm& g) const;

  /// Position of g in the enumeration order, or nullopt if g is not a member.
  /// Elements are ordered lexicographically by their sift coordinates,
  /// first level most significant, orbit points ascending.
  std::optional<std::uint64_t> rank(const Perm& g) const;
  Perm element(std::uint64_t index) const;

private:
  void compute_orbit(StabLevel& level) const;
  void finalize();

  std::size_t degree_;
  std::vector<StabLevel> levels_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

} // namespace hollab
