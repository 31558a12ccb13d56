#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hollab/group.hpp"

namespace hollab {

/// A homomorphism from a permutation group given by generator images.
///
/// Evaluation uses the stabilizer chain of the "graph" group generated by
/// the pairs (s, image(s)) on degree + target_degree points. If the
/// generator map does not extend to a homomorphism, the graph group is
/// larger than the source and construction of the chain is rejected.
class Homomorphism {
public:
  Homomorphism(Group source, std::size_t target_degree, std::vector<Perm> images);

  const Group& source() const { return source_; }
  std::size_t target_degree() const { return target_degree_; }
  const std::vector<Perm>& generator_images() const { return images_; }

  Perm operator()(const Perm& g) const;
  Group image() const;
  Group kernel(std::uint64_t bound = kScanBound) const;
  /// Full preimage of a subgroup of the image.
  Group preimage(const Group& sub, std::uint64_t bound = kScanBound) const;

private:
  const Group& graph() const;

  Group source_;
  std::size_t target_degree_;
  std::vector<Perm> images_;
  std::shared_ptr<Group> graph_;
};

/// Action of g on the left cosets x*h of h by left multiplication.
/// Cosets are numbered breadth-first from h itself, generators in order.
/// The kernel is the core of h in g.
struct CosetAction {
  Homomorphism hom;
  /// representatives[i] maps the trivial coset to coset i.
  std::vector<Perm> representatives;
};

CosetAction coset_action(const Group& g, const Group& h, std::uint64_t index_bound = 10'000);

} // namespace hollab
