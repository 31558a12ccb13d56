#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hollab/criterion.hpp"
#include "hollab/group.hpp"

namespace hollab::holomorph {

inline constexpr std::uint64_t kMaxNOrder = 360;
inline constexpr std::uint64_t kMaxHolOrder = 100'000;

/// Hol(N) acting on the elements of N. elements[i] is the i-th element of N
/// in chain order, and points of hol are these indices.
struct HolomorphContext {
  Group N;
  std::vector<Perm> elements;
  std::size_t identity_index = 0;
  Group hol;
  /// x -> n x
  Group lambda;
  /// x -> x n^-1
  Group rho;
  /// x -> a x a^-1
  Group aut_image;
};

/// `aut_action` must act on N's domain and normalize N (InputError).
/// ResourceError if |N| exceeds max_n.
HolomorphContext build_holomorph(const Group& N, const Group& aut_action,
                                 std::uint64_t max_n = kMaxNOrder);

/// Transitive with |G| equal to the degree.
bool is_regular(const Group& G);

struct Fingerprint {
  std::uint64_t order = 0;
  std::optional<std::size_t> derived_length;
  std::uint64_t exponent = 0;
};
std::string to_string(const Fingerprint& f);

struct RegularWitness {
  Group G;
  bool solvable = false;
  Fingerprint hint;
};

enum class SearchStatus { Found, Absent, UnknownAtScale };
std::string to_string(SearchStatus s);

struct SearchOptions {
  std::uint64_t max_order = kMaxHolOrder;
  /// Restrict the lattice to semiregular subgroups of order dividing |N|.
  bool prune = true;
  /// Above max_order, try random 2-generated subgroups instead of giving up.
  bool randomized_fallback = false;
  std::uint64_t random_trials = 100'000;
  std::uint64_t seed = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::UnknownAtScale;
  std::optional<RegularWitness> witness;
  /// One representative per hol-class of solvable regular subgroups; empty
  /// for the randomized search.
  std::vector<Group> regular_classes;
  std::string reason;
};

SearchResult find_solvable_regular(const HolomorphContext& ctx, const SearchOptions& opts = {});

enum class Consistency { Consistent, Inconsistent, NotComparable };
std::string to_string(Consistency c);

struct CrossReport {
  Consistency status = Consistency::NotComparable;
  std::string detail;
};

/// A true verdict needs a solvable regular subgroup and a false verdict
/// forbids one.
CrossReport cross_validate(const HolomorphContext& ctx, const SearchResult& search,
                           const criterion::Verdict& verdict);

} // namespace hollab::holomorph
