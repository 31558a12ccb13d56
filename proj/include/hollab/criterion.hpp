#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hollab/group.hpp"

namespace hollab::criterion {

struct SearchOptions {
  /// Largest group whose solvable subgroup lattice may be enumerated; also
  /// bounds every element scan made while building contexts.
  std::uint64_t max_order = 10'000;
  unsigned threads = 1;
  /// check_part_a stops after this many witnesses.
  std::size_t max_witnesses = static_cast<std::size_t>(-1);
};

/// socle <= N <= autN <= ambient, with autN the normalizer of N in ambient.
/// The socle is designated by the caller; the search itself uses N in the
/// role of Inn(N).
struct AlmostSimpleContext {
  Group ambient;
  Group socle;
  Group N;
  Group autN;
};

/// Validates containments, computes autN and checks that N is centre-free.
AlmostSimpleContext make_context(const Group& ambient, const Group& socle, const Group& N,
                                 std::uint64_t scan_bound = kScanBound);

enum class Part { A, B };

struct CriterionWitness {
  Group P;
  Group A;
  Group B;
  Part part = Part::A;
  /// Complement of A meet N in A (part b only).
  std::optional<Group> complement;
};

/// Subgroups strictly between a normal subgroup and its overgroup, one per
/// overgroup-conjugacy class, obtained by lifting subgroups of the quotient.
std::vector<Group> intermediate_between(const Group& big, const Group& normal_sub,
                                        std::uint64_t bound = kScanBound);

/// All P with N <= P <= autN up to autN-conjugacy.
std::vector<Group> intermediate_subgroups(const AlmostSimpleContext& ctx,
                                          std::uint64_t bound = kScanBound);

/// Every (A-class, B-class) pair over every P that admits a conjugate of B with
/// |P| = |A||B|/|A meet B| and AN = BN; the first such conjugate is reported.
std::vector<CriterionWitness> check_part_a(const AlmostSimpleContext& ctx,
                                           const SearchOptions& opts = {});
/// First witness with A meet B = 1, |P| = |A||B|, AN = BN and a complement to
/// A meet N in A.
std::optional<CriterionWitness> check_part_b(const AlmostSimpleContext& ctx,
                                             const SearchOptions& opts = {});

/// Searches for S <= A with S meet K = 1 and |S||K| = |A|. K must be normal in A.
std::optional<Group> has_complement(const Group& A, const Group& K,
                                    std::uint64_t bound = kScanBound);

/// Re-checks a witness using only membership tests and literal products.
/// Throws VerificationError naming the first failed condition.
void verify_witness(const Group& N, const CriterionWitness& w);

enum class Conclusion { True, False, Inconclusive };
enum class InconclusiveKind {
  None,
  /// a part (a) witness exists but no part (b) witness
  Mathematical,
  /// some search exceeded a resource bound
  AtScale
};

struct PRow {
  Group P;
  bool part_a = false;
  bool part_b = false;
  std::optional<CriterionWitness> witness;
  bool at_scale = false;
  std::string reason;
};

struct Verdict {
  std::uint64_t index = 1;
  bool normal = false;
  std::uint64_t n_order = 0;
  Conclusion conclusion = Conclusion::Inconclusive;
  InconclusiveKind kind = InconclusiveKind::None;
  std::string reason;
  std::vector<CriterionWitness> witnesses;
  std::vector<PRow> rows;
};

Verdict classify(const AlmostSimpleContext& ctx, const SearchOptions& opts = {});

/// Verdict for a context that could not even be built.
Verdict at_scale_verdict(std::uint64_t index, bool normal, std::uint64_t n_order,
                         std::string reason);

std::string to_string(Conclusion c);
/// <index, "normal"|"not normal", "true"|"false"|"inconclusive">
std::string format_tuple(const Verdict& v);

} // namespace hollab::criterion
