#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hollab/gfield.hpp"
#include "hollab/group.hpp"

namespace hollab::psl2 {

/// Points of the projective line over GF(q): [1:y] has index index(y) and
/// [0:1] has index q.
struct ProjLine {
  std::uint64_t q = 0;
  std::size_t size() const { return static_cast<std::size_t>(q + 1); }
};

/// [[a, b], [c, d]] acting on columns: [x:y] -> [ax+by : cx+dy].
struct Matrix {
  gf::FieldElem a, b, c, d;
  gf::FieldElem det() const { return a * d - b * c; }
};

class Psl2Context {
public:
  gf::FieldPtr field;
  std::uint32_t p = 0, f = 0;
  std::uint64_t q = 0;
  ProjLine line;
  Group pgl, psl, frob, aut;
  gf::TorusConstants torus;

  /// Throws InputError on a singular matrix.
  Perm matrix_perm(const Matrix& m) const;
  /// Same, entries given by field index.
  Perm matrix_perm(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const;
  Perm frobenius_perm() const;

  gf::FieldElem elem(std::uint64_t index) const { return gf::FieldElem::from_index(field, index); }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_[x * q + y]; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return mul_[x * q + y]; }
  std::uint32_t neg(std::uint32_t x) const { return neg_[x]; }
  std::uint32_t inv(std::uint32_t x) const { return inv_[x]; }

private:
  friend Psl2Context build_context(std::uint32_t p, std::uint32_t f);
  Psl2Context(gf::FieldPtr fld, gf::TorusConstants t) : field(std::move(fld)), torus(std::move(t)) {}
  std::vector<std::uint32_t> add_, mul_, neg_, inv_, frob_;
};

/// q = p^f, q not 2 or 3 (InputError).
Psl2Context build_context(std::uint32_t p, std::uint32_t f);
/// Same, from q; InputError if q is not a prime power.
Psl2Context build_context(std::uint64_t q);

Group subgroup_C(const Psl2Context& ctx);
Group subgroup_D(const Psl2Context& ctx);

struct CdReport {
  std::uint64_t c_order = 0, d_order = 0, pgl_order = 0;
};
/// |C||D| = |pgl|, C meet D = 1 and C psl = D psl; VerificationError otherwise.
CdReport verify_cd_factorization(const Psl2Context& ctx);

struct SplitReport {
  char which = 'C';
  Group whole;
  Group meet;
  Group complement;
};
/// q = 1 mod 4: C over C meet psl; q = 3 mod 4: D over D meet psl.
/// InputError for even q, VerificationError if no complement exists.
SplitReport splitting_check(const Psl2Context& ctx);

/// Every N with psl <= N <= aut, one per aut-conjugacy class, psl first.
std::vector<Group> enumerate_almost_simple(const Psl2Context& ctx);

/// The subgroup of frob with the same image as N in aut/pgl.
Group projection_E(const Psl2Context& ctx, const Group& N);

enum class CaseTag { Even, OneMod4, ThreeMod4 };
std::string to_string(CaseTag t);

struct WitnessChecks {
  bool product = false;
  bool trivial_meet = false;
  bool same_join = false;
  bool splits = false;
  /// gcd(|A meet N|, [A : A meet N]) = 1
  bool coprime_split = false;
};

struct TheoremWitness {
  Group N, P, A, B, E;
  CaseTag case_tag = CaseTag::Even;
  WitnessChecks checks;
  Group complement;
};

/// Throws VerificationError naming the first failed condition.
TheoremWitness build_theorem_witness(const Psl2Context& ctx, const Group& N);

} // namespace hollab::psl2
