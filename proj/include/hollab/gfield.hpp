#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace hollab::gf {

/// GF(p^f) in polynomial basis over GF(p).
///
/// Elements are coefficient vectors (constant term first). The integer
/// index of an element is sum(c_i * p^i), so comparing indices compares
/// coefficient vectors with the leading coefficient most significant.
class Field {
public:
  using Coeffs = std::vector<std::uint32_t>;

  /// `modulus` is monic of degree f, constant term first, length f + 1.
  Field(std::uint32_t p, std::uint32_t f, Coeffs modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint64_t q() const { return q_; }
  const Coeffs& modulus() const { return modulus_; }

  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs sub(const Coeffs& a, const Coeffs& b) const;
  Coeffs neg(const Coeffs& a) const;
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs inv(const Coeffs& a) const;

  std::uint64_t index_of(const Coeffs& a) const;
  Coeffs from_index(std::uint64_t index) const;

private:
  std::uint32_t p_, f_;
  std::uint64_t q_;
  Coeffs modulus_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Value-semantic field element; carries its field.
class FieldElem {
public:
  FieldElem(FieldPtr field, Field::Coeffs coeffs);

  static FieldElem zero(const FieldPtr& field);
  static FieldElem one(const FieldPtr& field);
  static FieldElem from_index(const FieldPtr& field, std::uint64_t index);
  /// Embeds an integer through the prime field.
  static FieldElem from_int(const FieldPtr& field, std::int64_t n);

  const FieldPtr& field() const { return field_; }
  const Field::Coeffs& coeffs() const { return coeffs_; }
  std::uint64_t index() const { return field_->index_of(coeffs_); }
  bool is_zero() const;
  bool is_one() const;

  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;
  /// Multiplicative order; throws InputError on zero.
  std::uint64_t multiplicative_order() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

private:
  FieldPtr field_;
  Field::Coeffs coeffs_;
};

/// Coefficients of X^2 + cX + d.
struct TorusConstants {
  FieldElem c;
  FieldElem d;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Writes q = p^f; returns false if q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& f);

/// Is the monic polynomial (constant term first) irreducible over GF(p)?
bool is_irreducible(std::uint32_t p, const Field::Coeffs& monic);

/// GF(p^f) with the smallest monic irreducible modulus of degree f.
FieldPtr field_make(std::uint32_t p, std::uint32_t f);

/// The smallest-index element generating the multiplicative group.
FieldElem primitive_generator(const FieldPtr& field);

/// x -> x^p
FieldElem frobenius(const FieldElem& x);

/// Elements of `field` as values in `ext`, where `ext` has degree a multiple
/// of field's degree: table[index in field] = index in ext.
std::vector<std::uint64_t> subfield_embedding(const FieldPtr& field, const FieldPtr& ext);

/// X^2 + cX + d is the minimal polynomial over GF(q) of the primitive
/// generator of GF(q^2), GF(q^2) being built as GF(p^{2f}). q must not be 2 or 3.
TorusConstants torus_constants(const FieldPtr& field);

} // namespace hollab::gf
