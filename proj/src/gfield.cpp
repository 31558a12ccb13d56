#include "hollab/gfield.hpp"

#include <algorithm>

#include "hollab/errors.hpp"

namespace hollab::gf {

namespace {

using Coeffs = Field::Coeffs;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and small.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1u)
      result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo monic-or-not b over GF(p); b nonzero and trimmed.
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& f) {
  auto fac = prime_factors(q);
  if (fac.size() != 1)
    return false;
  p = static_cast<std::uint32_t>(fac[0]);
  f = 0;
  while (q > 1) {
    q /= p;
    ++f;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const Coeffs& monic) {
  const std::size_t deg = monic.size() - 1;
  if (deg == 0)
    return false;
  if (deg == 1)
    return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs div(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      div[d] = 1;
      if (poly_mod(monic, div, p).empty())
        return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t f, Coeffs modulus)
    : p_(p), f_(f), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p))
    throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0)
    throw InputError("field degree must be positive");
  if (modulus_.size() != f + 1 || modulus_.back() != 1)
    throw InputError("field modulus must be monic of degree f");
  if (!is_irreducible(p, modulus_))
    throw InputError("field modulus is reducible");
  for (std::uint32_t i = 0; i < f; ++i)
    q_ *= p;
}

Coeffs Field::add(const Coeffs& a, const Coeffs& b) const {
  Coeffs out(f_);
  for (std::uint32_t i = 0; i < f_; ++i)
    out[i] = (a[i] + b[i]) % p_;
  return out;
}

Coeffs Field::neg(const Coeffs& a) const {
  Coeffs out(f_);
  for (std::uint32_t i = 0; i < f_; ++i)
    out[i] = (p_ - a[i]) % p_;
  return out;
}

Coeffs Field::sub(const Coeffs& a, const Coeffs& b) const { return add(a, neg(b)); }

Coeffs Field::mul(const Coeffs& a, const Coeffs& b) const {
  Coeffs prod(2 * f_ - 1, 0);
  for (std::uint32_t i = 0; i < f_; ++i) {
    if (a[i] == 0)
      continue;
    for (std::uint32_t j = 0; j < f_; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
  }
  Coeffs r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(f_, 0);
  return r;
}

Coeffs Field::inv(const Coeffs& a) const {
  if (std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; }))
    throw InputError("inverse of zero");
  // a^(q-2)
  Coeffs result(f_, 0);
  result[0] = 1;
  Coeffs base = a;
  std::uint64_t e = q_ - 2;
  while (e > 0) {
    if (e & 1u)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

std::uint64_t Field::index_of(const Coeffs& a) const {
  std::uint64_t idx = 0;
  for (std::uint32_t i = f_; i-- > 0;)
    idx = idx * p_ + a[i];
  return idx;
}

Coeffs Field::from_index(std::uint64_t index) const {
  if (index >= q_)
    throw InputError("field element index out of range");
  Coeffs out(f_);
  for (std::uint32_t i = 0; i < f_; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return out;
}

FieldElem::FieldElem(FieldPtr field, Field::Coeffs coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->f())
    throw InputError("coefficient vector has the wrong length");
}

FieldElem FieldElem::zero(const FieldPtr& field) { return {field, Coeffs(field->f(), 0)}; }

FieldElem FieldElem::one(const FieldPtr& field) {
  Coeffs c(field->f(), 0);
  c[0] = 1;
  return {field, std::move(c)};
}

FieldElem FieldElem::from_index(const FieldPtr& field, std::uint64_t index) {
  return {field, field->from_index(index)};
}

FieldElem FieldElem::from_int(const FieldPtr& field, std::int64_t n) {
  auto p = static_cast<std::int64_t>(field->p());
  Coeffs c(field->f(), 0);
  c[0] = static_cast<std::uint32_t>(((n % p) + p) % p);
  return {field, std::move(c)};
}

bool FieldElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElem::is_one() const {
  if (coeffs_[0] != 1)
    return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElem FieldElem::inverse() const { return {field_, field_->inv(coeffs_)}; }

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem result = one(field_);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::uint64_t FieldElem::multiplicative_order() const {
  if (is_zero())
    throw InputError("zero has no multiplicative order");
  std::uint64_t n = field_->q() - 1;
  for (std::uint64_t r : prime_factors(n))
    while (n % r == 0 && pow(n / r).is_one())
      n /= r;
  return n;
}

namespace {

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field())
    throw InputError("field elements belong to different fields");
}

} // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->add(a.coeffs_, b.coeffs_)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->sub(a.coeffs_, b.coeffs_)};
}

FieldElem operator-(const FieldElem& a) { return {a.field_, a.field_->neg(a.coeffs_)}; }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->mul(a.coeffs_, b.coeffs_)};
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

FieldPtr field_make(std::uint32_t p, std::uint32_t f) {
  if (!is_prime(p))
    throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0)
    throw InputError("field degree must be positive");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < f; ++i)
    count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Coeffs m(f + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < f; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[f] = 1;
    if (is_irreducible(p, m))
      return std::make_shared<const Field>(p, f, std::move(m));
  }
  throw VerificationError("no irreducible polynomial found");
}

FieldElem primitive_generator(const FieldPtr& field) {
  for (std::uint64_t i = 1; i < field->q(); ++i) {
    auto x = FieldElem::from_index(field, i);
    if (x.multiplicative_order() == field->q() - 1)
      return x;
  }
  throw VerificationError("no primitive element found");
}

FieldElem frobenius(const FieldElem& x) { return x.pow(x.field()->p()); }

std::vector<std::uint64_t> subfield_embedding(const FieldPtr& field, const FieldPtr& ext) {
  if (field->p() != ext->p() || ext->f() % field->f() != 0)
    throw InputError("field does not embed in the extension");
  // alpha = smallest root in ext of field's modulus.
  const auto& mod = field->modulus();
  auto eval = [&](const FieldElem& x) {
    FieldElem acc = FieldElem::zero(ext);
    for (std::size_t i = mod.size(); i-- > 0;)
      acc = acc * x + FieldElem::from_int(ext, mod[i]);
    return acc;
  };
  for (std::uint64_t idx = 0; idx < ext->q(); ++idx) {
    auto alpha = FieldElem::from_index(ext, idx);
    if (!eval(alpha).is_zero())
      continue;
    std::vector<std::uint64_t> table(field->q());
    for (std::uint64_t e = 0; e < field->q(); ++e) {
      auto coeffs = field->from_index(e);
      FieldElem acc = FieldElem::zero(ext);
      for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * alpha + FieldElem::from_int(ext, coeffs[i]);
      table[e] = acc.index();
    }
    return table;
  }
  throw VerificationError("subfield modulus has no root in the extension");
}

TorusConstants torus_constants(const FieldPtr& field) {
  if (field->q() == 2 || field->q() == 3)
    throw InputError("torus constants require q != 2, 3");
  auto ext = field_make(field->p(), 2 * field->f());
  auto g = primitive_generator(ext);
  auto gq = g.pow(field->q());
  auto c_ext = -(g + gq);
  auto d_ext = g * gq;
  auto table = subfield_embedding(field, ext);
  auto pull_back = [&](const FieldElem& x) {
    auto it = std::find(table.begin(), table.end(), x.index());
    if (it == table.end())
      throw VerificationError("minimal polynomial coefficient outside GF(q)");
    return FieldElem::from_index(field, static_cast<std::uint64_t>(it - table.begin()));
  };
  return {pull_back(c_ext), pull_back(d_ext)};
}

} // namespace hollab::gf
