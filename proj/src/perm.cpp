#include "hollab/perm.hpp"

#include <numeric>

#include "hollab/errors.hpp"

namespace hollab {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InputError("image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::unchecked(std::vector<Point> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point x = cyc[i];
      if (x >= degree)
        throw InputError("cycle point " + std::to_string(x + 1) +
                         " exceeds degree " + std::to_string(degree));
      if (used[x])
        throw InputError("point " + std::to_string(x + 1) +
                         " appears in more than one cycle");
      used[x] = true;
      p.images_[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return unchecked(std::move(inv));
}

Perm Perm::pow(std::int64_t k) const {
  Perm base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k)
                          : static_cast<std::uint64_t>(k);
  Perm result(degree());
  while (e > 0) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::optional<Point> Perm::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return std::nullopt;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i)
      continue;
    std::vector<Point> cyc;
    for (Point x = static_cast<Point>(i); !done[x]; x = images_[x]) {
      done[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  std::vector<Point> out(b.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.images_[b.images_[i]];
  return Perm::unchecked(std::move(out));
}

Perm conjugate(const Perm& g, const Perm& by) {
  // (by g by^-1)(by(x)) = by(g(x))
  std::vector<Point> out(g.degree());
  for (std::size_t x = 0; x < out.size(); ++x)
    out[by(static_cast<Point>(x))] = by(g(static_cast<Point>(x)));
  return Perm::unchecked(std::move(out));
}

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace hollab
