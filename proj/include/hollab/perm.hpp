#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hollab {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as an image table.
///
/// Products compose like functions: (a * b)(x) == a(b(x)), so b acts first.
/// Every group in the library acts on the left with this convention.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws InputError unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm unchecked(std::vector<Point> images);
  /// Cycles are 0-based; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(std::int64_t k) const;
  std::uint64_t order() const;
  std::optional<Point> smallest_moved_point() const;
  std::vector<std::vector<Point>> cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

/// by * g * by^-1
Perm conjugate(const Perm& g, const Perm& by);
/// a^-1 b^-1 a b
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace hollab
