#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace solw {

/// Permutation of {0, ..., n-1}. Products act left to right:
/// i^(a*b) = (i^a)^b, matching the right-action convention of conjugation
/// x^g = g^-1 x g used throughout the library.
class Perm {
 public:
  using Point = std::uint16_t;

  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  /// Cycles use 0-based points; e.g. {{0,1,2},{3,4}}.
  static Perm from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<int>> cycles);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  Point image(std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(std::int64_t e) const;
  std::uint64_t order() const;
  /// Cycle lengths > 1, sorted descending.
  std::vector<int> cycle_type() const;
  /// Disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
  std::string to_cycle_string() const;

  /// Relabel points: returns p^-1 * this * p viewed through the bijection p.
  Perm conjugate_by(const Perm& p) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

}  // namespace solw

template <>
struct std::hash<solw::Perm> {
  std::size_t operator()(const solw::Perm& p) const noexcept { return p.hash(); }
};
