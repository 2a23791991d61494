#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "solweights/field.hpp"

namespace solw {

/// 2x2 matrix over a tower field. The field pointer is not owned; whoever
/// builds the matrices keeps the Field alive.
class Mat2 {
 public:
  using Elem = Field::Elem;

  Mat2() = default;
  Mat2(const Field* f, Elem a, Elem b, Elem c, Elem d) : f_(f), e_{a, b, c, d} {}
  static Mat2 identity(const Field* f) { return {f, 1, 0, 0, 1}; }
  static Mat2 diag(const Field* f, Elem a, Elem d) { return {f, a, 0, 0, d}; }

  const Field* field() const noexcept { return f_; }
  Elem operator()(int r, int c) const noexcept { return e_[2 * r + c]; }
  const std::array<Elem, 4>& entries() const noexcept { return e_; }

  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
  Mat2 negated() const;
  Mat2 pow(std::int64_t e) const;
  Elem det() const;
  Elem trace() const;
  bool is_identity() const noexcept { return e_ == std::array<Elem, 4>{1, 0, 0, 1}; }
  /// True when every entry lies in the subfield of the given size (codes below it).
  bool entries_below(std::uint64_t subfield_size) const noexcept;
  std::string to_string() const;

  std::size_t hash() const noexcept;
  friend bool operator==(const Mat2& a, const Mat2& b) noexcept { return a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const Mat2& a, const Mat2& b) noexcept { return a.e_ <=> b.e_; }

 private:
  const Field* f_ = nullptr;
  std::array<Elem, 4> e_{1, 0, 0, 1};
};

}  // namespace solw

template <>
struct std::hash<solw::Mat2> {
  std::size_t operator()(const solw::Mat2& m) const noexcept { return m.hash(); }
};
