#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "solweights/mat2.hpp"

namespace solw {

/// Element of K = Khat / <(-1,-1,-1)>, where Khat sits in the wreath product
/// SL_2(q^2) wr S_3 acting block-monomially on V_1 + V_2 + V_3.
///
/// An element (m_1, m_2, m_3; pi) sends v in V_i to m_i v in V_pi(i). Products
/// compose as maps with the right factor applied first. Of the two lifts
/// (m; pi) and (-m; pi) the lexicographically smaller entry sequence is stored,
/// so equal elements of K compare equal.
///
/// The field must have at most 1024 elements (table-driven products).
class KElem {
 public:
  using Slot = std::uint16_t;

  KElem() = default;
  KElem(const Mat2& m1, const Mat2& m2, const Mat2& m3, std::array<std::uint8_t, 3> pi = {0, 1, 2});

  static KElem identity(const Field* f);
  /// Block permutation with identity matrices; pi maps slot i to slot pi[i].
  static KElem permutation(const Field* f, std::array<std::uint8_t, 3> pi);

  const Field* field() const noexcept { return f_; }
  Mat2 block(int i) const;
  std::array<std::uint8_t, 3> slot_permutation() const noexcept { return pi_; }
  bool is_identity() const noexcept;

  KElem operator*(const KElem& rhs) const;
  KElem inverse() const;
  KElem pow(std::int64_t e) const;

  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const KElem& a, const KElem& b) noexcept { return a.m_ == b.m_ && a.pi_ == b.pi_; }
  friend std::strong_ordering operator<=>(const KElem& a, const KElem& b) noexcept {
    if (auto c = a.pi_ <=> b.pi_; c != 0) return c;
    return a.m_ <=> b.m_;
  }

 private:
  void canonicalize() noexcept;

  std::array<Slot, 12> m_{};
  std::array<std::uint8_t, 3> pi_{0, 1, 2};
  const Field* f_ = nullptr;
};

}  // namespace solw

template <>
struct std::hash<solw::KElem> {
  std::size_t operator()(const solw::KElem& k) const noexcept { return k.hash(); }
};
