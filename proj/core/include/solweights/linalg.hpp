#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace solw {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept;
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  Gf2Matrix transpose() const;
  Gf2Matrix operator*(const Gf2Matrix& o) const;
  std::size_t rank() const;
  bool is_zero() const noexcept;
  std::vector<std::vector<int>> to_rows() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Dense matrix over GF(p), p a small prime; entries kept in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols);
  static FpMatrix identity(unsigned p, std::size_t n);
  static FpMatrix from_rows(unsigned p, const std::vector<std::vector<long>>& rows);

  unsigned prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long v) noexcept;

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix transpose() const;
  /// Rows stacked: [this; o].
  FpMatrix vstack(const FpMatrix& o) const;
  bool is_zero() const noexcept;
  std::size_t rank() const;
  long determinant() const;
  /// Row-reduced echelon form.
  FpMatrix rref() const;
  /// Basis of {v : this * v = 0} as rows of the result, in reduced echelon form.
  FpMatrix nullspace() const;
  std::vector<std::vector<unsigned>> to_rows() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  unsigned p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<unsigned> a_;
};

unsigned mod_inverse(unsigned a, unsigned p);

}  // namespace solw
