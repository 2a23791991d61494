#include "solweights/linalg.hpp"

#include <utility>

#include "solweights/errors.hpp"

namespace solw {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) noexcept {
  auto& w = data_[r * words_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (cols_ != o.rows_) throw Error("GF(2) product: shape mismatch");
  Gf2Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      for (std::size_t w = 0; w < o.words_; ++w) out.data_[r * out.words_ + w] ^= o.data_[k * o.words_ + w];
    }
  return out;
}

std::size_t Gf2Matrix::rank() const {
  auto m = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * words_ + w] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < words_; ++k) std::swap(m[pivot * words_ + k], m[rank * words_ + k]);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || !(m[r * words_ + w] & bit)) continue;
      for (std::size_t k = w; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
    }
    ++rank;
  }
  return rank;
}

bool Gf2Matrix::is_zero() const noexcept {
  for (const auto w : data_)
    if (w) return false;
  return true;
}

std::vector<std::vector<int>> Gf2Matrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? 1 : 0;
  return out;
}

unsigned mod_inverse(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) throw Error("zero has no inverse mod p");
  unsigned r = 1;
  unsigned e = p - 2;
  std::uint64_t b = a;
  while (e) {
    if (e & 1U) r = static_cast<unsigned>(r * b % p);
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned p, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long v) noexcept {
  const long p = p_;
  a_[r * cols_ + c] = static_cast<unsigned>(((v % p) + p) % p);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw Error("GF(p) product: shape mismatch");
  FpMatrix out(p_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t v = a_[r * cols_ + k];
      if (!v) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        auto& dst = out.a_[r * o.cols_ + c];
        dst = static_cast<unsigned>((dst + v * o.a_[k * o.cols_ + c]) % p_);
      }
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("GF(p) sum: shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + o.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("GF(p) difference: shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.a_[c * rows_ + r] = a_[r * cols_ + c];
  return t;
}

FpMatrix FpMatrix::vstack(const FpMatrix& o) const {
  if (rows_ == 0) return o;
  if (o.rows_ == 0) return *this;
  if (cols_ != o.cols_) throw Error("vstack: column mismatch");
  FpMatrix out(p_, rows_ + o.rows_, cols_);
  std::copy(a_.begin(), a_.end(), out.a_.begin());
  std::copy(o.a_.begin(), o.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
  return out;
}

bool FpMatrix::is_zero() const noexcept {
  for (const auto v : a_)
    if (v) return false;
  return true;
}

FpMatrix FpMatrix::rref() const {
  FpMatrix m = *this;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t pivot = row;
    while (pivot < rows_ && m.a_[pivot * cols_ + c] == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(m.a_[pivot * cols_ + k], m.a_[row * cols_ + k]);
    const std::uint64_t inv = mod_inverse(m.a_[row * cols_ + c], p_);
    for (std::size_t k = 0; k < cols_; ++k) m.a_[row * cols_ + k] = static_cast<unsigned>(m.a_[row * cols_ + k] * inv % p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::uint64_t f = m.a_[r * cols_ + c];
      if (r == row || f == 0) continue;
      for (std::size_t k = 0; k < cols_; ++k)
        m.a_[r * cols_ + k] = static_cast<unsigned>((m.a_[r * cols_ + k] + (p_ - f) * m.a_[row * cols_ + k]) % p_);
    }
    ++row;
  }
  return m;
}

std::size_t FpMatrix::rank() const {
  const FpMatrix r = rref();
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool nz = false;
    for (std::size_t c = 0; c < cols_ && !nz; ++c) nz = r.a_[i * cols_ + c] != 0;
    n += nz;
  }
  return n;
}

long FpMatrix::determinant() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  FpMatrix m = *this;
  const std::size_t n = rows_;
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m.a_[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m.a_[pivot * n + k], m.a_[c * n + k]);
      det = (p_ - det) % p_;
    }
    det = det * m.a_[c * n + c] % p_;
    const std::uint64_t inv = mod_inverse(m.a_[c * n + c], p_);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = m.a_[r * n + c] * inv % p_;
      if (!f) continue;
      for (std::size_t k = c; k < n; ++k)
        m.a_[r * n + k] = static_cast<unsigned>((m.a_[r * n + k] + (p_ - f) * m.a_[c * n + k]) % p_);
    }
  }
  return static_cast<long>(det);
}

FpMatrix FpMatrix::nullspace() const {
  const FpMatrix r = rref();
  std::vector<std::size_t> pivot_col;
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r.a_[i * cols_ + c]) {
        pivot_col.push_back(c);
        is_pivot[c] = 1;
        break;
      }
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix basis(p_, free_cols.size(), cols_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.a_[k * cols_ + f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      basis.a_[k * cols_ + pivot_col[i]] = (p_ - r.a_[i * cols_ + f]) % p_;
  }
  return basis.rref();
}

std::vector<std::vector<unsigned>> FpMatrix::to_rows() const {
  std::vector<std::vector<unsigned>> out(rows_, std::vector<unsigned>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = a_[r * cols_ + c];
  return out;
}

}  // namespace solw
