#include "solweights/kelement.hpp"

#include <sstream>

#include "solweights/errors.hpp"

namespace solw {

KElem::KElem(const Mat2& m1, const Mat2& m2, const Mat2& m3, std::array<std::uint8_t, 3> pi)
    : pi_(pi), f_(m1.field()) {
  if (f_ == nullptr || f_->size() > 1024) throw Error("K-elements need a field with at most 1024 elements");
  const Mat2* ms[3] = {&m1, &m2, &m3};
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 4; ++k) m_[4 * i + k] = static_cast<Slot>(ms[i]->entries()[k]);
  }
  canonicalize();
}

KElem KElem::identity(const Field* f) {
  const Mat2 one = Mat2::identity(f);
  return {one, one, one};
}

KElem KElem::permutation(const Field* f, std::array<std::uint8_t, 3> pi) {
  const Mat2 one = Mat2::identity(f);
  return {one, one, one, pi};
}

Mat2 KElem::block(int i) const {
  return {f_, m_[4 * i], m_[4 * i + 1], m_[4 * i + 2], m_[4 * i + 3]};
}

bool KElem::is_identity() const noexcept { return *this == identity(f_); }

void KElem::canonicalize() noexcept {
  std::array<Slot, 12> neg{};
  for (int k = 0; k < 12; ++k) neg[k] = static_cast<Slot>(f_->neg(m_[k]));
  if (neg < m_) m_ = neg;
}

KElem KElem::operator*(const KElem& rhs) const {
  // (g h): v in V_i -> h -> m^h_i v in V_{pi_h(i)} -> g -> m^g_{pi_h(i)} m^h_i v.
  const Field& f = *f_;
  KElem out;
  out.f_ = f_;
  for (int i = 0; i < 3; ++i) {
    const int j = rhs.pi_[i];
    out.pi_[i] = pi_[j];
    const Slot* a = &m_[4 * j];
    const Slot* b = &rhs.m_[4 * i];
    Slot* c = &out.m_[4 * i];
    c[0] = static_cast<Slot>(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])));
    c[1] = static_cast<Slot>(f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])));
    c[2] = static_cast<Slot>(f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])));
    c[3] = static_cast<Slot>(f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])));
  }
  out.canonicalize();
  return out;
}

KElem KElem::inverse() const {
  // Inverse sends V_pi(i) back to V_i through m_i^-1.
  KElem out;
  out.f_ = f_;
  for (int i = 0; i < 3; ++i) {
    const int j = pi_[i];
    out.pi_[j] = static_cast<std::uint8_t>(i);
    const Mat2 inv = block(i).inverse();
    for (int k = 0; k < 4; ++k) out.m_[4 * j + k] = static_cast<Slot>(inv.entries()[k]);
  }
  out.canonicalize();
  return out;
}

KElem KElem::pow(std::int64_t e) const {
  KElem base = e < 0 ? inverse() : *this;
  auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  KElem acc = identity(f_);
  while (k > 0) {
    if (k & 1U) acc = acc * base;
    base = base * base;
    k >>= 1U;
  }
  return acc;
}

std::string KElem::to_string() const {
  std::ostringstream os;
  os << '[' << block(0).to_string() << ',' << block(1).to_string() << ',' << block(2).to_string() << "]("
     << int(pi_[0]) << int(pi_[1]) << int(pi_[2]) << ')';
  return os.str();
}

std::size_t KElem::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto v : m_) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  h ^= (std::uint64_t{pi_[0]} << 8) | (std::uint64_t{pi_[1]} << 4) | pi_[2];
  h *= 0x100000001b3ULL;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

}  // namespace solw
