#include "solweights/mat2.hpp"

#include <sstream>

#include "solweights/errors.hpp"

namespace solw {

Mat2 Mat2::operator*(const Mat2& o) const {
  const Field& f = *f_;
  const auto& a = e_;
  const auto& b = o.e_;
  return {f_, f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
          f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
}

Field::Elem Mat2::det() const {
  const Field& f = *f_;
  return f.sub(f.mul(e_[0], e_[3]), f.mul(e_[1], e_[2]));
}

Field::Elem Mat2::trace() const { return f_->add(e_[0], e_[3]); }

Mat2 Mat2::inverse() const {
  const Field& f = *f_;
  const Elem d = det();
  if (d == 0) throw Error("singular matrix");
  const Elem di = f.inv(d);
  return {f_, f.mul(e_[3], di), f.mul(f.neg(e_[1]), di), f.mul(f.neg(e_[2]), di), f.mul(e_[0], di)};
}

Mat2 Mat2::negated() const {
  const Field& f = *f_;
  return {f_, f.neg(e_[0]), f.neg(e_[1]), f.neg(e_[2]), f.neg(e_[3])};
}

Mat2 Mat2::pow(std::int64_t e) const {
  Mat2 base = e < 0 ? inverse() : *this;
  auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Mat2 acc = identity(f_);
  while (k > 0) {
    if (k & 1U) acc = acc * base;
    base = base * base;
    k >>= 1U;
  }
  return acc;
}

bool Mat2::entries_below(std::uint64_t subfield_size) const noexcept {
  for (const auto v : e_)
    if (v >= subfield_size) return false;
  return true;
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << "[[" << e_[0] << ',' << e_[1] << "],[" << e_[2] << ',' << e_[3] << "]]";
  return os.str();
}

std::size_t Mat2::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto v : e_) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace solw
