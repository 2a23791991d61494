#include "solweights/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "solweights/errors.hpp"

namespace solw {

Perm::Perm(std::size_t degree) : images_(degree) {
  if (degree > 65535) throw Error("permutation degree exceeds 65535");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const auto v : images_) {
    if (v >= images_.size() || seen[v]) throw Error("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<std::vector<int>> c;
  for (const auto& cyc : cycles) c.emplace_back(cyc);
  return from_cycles(degree, c);
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int a = cyc[k];
      const int b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= degree || static_cast<std::size_t>(b) >= degree)
        throw Error("cycle point out of range");
      if (used[a]) throw Error("cycles are not disjoint");
      used[a] = true;
      img[a] = static_cast<Point>(b);
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::pow(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Perm acc(degree());
  while (k > 0) {
    if (k & 1U) acc = acc * base;
    base = base * base;
    k >>= 1U;
  }
  return acc;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (const int len : cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ',';
      os << j + 1;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

Perm Perm::conjugate_by(const Perm& p) const { return p.inverse() * *this * p; }

std::size_t Perm::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto v : images_) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace solw
