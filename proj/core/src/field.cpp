#include "solweights/field.hpp"

#include <map>
#include <sstream>

#include "solweights/errors.hpp"

namespace solw {
namespace {

constexpr std::uint64_t kFullTableLimit = 1024;
constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::shared_ptr<const Field> Field::prime(unsigned p) {
  if (p < 2 || p > 251) throw Error("unsupported prime field characteristic");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error("characteristic is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->size_ = p;
  f->build_tables();
  return f;
}

std::shared_ptr<const Field> Field::quadratic_extension(std::shared_ptr<const Field> base, Elem omega) {
  if (!base) throw Error("null base field");
  if (omega == 0 || omega >= base->size()) throw Error("defining element outside base field");
  if (base->is_square(omega)) throw Error("z^2 - omega is reducible: omega is a square in the base field");
  if (base->size() > (std::uint64_t{1} << 31)) throw Error("field too large for 64-bit codes");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->p_;
  f->level_ = base->level_ + 1;
  f->size_ = base->size_ * base->size_;
  f->omega_ = omega;
  f->base_ = std::move(base);
  f->build_tables();
  return f;
}

Field::Elem Field::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Elem>(((v % p) + p) % p);
}

Field::Elem Field::add(Elem a, Elem b) const noexcept {
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  if (!base_) return (a + b) % p_;
  const auto s = base_->size_;
  return base_->add(a % s, b % s) + base_->add(a / s, b / s) * s;
}

Field::Elem Field::neg(Elem a) const noexcept {
  if (!neg_table_.empty()) return neg_table_[a];
  if (!base_) return a == 0 ? 0 : p_ - a;
  const auto s = base_->size_;
  return base_->neg(a % s) + base_->neg(a / s) * s;
}

Field::Elem Field::mul_slow(Elem a, Elem b) const noexcept {
  if (!base_) return (a * b) % p_;
  const auto s = base_->size_;
  const Elem a0 = a % s, a1 = a / s, b0 = b % s, b1 = b / s;
  const Field& f = *base_;
  const Elem lo = f.add(f.mul(a0, b0), f.mul(f.mul(a1, b1), omega_));
  const Elem hi = f.add(f.mul(a0, b1), f.mul(a1, b0));
  return lo + hi * s;
}

Field::Elem Field::mul(Elem a, Elem b) const noexcept {
  if (!mul_table_.empty()) return mul_table_[a * size_ + b];
  if (!log_.empty()) {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[e % (size_ - 1)];
  }
  return mul_slow(a, b);
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem acc = 1;
  while (e > 0) {
    if (e & 1U) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return acc;
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in finite field");
  if (!log_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  if (!base_) return pow(a, p_ - 2);
  // (a0 + a1 z)^-1 = (a0 - a1 z) / (a0^2 - omega a1^2)
  const auto s = base_->size_;
  const Field& f = *base_;
  const Elem a0 = a % s, a1 = a / s;
  const Elem norm = f.sub(f.mul(a0, a0), f.mul(omega_, f.mul(a1, a1)));
  const Elem ninv = f.inv(norm);
  return f.mul(a0, ninv) + f.mul(f.neg(a1), ninv) * s;
}

bool Field::is_square(Elem a) const {
  if (a == 0) return true;
  if (p_ == 2) return true;
  return pow(a, (size_ - 1) / 2) == 1;
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw Error("zero has no multiplicative order");
  std::uint64_t order = size_ - 1;
  for (const auto q : prime_factors(size_ - 1)) {
    while (order % q == 0 && pow(a, order / q) == 1) order /= q;
  }
  return order;
}

std::vector<unsigned> Field::prime_coordinates(Elem a) const {
  std::vector<unsigned> out;
  for (std::uint64_t s = size_; s > 1; s /= p_) {
    out.push_back(static_cast<unsigned>(a % p_));
    a /= p_;
  }
  return out;
}

std::string Field::to_string(Elem a) const {
  if (!base_) return std::to_string(a);
  const auto s = base_->size_;
  std::ostringstream os;
  os << '(' << base_->to_string(a % s) << ")+(" << base_->to_string(a / s) << ")z" << level_ - 1;
  return os.str();
}

void Field::build_tables() {
  if (size_ <= kFullTableLimit) {
    // Filled into locals: add/neg/mul consult the member tables once set.
    std::vector<std::uint16_t> add_t(size_ * size_), mul_t(size_ * size_), neg_t(size_);
    for (Elem a = 0; a < size_; ++a) {
      neg_t[a] = static_cast<std::uint16_t>(neg(a));
      for (Elem b = 0; b < size_; ++b) {
        add_t[a * size_ + b] = static_cast<std::uint16_t>(add(a, b));
        mul_t[a * size_ + b] = static_cast<std::uint16_t>(mul_slow(a, b));
      }
    }
    add_table_ = std::move(add_t);
    mul_table_ = std::move(mul_t);
    neg_table_ = std::move(neg_t);
    // Full tables need no inverse table: inv goes through pow for prime
    // fields and through the norm otherwise.
    return;
  }
  if (size_ <= kLogTableLimit) {
    const auto factors = prime_factors(size_ - 1);
    Elem g = 0;
    for (Elem cand = 2; cand < size_; ++cand) {
      bool primitive = true;
      for (const auto q : factors) {
        Elem acc = 1, base = cand;
        for (std::uint64_t e = (size_ - 1) / q; e > 0; e >>= 1U) {
          if (e & 1U) acc = mul_slow(acc, base);
          base = mul_slow(base, base);
        }
        if (acc == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    if (g == 0) throw Error("no primitive element found");
    log_.assign(size_, 0);
    exp_.assign(size_ - 1, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i + 1 < size_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, g);
    }
  }
}

FieldTower field_tower(unsigned l) {
  if (l > 3) throw Error("field tower supports l <= 3");
  auto f = Field::prime(5);
  Field::Elem omega = 2;
  for (unsigned k = 0; k < l; ++k) {
    f = Field::quadratic_extension(f, omega);
    omega = f->adjoined();
  }
  FieldTower t;
  t.l = l;
  t.fq = f;
  t.omega = omega;
  t.fq2 = Field::quadratic_extension(f, omega);
  return t;
}

}  // namespace solw
