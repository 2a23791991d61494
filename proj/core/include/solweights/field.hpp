#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace solw {

/// A finite field GF(p^(2^level)) presented as a tower of quadratic
/// extensions F_{k+1} = F_k[z]/(z^2 - omega_k) over the prime field.
///
/// Elements are packed codes: at level k an element a0 + a1*z with a0, a1 in
/// F_{k-1} has code a0 + a1*|F_{k-1}|. Consequently an element of a lower
/// level keeps its code when viewed inside a higher level, and the code of the
/// adjoined z is |F_{k-1}|.
class Field {
 public:
  using Elem = std::uint64_t;

  static std::shared_ptr<const Field> prime(unsigned p);
  /// base[z]/(z^2 - omega). Throws Error when omega is a square in base, i.e.
  /// when z^2 - omega is reducible.
  static std::shared_ptr<const Field> quadratic_extension(std::shared_ptr<const Field> base, Elem omega);

  unsigned characteristic() const noexcept { return p_; }
  unsigned level() const noexcept { return level_; }
  std::uint64_t size() const noexcept { return size_; }
  const Field* base() const noexcept { return base_.get(); }
  /// z for level >= 1.
  Elem adjoined() const noexcept { return base_ ? base_->size_ : 0; }
  /// omega with z^2 = omega, for level >= 1.
  Elem defining_square() const noexcept { return omega_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t v) const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  bool is_square(Elem a) const;
  std::uint64_t multiplicative_order(Elem a) const;
  /// Coefficients over the prime field, least significant first.
  std::vector<unsigned> prime_coordinates(Elem a) const;
  std::string to_string(Elem a) const;

 private:
  Field() = default;
  void build_tables();
  Elem mul_slow(Elem a, Elem b) const noexcept;

  unsigned p_ = 0;
  unsigned level_ = 0;
  std::uint64_t size_ = 0;
  Elem omega_ = 0;
  std::shared_ptr<const Field> base_;

  // Full tables for small fields, log/exp tables for medium ones.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// The characteristic-5 tower used for the quaternion frames: F_q with
/// q = 5^(2^l), F_{q^2} = F_q[z]/(z^2 - omega), and omega of multiplicative
/// order 2^(l+2). omega is the residue 2 at l = 0 and the previous level's z
/// above that.
struct FieldTower {
  unsigned l = 0;
  std::shared_ptr<const Field> fq;
  std::shared_ptr<const Field> fq2;
  Field::Elem omega = 0;
};

/// l <= 3.
FieldTower field_tower(unsigned l);

}  // namespace solw
