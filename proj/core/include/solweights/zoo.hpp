#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "solweights/field.hpp"
#include "solweights/group.hpp"
#include "solweights/mat2.hpp"
#include "solweights/perm.hpp"

namespace solw {

/// Frame of a C3 wr C3 Sylow subgroup: a basis of the base W0, a top element
/// sigma permuting that basis cyclically, and generators of a complement
/// acting on the Sylow subgroup from outside.
struct WreathC3Frame {
  std::vector<Perm> base_basis;
  Perm sigma;
  std::vector<Perm> outer;
};

/// A registry group realised as a permutation group, with the construction
/// data later stages need (factors, blocks, base generators).
struct NamedGroup {
  enum class Kind { kAtomic, kDirect, kWreath };

  std::string spec;
  Kind kind = Kind::kAtomic;
  FiniteGroup<Perm> group;
  std::size_t degree = 0;
  std::uint64_t closed_form_order = 0;
  /// Direct product: both factors. Wreath product: base, then top.
  std::vector<std::shared_ptr<const NamedGroup>> factors;
  /// Direct product: generators of each embedded factor. Wreath product:
  /// generators of the base group, then of the complement.
  std::vector<std::vector<Perm>> component_generators;
  /// Wreath product: points of each copy of the base.
  std::vector<std::vector<Perm::Point>> blocks;
  /// Preferred basis of an elementary abelian Sylow subgroup, when the
  /// construction has a natural one.
  std::vector<Perm> sylow_basis;
  std::optional<WreathC3Frame> wreath_c3;
};

/// Grammar: S<n>, A<n>, C<n>, D<2n>, GL(<n>,2), SL2(<q>), quat(<2^k>),
/// wr(<spec>,<spec>), x(<spec>,<spec>), dih(C3xC3), m108, m324, 1.
/// Throws UnknownSpec.
std::shared_ptr<const NamedGroup> named_group(const std::string& spec);

std::shared_ptr<const NamedGroup> wreath_product(std::shared_ptr<const NamedGroup> base,
                                                 std::shared_ptr<const NamedGroup> top);
std::shared_ptr<const NamedGroup> direct_product(std::shared_ptr<const NamedGroup> a,
                                                 std::shared_ptr<const NamedGroup> b);

/// Generators of SL_2(q) over F_q (upper and lower transvections over an
/// F_p-basis), the quaternion frame x, y generating R, and c in SL_2(q^2).
/// All matrices live over F_{q^2}; x and y have entries in F_q.
struct QuaternionFrame {
  FieldTower tower;
  std::vector<Mat2> sl2_generators;
  std::uint64_t sl2_order = 0;
  Mat2 x, y, c;
  FiniteGroup<Mat2> r;  // <x, y>, order 2^(l+3)
};

QuaternionFrame sl2_with_quaternion_frame(unsigned l);

/// Enumerates SL_2(q) from the frame's generators (guarded by the cap).
FiniteGroup<Mat2> enumerate_sl2(const QuaternionFrame& frame, std::uint64_t cap = enumeration_cap());

/// Right regular representation of an enumerated group.
template <GroupElement E>
FiniteGroup<Perm> regular_representation(const FiniteGroup<E>& g) {
  const auto& elems = g.elements();
  if (elems.size() > 0xffff) throw Error("regular representation too large");
  std::vector<Perm> gens;
  for (const auto& s : g.generators()) {
    std::vector<Perm::Point> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) img[i] = static_cast<Perm::Point>(g.index_of(elems[i] * s));
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup<Perm>::generate(Perm(elems.size()), std::move(gens));
}

}  // namespace solw
