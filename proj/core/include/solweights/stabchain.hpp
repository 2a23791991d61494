#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "solweights/perm.hpp"

namespace solw {

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Used for permutation groups whose order exceeds the
/// enumeration cap.
class StabChain {
 public:
  StabChain(std::size_t degree, const std::vector<Perm>& generators);

  std::uint64_t order() const;
  bool contains(const Perm& g) const;
  std::vector<Perm::Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;

 private:
  struct Level {
    Perm::Point point = 0;
    std::vector<Perm> gens;
    std::vector<Perm::Point> orbit;
    std::vector<Perm> transversal;  // indexed by point; degree 0 when outside the orbit
  };

  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void extend(std::size_t level, const Perm& g);
  void rebuild_orbit(Level& lv) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace solw
