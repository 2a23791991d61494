#include "solweights/stabchain.hpp"

#include "solweights/errors.hpp"

namespace solw {

StabChain::StabChain(std::size_t degree, const std::vector<Perm>& generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error("generator degree mismatch");
    if (!contains(g)) extend(0, g);
  }
}

void StabChain::rebuild_orbit(Level& lv) const {
  lv.orbit.assign(1, lv.point);
  lv.transversal.assign(degree_, Perm());
  lv.transversal[lv.point] = Perm(degree_);
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    const auto pt = lv.orbit[i];
    for (const auto& s : lv.gens) {
      const auto q = s[pt];
      if (lv.transversal[q].degree() == 0) {
        lv.transversal[q] = lv.transversal[pt] * s;
        lv.orbit.push_back(q);
      }
    }
  }
}

std::pair<Perm, std::size_t> StabChain::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto x = g[levels_[i].point];
    const Perm& u = levels_[i].transversal[x];
    if (u.degree() == 0) return {std::move(g), i};
    g = g * u.inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabChain::extend(std::size_t j, const Perm& g) {
  if (j == levels_.size()) {
    Level lv;
    std::size_t moved = 0;
    while (moved < degree_ && g[moved] == moved) ++moved;
    lv.point = static_cast<Perm::Point>(moved);
    levels_.push_back(std::move(lv));
  }
  levels_[j].gens.push_back(g);
  rebuild_orbit(levels_[j]);
  // Deeper levels only grow during the loop, so level j stays fixed.
  for (std::size_t oi = 0; oi < levels_[j].orbit.size(); ++oi) {
    for (std::size_t si = 0; si < levels_[j].gens.size(); ++si) {
      const Level& lv = levels_[j];
      const auto x = lv.orbit[oi];
      const Perm& s = lv.gens[si];
      Perm schreier = lv.transversal[x] * s * lv.transversal[s[x]].inverse();
      auto [residue, stop] = sift(std::move(schreier), j + 1);
      if (!residue.is_identity()) extend(j + 1, residue);
    }
  }
}

std::uint64_t StabChain::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_) n *= lv.orbit.size();
  return n;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = sift(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Perm::Point> StabChain::base() const {
  std::vector<Perm::Point> b;
  for (const auto& lv : levels_) b.push_back(lv.point);
  return b;
}

std::vector<std::size_t> StabChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

}  // namespace solw
