#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solweights/group.hpp"

namespace solw {

/// Elementary divisors of G/G', as sorted prime powers (trivial group: empty).
template <GroupElement E>
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup<E>& g) {
  const auto& d = g.derived();
  if (d.order() == g.order()) return {};
  const auto q = quotient_group(g, d);
  const auto& qe = q.group.elements();
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : detail::factorize(q.group.order())) {
    // n_k = log_p #{x : x^(p^k) = 1}; factors of exponent >= k number n_k - n_(k-1).
    std::vector<unsigned> n{0};
    std::uint64_t pk = 1;
    while (n.back() < e) {
      pk *= p;
      std::uint64_t count = 0;
      for (const auto& x : qe)
        if (x.pow(static_cast<std::int64_t>(pk)).is_identity()) ++count;
      unsigned lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      n.push_back(lg);
    }
    const std::size_t kmax = n.size() - 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
      const unsigned at_least_k = n[k] - n[k - 1];
      const unsigned at_least_next = k < kmax ? n[k + 1] - n[k] : 0;
      std::uint64_t ppow = 1;
      for (std::size_t i = 0; i < k; ++i) ppow *= p;
      for (unsigned i = 0; i < at_least_k - at_least_next; ++i) out.push_back(ppow);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <GroupElement E>
std::uint64_t exponent(const FiniteGroup<E>& g) {
  std::uint64_t e = 1;
  for (const auto& c : g.classes()) e = std::lcm(e, c.element_order);
  return e;
}

struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> class_sizes;  // sorted
  std::vector<std::pair<std::uint64_t, std::uint64_t>> class_types;  // (element order, class size), sorted
  std::uint64_t center_order = 0;
  std::vector<std::uint64_t> derived_series;
  std::vector<std::uint64_t> abelianization;
  std::uint64_t exponent = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sylow_orders;  // (p, p-part)
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_statistics;  // (element order, count)

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

template <GroupElement E>
Fingerprint structure_fingerprint(const FiniteGroup<E>& g) {
  Fingerprint f;
  f.order = g.order();
  std::map<std::uint64_t, std::uint64_t> stats;
  for (const auto& c : g.classes()) {
    f.class_sizes.push_back(c.size);
    f.class_types.emplace_back(c.element_order, c.size);
    stats[c.element_order] += c.size;
    if (c.size == 1) ++f.center_order;
    f.exponent = std::lcm(std::max<std::uint64_t>(f.exponent, 1), c.element_order);
  }
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  std::sort(f.class_types.begin(), f.class_types.end());
  f.order_statistics.assign(stats.begin(), stats.end());
  f.derived_series = derived_series_orders(g);
  f.abelianization = abelian_invariants(g);
  for (const auto& [p, e] : detail::factorize(g.order())) f.sylow_orders.emplace_back(p, p_part(g.order(), p));
  return f;
}

/// A generating set of minimal size when one of size <= 2 exists (searched
/// with the first generator a class representative), else a greedy one.
template <GroupElement E>
std::vector<E> small_generating_set(const FiniteGroup<E>& g) {
  if (g.order() == 1) return {};
  const auto& elems = g.elements();
  const auto& cls = g.classes();
  for (const auto& c : cls)
    if (c.element_order == g.order()) return {c.representative};
  for (const auto& c : cls) {
    if (c.rep_index == 0) continue;
    for (const auto& b : elems) {
      if (b == g.identity()) continue;
      if (closure_table(g.identity(), {c.representative, b}, g.order()).size() == g.order())
        return {c.representative, b};
    }
  }
  return FiniteGroup<E>::from_elements(g.identity(), elems).generators();
}

/// Exhaustive search for an isomorphism G -> H sending a small generating set
/// of G to elements of matching order and class size, with the homomorphism
/// checked on every Cayley-graph edge. Returns the images of the generators.
template <GroupElement A, GroupElement B>
std::optional<std::vector<B>> find_isomorphism(const FiniteGroup<A>& g, const FiniteGroup<B>& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (!(structure_fingerprint(g) == structure_fingerprint(h))) return std::nullopt;
  const auto gens = small_generating_set(g);
  if (gens.empty()) return std::vector<B>{};

  const auto& gcd = g.class_data();
  const auto& hcd = h.class_data();
  std::vector<std::vector<std::uint32_t>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& gc = gcd.classes[gcd.class_of[g.index_of(gens[k])]];
    for (std::uint32_t j = 0; j < h.order(); ++j) {
      const auto& hc = hcd.classes[hcd.class_of[j]];
      if (hc.element_order == gc.element_order && hc.size == gc.size) candidates[k].push_back(j);
    }
  }

  constexpr auto kNone = ElementTable<A>::kNone;
  // Check that x_i -> y_i extends to an injective homomorphism on <x_1..x_k>.
  auto consistent = [&](std::size_t k, const std::vector<B>& imgs) {
    std::vector<std::uint32_t> phi(g.order(), kNone);
    std::vector<char> used(h.order(), 0);
    std::vector<std::uint32_t> queue{0};
    phi[0] = h.index_of(h.identity());
    used[phi[0]] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto xi = queue[q];
      for (std::size_t s = 0; s < k; ++s) {
        const auto yi = g.index_of(g.element(xi) * gens[s]);
        const auto img = h.index_of(h.element(phi[xi]) * imgs[s]);
        if (phi[yi] == kNone) {
          if (used[img]) return false;
          phi[yi] = img;
          used[img] = 1;
          queue.push_back(yi);
        } else if (phi[yi] != img) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<B> imgs(gens.size());
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == gens.size()) return true;
    for (const auto j : candidates[k]) {
      imgs[k] = h.element(j);
      if (consistent(k + 1, imgs) && search(k + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return imgs;
}

inline constexpr std::uint64_t kExhaustiveIsoLimit = 400;

enum class IsoVerdict { kDifferent, kFingerprint, kIsomorphic };

inline const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::kDifferent: return "different";
    case IsoVerdict::kFingerprint: return "fingerprint-verified";
    case IsoVerdict::kIsomorphic: return "isomorphic";
  }
  return "?";
}

/// Two-tier comparison: fingerprints always; exhaustive search up to order 400.
template <GroupElement A, GroupElement B>
IsoVerdict compare_groups(const FiniteGroup<A>& g, const FiniteGroup<B>& h) {
  if (!(structure_fingerprint(g) == structure_fingerprint(h))) return IsoVerdict::kDifferent;
  if (g.order() > kExhaustiveIsoLimit) return IsoVerdict::kFingerprint;
  return find_isomorphism(g, h) ? IsoVerdict::kIsomorphic : IsoVerdict::kDifferent;
}

template <GroupElement E>
struct OuterAutomorphisms {
  FiniteGroup<Perm> aut;  // Aut_N(P) acting on a faithful set of elements of P
  FiniteGroup<Perm> inn;
  FiniteGroup<Perm> out;  // aut / inn
};

/// Out_N(P): the image of N (together with P) in Aut(P), modulo Inn(P).
/// Automorphisms act on the union of the orbits of P's generators, which is
/// faithful because those orbits contain a generating set.
template <GroupElement E>
OuterAutomorphisms<E> induced_outer_automorphisms(const std::vector<E>& n_gens, const FiniteGroup<E>& p) {
  for (const auto& x : n_gens)
    if (!normalizes(x, p)) throw DoesNotNormalize("generator does not normalize P");
  std::vector<E> acting = n_gens;
  acting.insert(acting.end(), p.generators().begin(), p.generators().end());

  ElementTable<E> omega;
  for (const auto& x : p.generators()) omega.insert(x);
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (const auto& a : acting) omega.insert(conj(omega[i], a));
  const std::size_t m = omega.size();
  if (m > 0xffff) throw Error("automorphism action too large");

  auto as_perm = [&](const E& a) {
    std::vector<Perm::Point> img(m);
    for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<Perm::Point>(omega.find(conj(omega[i], a)));
    return Perm(std::move(img));
  };
  std::vector<Perm> aut_gens, inn_gens;
  for (const auto& a : acting) aut_gens.push_back(as_perm(a));
  for (const auto& a : p.generators()) inn_gens.push_back(as_perm(a));
  OuterAutomorphisms<E> r;
  r.aut = FiniteGroup<Perm>::generate(Perm(m), aut_gens);
  r.inn = FiniteGroup<Perm>::generate(Perm(m), inn_gens);
  r.out = quotient_group(r.aut, r.inn).group;
  return r;
}

/// Out_N(P) as N / (P C_N(P)) for an enumerated N containing P.
template <GroupElement E>
FiniteGroup<Perm> outer_automorphisms_via_quotient(const FiniteGroup<E>& n, const FiniteGroup<E>& p) {
  if (!is_subgroup_of(p, n)) throw SubgroupNotContained("P is not contained in N");
  if (!is_normal(n, p)) throw DoesNotNormalize("N does not normalize P");
  const auto c = centralizer_of_subgroup(n, p);
  std::vector<E> gens = p.generators();
  gens.insert(gens.end(), c.generators().begin(), c.generators().end());
  const auto pc = subgroup(n, std::move(gens));
  return quotient_group(n, pc).group;
}

}  // namespace solw
