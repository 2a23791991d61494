#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "solweights/config.hpp"
#include "solweights/errors.hpp"
#include "solweights/perm.hpp"
#include "solweights/stabchain.hpp"

namespace solw {

template <class E>
concept GroupElement = std::regular<E> && std::totally_ordered<E> && requires(const E& a, const E& b) {
  { a * b } -> std::convertible_to<E>;
  { a.inverse() } -> std::convertible_to<E>;
  { std::hash<E>{}(a) } -> std::convertible_to<std::size_t>;
};

/// x^g = g^-1 x g.
template <GroupElement E>
E conj(const E& x, const E& g) {
  return g.inverse() * x * g;
}

template <GroupElement E>
E commutator(const E& a, const E& b) {
  return a.inverse() * b.inverse() * a * b;
}

template <GroupElement E>
std::uint64_t element_order(const E& x, const E& identity) {
  std::uint64_t n = 1;
  for (E y = x; !(y == identity); y = y * x) ++n;
  return n;
}

template <GroupElement E>
E power(const E& x, std::uint64_t e, const E& identity) {
  E acc = identity;
  E base = x;
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace detail

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Insertion-ordered hash set of elements; indices are stable.
template <GroupElement E>
class ElementTable {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffU;

  ElementTable() : slots_(16, kNone) {}

  std::size_t size() const noexcept { return elems_.size(); }
  const E& operator[](std::size_t i) const noexcept { return elems_[i]; }
  const std::vector<E>& elements() const noexcept { return elems_; }

  std::uint32_t find(const E& e) const noexcept {
    const std::uint64_t h = hash_of(e);
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = h & mask;; s = (s + 1) & mask) {
      const std::uint32_t idx = slots_[s];
      if (idx == kNone) return kNone;
      if (hashes_[idx] == h && elems_[idx] == e) return idx;
    }
  }

  std::pair<std::uint32_t, bool> insert(const E& e) {
    const std::uint64_t h = hash_of(e);
    std::size_t mask = slots_.size() - 1;
    std::size_t s = h & mask;
    for (;; s = (s + 1) & mask) {
      const std::uint32_t idx = slots_[s];
      if (idx == kNone) break;
      if (hashes_[idx] == h && elems_[idx] == e) return {idx, false};
    }
    const auto idx = static_cast<std::uint32_t>(elems_.size());
    elems_.push_back(e);
    hashes_.push_back(h);
    if (2 * elems_.size() >= slots_.size()) {
      rehash(slots_.size() * 2);
    } else {
      slots_[s] = idx;
    }
    return {idx, true};
  }

  void reserve(std::size_t n) {
    elems_.reserve(n);
    hashes_.reserve(n);
    std::size_t want = 16;
    while (want < 2 * n + 2) want *= 2;
    if (want > slots_.size()) rehash(want);
  }

 private:
  static std::uint64_t hash_of(const E& e) noexcept { return detail::mix64(std::hash<E>{}(e)); }

  void rehash(std::size_t n) {
    slots_.assign(n, kNone);
    const std::size_t mask = n - 1;
    for (std::uint32_t i = 0; i < elems_.size(); ++i) {
      std::size_t s = hashes_[i] & mask;
      while (slots_[s] != kNone) s = (s + 1) & mask;
      slots_[s] = i;
    }
  }

  std::vector<E> elems_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;
};

/// Breadth-first closure from the identity under right multiplication by the
/// generators. Throws CapExceeded once the table would exceed cap.
template <GroupElement E>
ElementTable<E> closure_table(const E& identity, const std::vector<E>& gens, std::uint64_t cap) {
  ElementTable<E> t;
  t.insert(identity);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (const auto& g : gens) {
      if (t.insert(t[i] * g).second && t.size() > cap) throw CapExceeded("closure grew past the enumeration cap", cap);
    }
  }
  return t;
}

template <GroupElement E>
struct ConjClass {
  E representative;
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t element_order = 0;
  std::uint32_t rep_index = 0;
};

template <GroupElement E>
struct ClassData {
  std::vector<ConjClass<E>> classes;
  std::vector<std::uint32_t> class_of;  // per element index
};

template <GroupElement E>
class FiniteGroup;

template <GroupElement E>
ClassData<E> compute_classes(const FiniteGroup<E>& g);
template <GroupElement E>
FiniteGroup<E> derived_subgroup(const FiniteGroup<E>& g);
template <GroupElement E>
FiniteGroup<E> center(const FiniteGroup<E>& g);
template <GroupElement E>
FiniteGroup<E> sylow_subgroup(const FiniteGroup<E>& g, std::uint64_t p);

/// Finite group given by generators. Either fully enumerated (breadth-first
/// order from the identity, which is deterministic given the generator order)
/// or, for permutation groups above the cap, held as a stabilizer chain.
/// Immutable; copies share state and caches.
template <GroupElement E>
class FiniteGroup {
 public:
  FiniteGroup() = default;

  static FiniteGroup generate(const E& identity, std::vector<E> gens, std::uint64_t cap = enumeration_cap()) {
    auto impl = std::make_shared<Impl>();
    impl->identity = identity;
    impl->table = closure_table(identity, gens, cap);
    impl->gens = std::move(gens);
    impl->order = impl->table.size();
    return FiniteGroup(std::move(impl));
  }

  /// The given elements must form a subgroup containing identity. Their order
  /// is kept as the enumeration order; generators are chosen greedily.
  static FiniteGroup from_elements(const E& identity, std::vector<E> elements) {
    auto impl = std::make_shared<Impl>();
    impl->identity = identity;
    ElementTable<E> span;
    span.insert(identity);
    for (const auto& e : elements) {
      if (span.find(e) != ElementTable<E>::kNone) continue;
      impl->gens.push_back(e);
      for (std::size_t i = 0; i < span.size(); ++i) {
        for (const auto& g : impl->gens) span.insert(span[i] * g);
      }
    }
    if (span.size() != elements.size()) throw Error("element list is not a subgroup");
    impl->table.reserve(elements.size());
    for (const auto& e : elements) impl->table.insert(e);
    if (impl->table.size() != elements.size()) throw Error("duplicate elements in subgroup list");
    impl->order = elements.size();
    return FiniteGroup(std::move(impl));
  }

  /// Permutation group kept only as a stabilizer chain.
  static FiniteGroup from_chain(const E& identity, std::vector<E> gens, std::shared_ptr<const StabChain> chain)
    requires std::same_as<E, Perm>
  {
    auto impl = std::make_shared<Impl>();
    impl->identity = identity;
    impl->gens = std::move(gens);
    impl->order = chain->order();
    impl->chain = std::move(chain);
    return FiniteGroup(std::move(impl));
  }

  bool valid() const noexcept { return static_cast<bool>(impl_); }
  const E& identity() const { return impl_->identity; }
  const std::vector<E>& generators() const { return impl_->gens; }
  std::uint64_t order() const { return impl_->order; }
  bool enumerated() const { return !impl_->chain; }
  const StabChain* chain() const { return impl_->chain.get(); }

  const std::vector<E>& elements() const {
    require_enumerated();
    return impl_->table.elements();
  }
  const E& element(std::size_t i) const { return impl_->table[i]; }
  const ElementTable<E>& table() const {
    require_enumerated();
    return impl_->table;
  }
  std::uint32_t index_of(const E& e) const {
    require_enumerated();
    return impl_->table.find(e);
  }
  bool contains(const E& e) const {
    if constexpr (std::same_as<E, Perm>) {
      if (impl_->chain) return impl_->chain->contains(e);
    }
    return impl_->table.find(e) != ElementTable<E>::kNone;
  }

  const ClassData<E>& class_data() const {
    std::call_once(impl_->classes_once, [this] {
      impl_->classes = std::make_unique<ClassData<E>>(compute_classes(*this));
    });
    return *impl_->classes;
  }
  const std::vector<ConjClass<E>>& classes() const { return class_data().classes; }

  const FiniteGroup& center() const {
    std::call_once(impl_->center_once, [this] { impl_->center = std::make_unique<FiniteGroup>(solw::center(*this)); });
    return *impl_->center;
  }
  const FiniteGroup& derived() const {
    std::call_once(impl_->derived_once,
                   [this] { impl_->derived = std::make_unique<FiniteGroup>(derived_subgroup(*this)); });
    return *impl_->derived;
  }
  const FiniteGroup& sylow(std::uint64_t p) const {
    std::lock_guard lock(impl_->sylow_mutex);
    auto& slot = impl_->sylow[p];
    if (!slot) slot = std::make_unique<FiniteGroup>(sylow_subgroup(*this, p));
    return *slot;
  }

  bool same_as(const FiniteGroup& o) const noexcept { return impl_ == o.impl_; }

 private:
  struct Impl {
    E identity;
    std::vector<E> gens;
    std::uint64_t order = 0;
    ElementTable<E> table;
    std::shared_ptr<const StabChain> chain;

    std::once_flag classes_once;
    std::unique_ptr<ClassData<E>> classes;
    std::once_flag center_once;
    std::unique_ptr<FiniteGroup> center;
    std::once_flag derived_once;
    std::unique_ptr<FiniteGroup> derived;
    std::mutex sylow_mutex;
    std::map<std::uint64_t, std::unique_ptr<FiniteGroup>> sylow;
  };

  explicit FiniteGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  void require_enumerated() const {
    if (impl_->chain) throw CapExceeded("group of order " + std::to_string(impl_->order) + " is not enumerated",
                                        enumeration_cap());
  }

  std::shared_ptr<Impl> impl_;
};

template <GroupElement E>
FiniteGroup<E> closure_enumerate(const E& identity, std::vector<E> gens, std::uint64_t cap = enumeration_cap()) {
  return FiniteGroup<E>::generate(identity, std::move(gens), cap);
}

/// Permutation group: enumerated when its order is within cap, otherwise kept
/// as a stabilizer chain.
inline FiniteGroup<Perm> make_perm_group(std::size_t degree, std::vector<Perm> gens,
                                         std::uint64_t cap = enumeration_cap()) {
  auto chain = std::make_shared<const StabChain>(degree, gens);
  if (chain->order() <= cap) return FiniteGroup<Perm>::generate(Perm(degree), std::move(gens), cap);
  return FiniteGroup<Perm>::from_chain(Perm(degree), std::move(gens), std::move(chain));
}

/// Subgroup generated by gens inside the same ambient action as g.
template <GroupElement E>
FiniteGroup<E> subgroup(const FiniteGroup<E>& g, std::vector<E> gens) {
  return FiniteGroup<E>::generate(g.identity(), std::move(gens));
}

template <GroupElement E>
bool is_subgroup_of(const FiniteGroup<E>& h, const FiniteGroup<E>& g) {
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const E& x) { return g.contains(x); });
}

template <GroupElement E>
bool normalizes(const E& g, const FiniteGroup<E>& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const E& x) { return h.contains(conj(x, g)); });
}

template <GroupElement E>
bool is_normal(const FiniteGroup<E>& g, const FiniteGroup<E>& n) {
  return std::all_of(g.generators().begin(), g.generators().end(), [&](const E& x) { return normalizes(x, n); });
}

/// Classes as orbits of a first-unclassified representative under conjugation
/// by the generators; representatives come in enumeration order.
template <GroupElement E>
ClassData<E> compute_classes(const FiniteGroup<E>& g) {
  const auto& elems = g.elements();
  const auto& table = g.table();
  constexpr auto kNone = ElementTable<E>::kNone;
  std::vector<E> inv;
  for (const auto& x : g.generators()) inv.push_back(x.inverse());
  ClassData<E> out;
  out.class_of.assign(elems.size(), kNone);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    if (out.class_of[i] != kNone) continue;
    const auto cid = static_cast<std::uint32_t>(out.classes.size());
    out.class_of[i] = cid;
    queue.assign(1, i);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const E& x = elems[queue[q]];
      for (std::size_t k = 0; k < inv.size(); ++k) {
        const auto j = table.find(inv[k] * x * g.generators()[k]);
        if (out.class_of[j] == kNone) {
          out.class_of[j] = cid;
          queue.push_back(j);
        }
      }
    }
    ConjClass<E> c;
    c.representative = elems[i];
    c.rep_index = i;
    c.size = queue.size();
    c.centralizer_order = g.order() / c.size;
    c.element_order = element_order(elems[i], g.identity());
    out.classes.push_back(std::move(c));
  }
  return out;
}

template <GroupElement E>
const std::vector<ConjClass<E>>& conjugacy_classes(const FiniteGroup<E>& g) {
  return g.classes();
}

/// Element orders indexed by enumeration position.
template <GroupElement E>
std::vector<std::uint64_t> element_orders(const FiniteGroup<E>& g) {
  const auto& cd = g.class_data();
  std::vector<std::uint64_t> out(cd.class_of.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cd.classes[cd.class_of[i]].element_order;
  return out;
}

/// Subgroup of the elements of g satisfying pred, in enumeration order.
template <GroupElement E, class Pred>
FiniteGroup<E> filter_subgroup(const FiniteGroup<E>& g, Pred&& pred) {
  const auto& elems = g.elements();
  std::vector<char> keep(elems.size(), 0);
  parallel_for(elems.size(), [&](std::size_t i) { keep[i] = pred(elems[i]) ? 1 : 0; });
  std::vector<E> chosen;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (keep[i]) chosen.push_back(elems[i]);
  return FiniteGroup<E>::from_elements(g.identity(), std::move(chosen));
}

template <GroupElement E>
FiniteGroup<E> centralizer_of(const FiniteGroup<E>& g, const E& x) {
  if (!g.contains(x)) throw ElementNotInGroup("centralizer: element not in group");
  return filter_subgroup(g, [&](const E& h) { return h * x == x * h; });
}

template <GroupElement E>
FiniteGroup<E> centralizer_of_subgroup(const FiniteGroup<E>& g, const FiniteGroup<E>& h) {
  const auto& gens = h.generators();
  return filter_subgroup(g, [&](const E& y) {
    return std::all_of(gens.begin(), gens.end(), [&](const E& x) { return y * x == x * y; });
  });
}

template <GroupElement E>
FiniteGroup<E> center(const FiniteGroup<E>& g) {
  std::vector<E> elems;
  for (const auto& c : g.classes())
    if (c.size == 1) elems.push_back(c.representative);
  return FiniteGroup<E>::from_elements(g.identity(), std::move(elems));
}

/// N_G(H) by scanning G.
template <GroupElement E>
FiniteGroup<E> normalizer_in(const FiniteGroup<E>& g, const FiniteGroup<E>& h) {
  return filter_subgroup(g, [&](const E& y) { return normalizes(y, h); });
}

/// Smallest normal subgroup of g containing the given elements.
template <GroupElement E>
FiniteGroup<E> normal_closure(const FiniteGroup<E>& g, std::vector<E> elems) {
  auto n = FiniteGroup<E>::generate(g.identity(), elems);
  for (bool grown = true; grown;) {
    grown = false;
    for (const auto& x : n.generators()) {
      for (const auto& y : g.generators()) {
        E c = conj(x, y);
        if (!n.contains(c)) {
          elems.push_back(std::move(c));
          n = FiniteGroup<E>::generate(g.identity(), elems);
          grown = true;
          break;
        }
      }
      if (grown) break;
    }
  }
  return n;
}

template <GroupElement E>
FiniteGroup<E> derived_subgroup(const FiniteGroup<E>& g) {
  std::vector<E> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      E c = commutator(gens[i], gens[j]);
      if (!(c == g.identity())) comms.push_back(std::move(c));
    }
  return normal_closure(g, std::move(comms));
}

/// Orders of G = G^(0) > G' > G'' > ... down to the first repeat.
template <GroupElement E>
std::vector<std::uint64_t> derived_series_orders(const FiniteGroup<E>& g) {
  std::vector<std::uint64_t> out{g.order()};
  FiniteGroup<E> cur = g;
  while (true) {
    FiniteGroup<E> next = derived_subgroup(cur);
    if (next.order() == cur.order()) break;
    out.push_back(next.order());
    cur = next;
  }
  return out;
}

/// Sylow p-subgroup via the normalizer-extension loop: extend P by the first
/// element g (enumeration order) with g outside P, g^p in P, g normalizing P.
template <GroupElement E>
FiniteGroup<E> sylow_subgroup(const FiniteGroup<E>& g, std::uint64_t p) {
  const std::uint64_t target = p_part(g.order(), p);
  std::vector<E> gens;
  auto pg = FiniteGroup<E>::generate(g.identity(), gens);
  const auto& elems = g.elements();
  while (pg.order() < target) {
    bool extended = false;
    for (const auto& x : elems) {
      if (pg.contains(x) || !pg.contains(power(x, p, g.identity())) || !normalizes(x, pg)) continue;
      gens.push_back(x);
      pg = FiniteGroup<E>::generate(g.identity(), gens);
      extended = true;
      break;
    }
    if (!extended) throw Error("sylow extension stalled");
  }
  return pg;
}

/// Largest normal p-subgroup O_p(G): core of a Sylow p-subgroup.
template <GroupElement E>
FiniteGroup<E> pcore(const FiniteGroup<E>& g, std::uint64_t p) {
  const auto& s = g.sylow(p);
  std::vector<char> alive(s.order(), 1);
  const auto& elems = s.elements();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!alive[i]) continue;
      for (const auto& y : g.generators()) {
        const auto j = s.index_of(conj(elems[i], y));
        if (j == ElementTable<E>::kNone || !alive[j]) {
          alive[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<E> core;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (alive[i]) core.push_back(elems[i]);
  return FiniteGroup<E>::from_elements(g.identity(), std::move(core));
}

template <GroupElement E>
struct DoubleCoset {
  E representative;
  std::uint32_t rep_index = 0;
  std::uint64_t size = 0;
};

template <GroupElement E>
struct DoubleCosetPartition {
  std::vector<DoubleCoset<E>> cosets;
  std::vector<std::uint32_t> coset_of;  // per element index of G
};

/// S-S double cosets of G. Representatives are first in enumeration order.
template <GroupElement E>
DoubleCosetPartition<E> double_coset_partition(const FiniteGroup<E>& g, const FiniteGroup<E>& s) {
  if (!is_subgroup_of(s, g)) throw SubgroupNotContained("double cosets: S is not a subgroup of G");
  const auto& elems = g.elements();
  const auto& table = g.table();
  constexpr auto kNone = ElementTable<E>::kNone;
  DoubleCosetPartition<E> out;
  out.coset_of.assign(elems.size(), kNone);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    if (out.coset_of[i] != kNone) continue;
    const auto cid = static_cast<std::uint32_t>(out.cosets.size());
    out.coset_of[i] = cid;
    queue.assign(1, i);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const E& x = elems[queue[q]];
      for (const auto& t : s.generators()) {
        for (const E& y : {t * x, x * t}) {
          const auto j = table.find(y);
          if (out.coset_of[j] == kNone) {
            out.coset_of[j] = cid;
            queue.push_back(j);
          }
        }
      }
    }
    out.cosets.push_back({elems[i], i, queue.size()});
  }
  return out;
}

template <GroupElement E>
struct Quotient {
  FiniteGroup<Perm> group;  // right regular action on the cosets
  std::vector<E> coset_reps;
  std::vector<std::uint32_t> coset_of;  // per element index of G
};

/// G/N as a permutation group on the right cosets Nx; coset representatives are
/// first in enumeration order.
template <GroupElement E>
Quotient<E> quotient_group(const FiniteGroup<E>& g, const FiniteGroup<E>& n) {
  if (!is_subgroup_of(n, g) || !is_normal(g, n)) throw NotNormal("quotient: subgroup is not normal");
  const auto& elems = g.elements();
  const auto& table = g.table();
  constexpr auto kNone = ElementTable<E>::kNone;
  Quotient<E> out;
  out.coset_of.assign(elems.size(), kNone);
  const auto& nel = n.elements();
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    if (out.coset_of[i] != kNone) continue;
    const auto cid = static_cast<std::uint32_t>(out.coset_reps.size());
    for (const auto& y : nel) out.coset_of[table.find(y * elems[i])] = cid;
    out.coset_reps.push_back(elems[i]);
  }
  const std::size_t m = out.coset_reps.size();
  if (m > 0xffff) throw Error("quotient too large for a permutation action");
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) {
    std::vector<Perm::Point> img(m);
    for (std::size_t c = 0; c < m; ++c)
      img[c] = static_cast<Perm::Point>(out.coset_of[table.find(out.coset_reps[c] * x)]);
    gens.emplace_back(std::move(img));
  }
  out.group = FiniteGroup<Perm>::generate(Perm(m), std::move(gens));
  return out;
}

/// Image of an element of G in the permutation action of G/N on cosets.
template <GroupElement E>
Perm quotient_image(const FiniteGroup<E>& g, const Quotient<E>& q, const E& x) {
  const auto& table = g.table();
  std::vector<Perm::Point> img(q.coset_reps.size());
  for (std::size_t c = 0; c < img.size(); ++c)
    img[c] = static_cast<Perm::Point>(q.coset_of[table.find(q.coset_reps[c] * x)]);
  return Perm(std::move(img));
}

struct SubgroupOrbit {
  std::uint64_t orbit_size = 0;
  std::optional<std::uint64_t> normalizer_order;
};

/// Orbit of the subgroup P under conjugation by the ambient generators,
/// without enumerating the ambient group. Each conjugate P^t is keyed by an
/// order-independent 128-bit digest of D(P)^t, where D(P) is the set of
/// elements of one fixed order (chosen so that D(P) generates P). A digest
/// match P^t ~ P^u is confirmed exactly by testing t u^-1 against N(P) on
/// the generators of P.
template <GroupElement E>
SubgroupOrbit subgroup_conjugation_orbit(const std::vector<E>& ambient_gens, const FiniteGroup<E>& p,
                                         std::optional<std::uint64_t> ambient_order = std::nullopt,
                                         std::uint64_t cap = enumeration_cap()) {
  using Digest = std::pair<std::uint64_t, std::uint64_t>;
  struct DigestHash {
    std::size_t operator()(const Digest& d) const noexcept { return d.first ^ (d.second * 31); }
  };
  const auto& pel = p.elements();
  std::map<std::uint64_t, std::vector<E>> by_order;
  for (const auto& x : pel) by_order[element_order(x, p.identity())].push_back(x);
  std::vector<E> keyset = pel;
  for (const auto& [ord, xs] : by_order) {
    if (xs.size() >= keyset.size()) continue;
    if (closure_table(p.identity(), xs, p.order()).size() == p.order()) keyset = xs;
  }
  auto digest = [&](const E& t) {
    const E ti = t.inverse();
    Digest d{0, 0};
    for (const auto& x : keyset) {
      const std::uint64_t h = std::hash<E>{}(ti * x * t);
      d.first += detail::mix64(h);
      d.second += detail::mix64(h ^ 0x5851f42d4c957f2dULL);
    }
    return d;
  };
  auto same_conjugate = [&](const E& a, const E& b) {
    const E r = a * b.inverse();
    const E ri = r.inverse();
    return std::all_of(p.generators().begin(), p.generators().end(),
                       [&](const E& x) { return p.contains(ri * x * r); });
  };

  std::vector<E> transversal{p.identity()};
  std::unordered_map<Digest, std::vector<std::uint32_t>, DigestHash> seen;
  seen[digest(p.identity())].push_back(0);
  for (std::size_t i = 0; i < transversal.size(); ++i) {
    const E t = transversal[i];
    for (const auto& g : ambient_gens) {
      const E tg = t * g;
      auto& bucket = seen[digest(tg)];
      bool known = false;
      for (const auto j : bucket) {
        if (same_conjugate(tg, transversal[j])) {
          known = true;
          break;
        }
      }
      if (known) continue;
      bucket.push_back(static_cast<std::uint32_t>(transversal.size()));
      transversal.push_back(tg);
      if (transversal.size() > cap) throw CapExceeded("subgroup orbit grew past the cap", cap);
    }
  }
  SubgroupOrbit out;
  out.orbit_size = transversal.size();
  if (ambient_order) {
    if (*ambient_order % out.orbit_size != 0) throw Error("orbit size does not divide the ambient order");
    out.normalizer_order = *ambient_order / out.orbit_size;
  }
  return out;
}

}  // namespace solw
