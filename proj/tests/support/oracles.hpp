#pragma once

// Slow, obviously-correct reference computations used to freeze expected
// values. Nothing here calls the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "solweights/perm.hpp"

namespace oracle {

template <class E>
std::vector<E> closure(const E& id, const std::vector<E>& gens) {
  std::set<E> seen{id};
  std::vector<E> out{id};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      E y = out[i] * g;
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

// x^g = g^-1 x g
template <class E>
E conj(const E& x, const E& g) {
  return g.inverse() * x * g;
}

// Conjugacy classes by all-pairs conjugation; returns class id per element
// (index into elems) and the sorted class sizes.
template <class E>
std::vector<std::size_t> class_ids(const std::vector<E>& elems, std::size_t* count = nullptr) {
  std::map<E, std::size_t> where;
  for (std::size_t i = 0; i < elems.size(); ++i) where[elems[i]] = i;
  std::vector<std::size_t> id(elems.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (id[i] != SIZE_MAX) continue;
    for (const auto& g : elems) id[where.at(conj(elems[i], g))] = next;
    ++next;
  }
  if (count) *count = next;
  return id;
}

template <class E>
std::vector<std::uint64_t> class_sizes(const std::vector<E>& elems) {
  std::size_t n = 0;
  const auto id = class_ids(elems, &n);
  std::vector<std::uint64_t> sizes(n, 0);
  for (auto c : id) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

template <class E>
std::vector<E> normalizer(const std::vector<E>& g, const std::vector<E>& h) {
  std::set<E> hs(h.begin(), h.end());
  std::vector<E> out;
  for (const auto& x : g) {
    bool ok = true;
    for (const auto& y : h)
      if (!hs.count(conj(y, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

template <class E>
std::size_t centralizer_size(const std::vector<E>& g, const E& x) {
  std::size_t n = 0;
  for (const auto& y : g)
    if (x * y == y * x) ++n;
  return n;
}

inline std::uint64_t partitions(int n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  return p[n];
}

inline std::uint64_t two_part(std::uint64_t n) {
  std::uint64_t r = 1;
  while (n % 2 == 0) {
    n /= 2;
    r *= 2;
  }
  return r;
}

// #{(a,b,c,d) in F_p^4 : ad - bc = 1}
inline std::uint64_t sl2_count(unsigned p) {
  std::uint64_t n = 0;
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c)
        for (unsigned d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p == 1) ++n;
  return n;
}

// Rank of a 0/1 matrix over GF(2) by plain Gaussian elimination.
inline std::size_t gf2_rank(std::vector<std::vector<int>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && !(m[piv][c] & 1)) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && (m[r][c] & 1))
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k] & 1;
    ++rank;
  }
  return rank;
}

// N N^T over the integers.
inline std::vector<std::vector<int>> gram(const std::vector<std::vector<int>>& n) {
  std::vector<std::vector<int>> g(n.size(), std::vector<int>(n.size(), 0));
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      for (std::size_t k = 0; k < n[i].size(); ++k) g[i][j] += n[i][k] * n[j][k];
  return g;
}

}  // namespace oracle
