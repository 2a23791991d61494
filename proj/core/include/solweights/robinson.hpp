#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "solweights/group.hpp"
#include "solweights/linalg.hpp"
#include "solweights/perm.hpp"

namespace solw {

using PermGroup = FiniteGroup<Perm>;

/// Classes with odd centralizer order.
std::vector<ConjClass<Perm>> defect_zero_classes(const PermGroup& g);

struct RobinsonOptions {
  /// When set, f(D) is a uniformly random defect-zero element of D drawn from
  /// this seed instead of the first one in enumeration order.
  std::optional<std::uint64_t> choice_seed;
  /// Replaces the default Sylow 2-subgroup (must be one).
  std::optional<PermGroup> sylow;
};

struct RobinsonData {
  PermGroup sylow;
  std::vector<ConjClass<Perm>> classes;
  std::vector<ConjClass<Perm>> y;  // defect-zero classes
  std::uint64_t y0_size = 0;       // number of defect-zero elements
  std::uint64_t double_cosets = 0;
  std::vector<Perm> x;             // f(D) for the admissible double cosets D
  std::vector<std::uint64_t> x_coset_sizes;
  Gf2Matrix n;                     // |Y| x |X|
  std::size_t rank = 0;            // GF(2) rank of N N^T
  std::size_t bound = 0;           // min(|X|, |Y|)
  bool trivial_group = false;
};

RobinsonData robinson_matrix(const PermGroup& g, const RobinsonOptions& opt = {});

struct DefectZeroCount {
  std::size_t count = 0;
  std::size_t bound = 0;
};

DefectZeroCount defect_zero_block_count(const PermGroup& g);

/// {group, order, sylow_order, classes, defect_zero, X, N, rank, bound, count}.
nlohmann::json to_json(const RobinsonData& d, const std::string& group, std::uint64_t order);

/// Largest normal subgroup of odd order.
PermGroup odd_core(const PermGroup& g);

/// Number of G-classes of defect zero contained in O_2'(G); a lower bound for
/// the number of defect-zero blocks.
std::size_t odd_core_defect_zero_classes(const PermGroup& g);

/// The defect-zero class count when G has a normal 2-complement.
std::optional<std::size_t> two_complement_shortcut(const PermGroup& g);

}  // namespace solw
