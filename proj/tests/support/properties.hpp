#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solweights/report.hpp"

namespace props {

// Robinson rank under randomized f(D), shuffled generators and a conjugated
// Sylow 2-subgroup, `runs` times. Every run's rank must equal the baseline.
struct Invariance {
  std::string spec;
  std::size_t baseline = 0;
  std::size_t runs = 0;
  std::vector<std::size_t> ranks;
  bool ok = true;
};
Invariance robinson_invariance(const std::string& spec, std::size_t runs, std::uint64_t seed);

// The 13 groups of the defect-zero table, as zoo specs.
const std::vector<std::string>& table_specs();

// delta o delta = 0 on the constant functors of both figures and on the
// assembled limit data for l = 0 and l = 1. Returns one check per complex.
solw::Report delta_squared_suite();

}  // namespace props
