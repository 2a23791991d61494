#pragma once

#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace solw {

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;
inline constexpr const char* kCapEnvVar = "SOLW_ENUM_CAP";

/// Process-wide enumeration cap. Defaults to kDefaultEnumerationCap, or the
/// value of SOLW_ENUM_CAP when that variable holds a positive integer.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

unsigned thread_count();
void set_thread_count(unsigned n);

/// Runs body(i) for i in [0, n) on thread_count() workers over contiguous
/// chunks. Callers write results into slot i only, so output never depends on
/// the schedule.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const unsigned workers = thread_count();
  if (workers <= 1 || n < 2 * static_cast<std::size_t>(workers)) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace solw
