#include "solweights/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace solw {
namespace {

std::uint64_t cap_from_env() {
  const char* raw = std::getenv(kCapEnvVar);
  if (raw == nullptr) return kDefaultEnumerationCap;
  try {
    const auto value = std::stoull(raw);
    return value > 0 ? value : kDefaultEnumerationCap;
  } catch (const std::exception&) {
    return kDefaultEnumerationCap;
  }
}

std::atomic<std::uint64_t>& cap_slot() {
  static std::atomic<std::uint64_t> slot{cap_from_env()};
  return slot;
}

std::atomic<unsigned> g_threads{1};

}  // namespace

std::uint64_t enumeration_cap() { return cap_slot().load(); }
void set_enumeration_cap(std::uint64_t cap) { cap_slot().store(cap == 0 ? kDefaultEnumerationCap : cap); }

unsigned thread_count() { return g_threads.load(); }
void set_thread_count(unsigned n) { g_threads.store(n == 0 ? 1 : n); }

}  // namespace solw
