#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

namespace solw {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

inline std::string describe(const std::string& s) { return s; }
inline std::string describe(const char* s) { return s; }
inline std::string describe(bool b) { return b ? "true" : "false"; }
template <class T>
  requires std::is_integral_v<T>
std::string describe(T v) {
  return std::to_string(v);
}
template <class T>
std::string describe(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << describe(v[i]);
  os << ')';
  return os.str();
}

/// A list of named expected/computed comparisons plus free-form notes.
struct Report {
  std::string title;
  std::optional<unsigned> l;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  template <class A, class B>
  bool expect(std::string name, const A& expected, const B& computed) {
    bool ok;
    if constexpr (std::is_integral_v<A> && std::is_integral_v<B>)
      ok = static_cast<long double>(expected) == static_cast<long double>(computed);
    else
      ok = expected == computed;
    checks.push_back({std::move(name), describe(expected), describe(computed), ok});
    return ok;
  }
  bool expect_true(std::string name, bool value, std::string detail = "") {
    checks.push_back({std::move(name), "true", detail.empty() ? describe(value) : std::move(detail), value});
    return value;
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
  void append(const Report& o) {
    for (const auto& c : o.checks) checks.push_back({o.title + ": " + c.name, c.expected, c.computed, c.pass});
    for (const auto& n : o.notes) notes.push_back(o.title + ": " + n);
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

nlohmann::json to_json(const Report& r);

}  // namespace solw
