#include "solweights/report.hpp"

namespace solw {

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"check", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
    if (r.l) j["l"] = *r.l;
    checks.push_back(std::move(j));
  }
  nlohmann::json out{{"title", r.title}, {"checks", std::move(checks)}, {"notes", r.notes}, {"pass", r.passed()}};
  if (r.l) out["l"] = *r.l;
  return out;
}

}  // namespace solw
