#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace solw::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapExceeded = 3 };

struct Outcome {
  int exit_code = kOk;
  /// RunReport: {command, inputs, results, checks, timing}. Null on usage errors.
  nlohmann::json report;
  /// What gets printed: the report as JSON under --json, else a plain summary
  /// (or the raw DOT/JSON text for `hasse`).
  std::string text;
};

/// args excludes the program name. Never throws.
Outcome dispatch(const std::vector<std::string>& args);

/// dispatch, then writes text to out (or usage errors to err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The 13 rows of the defect-zero table as (descriptor, zoo spec, expected count).
struct DefectZeroRow {
  std::string label;
  std::string spec;
  std::size_t expected = 0;
};
const std::vector<DefectZeroRow>& defect_zero_table();

/// RunReport JSON with the timing field removed.
nlohmann::json without_timing(nlohmann::json report);

}  // namespace solw::cli
