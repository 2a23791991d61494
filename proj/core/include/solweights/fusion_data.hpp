#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solweights/report.hpp"
#include "solweights/zoo.hpp"

namespace solw {

/// constant + slope * l
struct Affine {
  int constant = 0;
  int slope = 0;

  int at(unsigned l) const { return constant + slope * static_cast<int>(l); }
  std::string to_string() const;
  /// "8", "7+l", "10+3l".
  static Affine parse(const std::string& s);
  friend bool operator==(const Affine&, const Affine&) = default;
};

enum class FusionSystem { kH, kK, kF };
const char* to_string(FusionSystem s);
/// "H", "K" or "F"; throws Error otherwise.
FusionSystem parse_fusion_system(const std::string& s);

struct FusionTableRow {
  std::string table;  // l0, K, H or F
  std::string label;
  Affine exponent;
  std::optional<std::string> h, k, f;
  std::size_t line = 0;

  const std::optional<std::string>& column(FusionSystem s) const;
};

struct FusionTables {
  std::vector<FusionTableRow> l0, k, h, f;
};

/// Parses and validates the table file; throws ValidationFailure naming the row.
FusionTables load_validate_tables(const std::string& text);
/// The embedded tables, loaded once.
const FusionTables& fusion_tables();
/// Rows of the table a system uses at level l: l0 for l = 0, else its own table.
const std::vector<FusionTableRow>& table_for(FusionSystem s, unsigned l);

/// Table vocabulary ("S3 wr C2 x S3", "(C3xC3):-1:C2", ...) or any zoo spec.
std::string descriptor_spec(const std::string& descriptor);
std::shared_ptr<const NamedGroup> resolve_out_descriptor(const std::string& descriptor);

/// Defect-zero block count of a zoo spec, memoized.
std::size_t defect_zero_count_cached(const std::string& spec);

struct WeightRow {
  std::string label;
  std::string descriptor;
  std::size_t z = 0;
};

struct WeightCount {
  FusionSystem system = FusionSystem::kF;
  unsigned l = 0;
  std::uint64_t total = 0;
  std::vector<WeightRow> rows;  // rows with a descriptor, in table order
};

/// H or F only.
WeightCount weight_count(FusionSystem s, unsigned l);

/// weight <= 2^s.
Report bound_check(std::uint64_t weight, unsigned sectional_rank, bool rank_from_data);

struct HasseNode {
  std::string id;
  std::string label;
  Affine exponent;
};

struct HasseDiagram {
  std::vector<HasseNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper)

  std::optional<std::size_t> find(const std::string& label) const;
};

/// First figure for l = 0, the second for l >= 1. Validated: acyclic and
/// every edge strictly increases the order exponent (checked at l <= 4).
const HasseDiagram& hasse_diagram(unsigned l);
HasseDiagram load_validate_hasse(const std::string& text, const std::string& figure);

enum class HasseFormat { kDot, kJson };
std::string hasse_export(unsigned l, HasseFormat format);

}  // namespace solw
