#include "solweights/fusion_data.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "solweights/robinson.hpp"
#include "solweights/structure.hpp"

namespace solw {

namespace detail {
const std::map<std::string, std::string>& embedded_files();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

const std::string& embedded(const std::string& name) {
  const auto& files = detail::embedded_files();
  const auto it = files.find(name);
  if (it == files.end()) throw Error("missing embedded file " + name);
  return it->second;
}

}  // namespace

std::string Affine::to_string() const {
  std::string s = std::to_string(constant);
  if (slope == 0) return s;
  s += slope > 0 ? "+" : "-";
  const int a = slope > 0 ? slope : -slope;
  if (a != 1) s += std::to_string(a);
  return s + "l";
}

Affine Affine::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  Affine out;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw Error("bad exponent expression '" + text + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const int coef = pos > start ? std::stoi(s.substr(start, pos - start)) : 1;
    if (pos < s.size() && s[pos] == 'l') {
      out.slope += sign * coef;
      ++pos;
    } else {
      if (pos == start) throw Error("bad exponent expression '" + text + "'");
      out.constant += sign * coef;
    }
    any = true;
  }
  if (!any) throw Error("empty exponent expression");
  return out;
}

const char* to_string(FusionSystem s) {
  switch (s) {
    case FusionSystem::kH: return "H";
    case FusionSystem::kK: return "K";
    case FusionSystem::kF: return "F";
  }
  return "?";
}

FusionSystem parse_fusion_system(const std::string& s) {
  if (s == "H") return FusionSystem::kH;
  if (s == "K") return FusionSystem::kK;
  if (s == "F") return FusionSystem::kF;
  throw Error("unknown fusion system '" + s + "'");
}

const std::optional<std::string>& FusionTableRow::column(FusionSystem s) const {
  switch (s) {
    case FusionSystem::kH: return h;
    case FusionSystem::kK: return k;
    case FusionSystem::kF: return f;
  }
  return f;
}

std::string descriptor_spec(const std::string& descriptor) {
  static const std::map<std::string, std::string> vocab{
      {"(C3)^3:(C2xC2)", "m108"},
      {"(C3)^3:(C2xS3)", "m324"},
      {"(C3xC3):-1:C2", "dih(C3xC3)"},
      {"GL3(2)", "GL(3,2)"},
      {"GL4(2)", "GL(4,2)"},
      {"S3 wr S3", "wr(S3,S3)"},
      {"S3 wr C2", "wr(S3,C2)"},
      {"S3 x S3", "x(S3,S3)"},
      {"S3 x S3 wr C2", "x(S3,wr(S3,C2))"},
      {"S3 wr C2 x S3", "x(wr(S3,C2),S3)"},
      {"(S3 wr C2) x S3", "x(wr(S3,C2),S3)"},
      {"S3^3", "x(S3,x(S3,S3))"},
  };
  const auto it = vocab.find(trim(descriptor));
  return it == vocab.end() ? trim(descriptor) : it->second;
}

std::shared_ptr<const NamedGroup> resolve_out_descriptor(const std::string& descriptor) {
  return named_group(descriptor_spec(descriptor));
}

std::size_t defect_zero_count_cached(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, std::size_t> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(spec); it != cache.end()) return it->second;
  }
  const auto z = defect_zero_block_count(named_group(spec)->group).count;
  std::lock_guard lock(mu);
  cache[spec] = z;
  return z;
}

FusionTables load_validate_tables(const std::string& text) {
  FusionTables t;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, '|');
    auto where = [&] { return "tables line " + std::to_string(lineno) + " ('" + line + "')"; };
    if (cells.size() != 6) throw ValidationFailure(where() + ": expected 6 fields");
    FusionTableRow row;
    row.table = cells[0];
    row.label = cells[1];
    row.line = lineno;
    try {
      row.exponent = Affine::parse(cells[2]);
    } catch (const Error& e) {
      throw ValidationFailure(where() + ": " + e.what());
    }
    auto opt = [](const std::string& c) { return c == "-" ? std::nullopt : std::optional<std::string>(c); };
    row.h = opt(cells[3]);
    row.k = opt(cells[4]);
    row.f = opt(cells[5]);
    for (const auto* cell : {&row.h, &row.k, &row.f}) {
      if (!*cell) continue;
      std::shared_ptr<const NamedGroup> g;
      try {
        g = resolve_out_descriptor(**cell);
      } catch (const Error& e) {
        throw ValidationFailure(where() + ": descriptor '" + **cell + "' does not resolve: " + e.what());
      }
      if (g->group.order() != g->closed_form_order)
        throw ValidationFailure(where() + ": '" + **cell + "' has the wrong order");
    }
    if (row.table == "l0") {
      if (row.exponent.slope != 0) throw ValidationFailure(where() + ": l0 rows have constant exponents");
      t.l0.push_back(std::move(row));
    } else if (row.table == "K") {
      if (row.h || row.f || !row.k) throw ValidationFailure(where() + ": K rows carry only the K column");
      t.k.push_back(std::move(row));
    } else if (row.table == "H") {
      if (row.k || row.f || !row.h) throw ValidationFailure(where() + ": H rows carry only the H column");
      t.h.push_back(std::move(row));
    } else if (row.table == "F") {
      if (!row.f) throw ValidationFailure(where() + ": F rows need an F entry");
      t.f.push_back(std::move(row));
    } else {
      throw ValidationFailure(where() + ": unknown table '" + row.table + "'");
    }
  }
  auto count = [](const std::vector<FusionTableRow>& rows, std::size_t n, const char* name) {
    if (rows.size() != n)
      throw ValidationFailure(std::string("table ") + name + " has " + std::to_string(rows.size()) + " rows, expected " +
                              std::to_string(n));
  };
  count(t.l0, 10, "l0");
  count(t.k, 11, "K");
  count(t.h, 18, "H");
  count(t.f, 17, "F");

  auto same_group = [](const std::string& a, const std::string& b) {
    const auto ga = resolve_out_descriptor(a);
    const auto gb = resolve_out_descriptor(b);
    return ga->group.order() == gb->group.order() &&
           structure_fingerprint(ga->group) == structure_fingerprint(gb->group);
  };
  auto lookup = [](const std::vector<FusionTableRow>& rows, const std::string& label) -> const FusionTableRow* {
    for (const auto& r : rows)
      if (r.label == label) return &r;
    return nullptr;
  };
  for (const auto& row : t.f) {
    auto where = "F row '" + row.label + "' (line " + std::to_string(row.line) + ")";
    // F agrees with K when P is K-centric radical, otherwise with H.
    const auto& ref = row.k ? row.k : row.h;
    if (ref && !same_group(*ref, *row.f)) throw ValidationFailure(where + ": F column disagrees with " + *ref);
    // Cells shared with the per-system tables must match them.
    for (const auto& [sys, rows] : {std::pair{FusionSystem::kK, &t.k}, std::pair{FusionSystem::kH, &t.h}}) {
      const auto& mine = row.column(sys);
      const auto* other = lookup(*rows, row.label);
      if (!other) continue;
      if (other->exponent != row.exponent) throw ValidationFailure(where + ": order disagrees with its own table");
      const auto& theirs = other->column(sys);
      if (mine.has_value() != theirs.has_value() || (mine && !same_group(*mine, *theirs)))
        throw ValidationFailure(where + ": " + to_string(sys) + " column disagrees with the " + to_string(sys) +
                                " table");
    }
  }
  for (const auto& row : t.l0) {
    const auto& ref = row.k ? row.k : row.h;
    if (ref && !same_group(*ref, *row.f))
      throw ValidationFailure("l0 row '" + row.label + "': F column disagrees with " + *ref);
  }
  return t;
}

const FusionTables& fusion_tables() {
  static const FusionTables t = load_validate_tables(embedded("tables.txt"));
  return t;
}

const std::vector<FusionTableRow>& table_for(FusionSystem s, unsigned l) {
  const auto& t = fusion_tables();
  if (l == 0) return t.l0;
  switch (s) {
    case FusionSystem::kH: return t.h;
    case FusionSystem::kK: return t.k;
    case FusionSystem::kF: return t.f;
  }
  return t.f;
}

WeightCount weight_count(FusionSystem s, unsigned l) {
  if (s == FusionSystem::kK) throw Error("weights are counted for H or F");
  WeightCount w;
  w.system = s;
  w.l = l;
  for (const auto& row : table_for(s, l)) {
    const auto& cell = row.column(s);
    if (!cell) continue;
    const auto z = defect_zero_count_cached(descriptor_spec(*cell));
    w.rows.push_back({row.label, *cell, z});
    w.total += z;
  }
  return w;
}

Report bound_check(std::uint64_t weight, unsigned sectional_rank, bool rank_from_data) {
  Report rep;
  rep.title = "bound";
  const std::uint64_t bound = std::uint64_t{1} << sectional_rank;
  rep.expect_true("w <= 2^s(S)", weight <= bound,
                  std::to_string(weight) + " <= " + std::to_string(bound) + " (s = " + std::to_string(sectional_rank) +
                      ")");
  if (rank_from_data) rep.note("s(S) = " + std::to_string(sectional_rank) + " taken from table data, not computed");
  return rep;
}

std::optional<std::size_t> HasseDiagram::find(const std::string& label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].label == label) return i;
  return std::nullopt;
}

HasseDiagram load_validate_hasse(const std::string& text, const std::string& figure) {
  HasseDiagram h;
  std::map<std::string, std::size_t> ids;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind, fig;
    ls >> kind >> fig;
    if (fig != figure) continue;
    auto where = [&] { return "hasse line " + std::to_string(lineno); };
    if (kind == "node") {
      HasseNode n;
      std::string expr;
      ls >> n.id >> n.label >> expr;
      if (expr.empty()) throw ValidationFailure(where() + ": node needs id, label and exponent");
      n.exponent = Affine::parse(expr);
      if (!ids.emplace(n.id, h.nodes.size()).second) throw ValidationFailure(where() + ": duplicate node " + n.id);
      h.nodes.push_back(std::move(n));
    } else if (kind == "edge") {
      std::string a, b;
      ls >> a >> b;
      if (!ids.count(a) || !ids.count(b)) throw ValidationFailure(where() + ": unknown node in edge");
      h.edges.emplace_back(ids[a], ids[b]);
    } else {
      throw ValidationFailure(where() + ": unknown record '" + kind + "'");
    }
  }
  if (h.nodes.empty()) throw ValidationFailure("no nodes for figure " + figure);
  const unsigned lmin = figure == "l0" ? 0 : 1;
  const unsigned lmax = figure == "l0" ? 0 : 4;
  for (const auto& [a, b] : h.edges)
    for (unsigned l = lmin; l <= lmax; ++l)
      if (h.nodes[a].exponent.at(l) >= h.nodes[b].exponent.at(l))
        throw ValidationFailure("edge " + h.nodes[a].label + " -> " + h.nodes[b].label +
                                " does not increase the order at l = " + std::to_string(l));
  // Strictly increasing exponents already rule out cycles; check anyway.
  std::vector<int> state(h.nodes.size(), 0);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (const auto& [a, b] : h.edges) {
      if (a != v) continue;
      if (state[b] == 1) throw CyclicInput("Hasse diagram has a cycle");
      if (state[b] == 0) visit(b);
    }
    state[v] = 2;
  };
  for (std::size_t v = 0; v < h.nodes.size(); ++v)
    if (state[v] == 0) visit(v);
  return h;
}

const HasseDiagram& hasse_diagram(unsigned l) {
  static const HasseDiagram first = load_validate_hasse(embedded("hasse.txt"), "l0");
  static const HasseDiagram second = load_validate_hasse(embedded("hasse.txt"), "l1");
  return l == 0 ? first : second;
}

std::string hasse_export(unsigned l, HasseFormat format) {
  const auto& h = hasse_diagram(l);
  std::vector<std::size_t> order(h.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h.nodes[a].exponent.at(l) < h.nodes[b].exponent.at(l);
  });
  auto edges = h.edges;
  std::sort(edges.begin(), edges.end());

  if (format == HasseFormat::kJson) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto i : order) {
      const auto& n = h.nodes[i];
      nodes.push_back({{"id", n.id},
                       {"label", n.label},
                       {"exponent", n.exponent.to_string()},
                       {"order_exponent", n.exponent.at(l)}});
    }
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [a, b] : edges) es.push_back({{"from", h.nodes[a].label}, {"to", h.nodes[b].label}});
    const nlohmann::json out{{"l", l}, {"nodes", nodes}, {"edges", es}};
    return out.dump(2) + "\n";
  }

  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "digraph hasse_l" << l << " {\n  rankdir=BT;\n";
  for (const auto i : order) {
    const auto& n = h.nodes[i];
    os << "  " << quoted(n.label) << " [label=" << quoted(n.label + "\\n2^" + n.exponent.to_string()) << "];\n";
  }
  std::map<int, std::vector<std::size_t>> ranks;
  for (const auto i : order) ranks[h.nodes[i].exponent.at(l)].push_back(i);
  for (const auto& [e, members] : ranks) {
    os << "  { rank=same;";
    for (const auto i : members) os << ' ' << quoted(h.nodes[i].label) << ';';
    os << " }  // 2^" << e << "\n";
  }
  for (const auto& [a, b] : edges) os << "  " << quoted(h.nodes[a].label) << " -> " << quoted(h.nodes[b].label) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace solw
