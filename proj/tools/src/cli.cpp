#include "solw_cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "solweights/cohomology.hpp"
#include "solweights/config.hpp"
#include "solweights/errors.hpp"
#include "solweights/fusion_data.hpp"
#include "solweights/poset.hpp"
#include "solweights/report.hpp"
#include "solweights/robinson.hpp"
#include "solweights/solmodel.hpp"
#include "solweights/zoo.hpp"

namespace solw::cli {

namespace {

using nlohmann::json;

// What one subcommand produces before it is wrapped into a RunReport.
struct Result {
  json results = json::object();
  Report checks;
  std::string raw;  // printed verbatim without --json (hasse)
};

json checks_json(const Report& r) {
  json a = json::array();
  for (const auto& c : r.checks)
    a.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.computed}, {"pass", c.pass}});
  return a;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string plain_text(const json& report) {
  std::ostringstream os;
  os << report["command"].get<std::string>() << '\n';
  for (const auto& [k, v] : report["results"].items()) {
    if (v.is_structured()) continue;
    os << "  " << k << ": " << scalar_text(v) << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : report["checks"]) {
    const bool ok = c["pass"].get<bool>();
    if (!ok) ++failed;
    os << (ok ? "  PASS " : "  FAIL ") << c["name"].get<std::string>() << ": expected "
       << c["expected"].get<std::string>() << ", got " << c["actual"].get<std::string>() << '\n';
  }
  os << report["checks"].size() - failed << '/' << report["checks"].size() << " checks passed\n";
  return os.str();
}

Result cmd_defect_zero(const std::string& spec) {
  Result r;
  const auto g = named_group(spec);
  const auto data = robinson_matrix(g->group);
  r.results = to_json(data, spec, g->group.order());
  r.checks.title = "defect-zero";
  r.checks.expect_true("rank <= min(|X|, |Y|)", data.rank <= data.bound,
                       std::to_string(data.rank) + " <= " + std::to_string(data.bound));
  const auto lower = odd_core_defect_zero_classes(g->group);
  r.checks.expect_true("count >= defect-zero classes in the odd core", data.rank >= lower,
                       std::to_string(data.rank) + " >= " + std::to_string(lower));
  if (const auto sc = two_complement_shortcut(g->group)) {
    r.results["two_complement_shortcut"] = *sc;
    r.checks.expect("normal 2-complement shortcut agrees", *sc, data.rank);
  }
  return r;
}

Result cmd_table_def0() {
  Result r;
  r.checks.title = "table-def0";
  r.results["rows"] = json::array();
  std::size_t matches = 0;
  for (const auto& row : defect_zero_table()) {
    const auto z = defect_zero_count_cached(row.spec);
    if (z == row.expected) ++matches;
    r.results["rows"].push_back({{"group", row.label}, {"spec", row.spec}, {"z", z}, {"expected", row.expected}});
    r.checks.expect(row.label, row.expected, z);
  }
  r.results["matches"] = matches;
  r.results["rows_total"] = defect_zero_table().size();
  return r;
}

Result cmd_weights(const std::string& system, unsigned l) {
  Result r;
  const auto s = parse_fusion_system(system);
  if (s == FusionSystem::kK) throw CLI::ValidationError("--system", "weights are defined for H and F only");
  const auto w = weight_count(s, l);
  r.results["system"] = system;
  r.results["l"] = l;
  r.results["weight"] = w.total;
  std::vector<std::size_t> zs;
  r.results["rows"] = json::array();
  for (const auto& row : w.rows) {
    zs.push_back(row.z);
    r.results["rows"].push_back({{"label", row.label}, {"out", row.descriptor}, {"z", row.z}});
  }
  r.results["z_vector"] = zs;
  r.checks.title = "weights";
  r.checks.expect("weight", std::uint64_t{12}, w.total);
  if (s == FusionSystem::kF && l == 0)
    r.checks.expect("z-vector", std::vector<std::size_t>{1, 1, 4, 1, 1, 0, 1, 1, 1, 1}, zs);
  return r;
}

Result cmd_verify_quaternion(unsigned l) {
  if (l < 1 || l > 3) throw CLI::ValidationError("--l", "quaternion checks need 1 <= l <= 3");
  Result r;
  r.checks = verify_quaternion_lemma(l);
  r.results["l"] = l;
  r.results["notes"] = r.checks.notes;
  return r;
}

Result cmd_verify_sol(unsigned l) {
  if (l > 1) throw CLI::ValidationError("--l", "the model is built for l = 0 and l = 1 only");
  Result r;
  const auto m = build_sol_model(l);
  r.results["l"] = l;
  r.results["S_order"] = m.s.order();
  r.results["K_order"] = m.k_order;
  r.checks.title = "verify sol";
  r.checks.append(verify_torus_sequence(m));
  const auto weight = weight_count(FusionSystem::kF, l).total;
  if (l == 0) {
    const auto cert = sectional_rank_certificate(m);
    r.checks.append(cert.report);
    r.results["sectional_rank"] = {{"lower", cert.lower}, {"upper", cert.upper}};
    r.checks.append(verify_k_radicals_l0(m));
    r.checks.append(bound_check(weight, cert.upper, false));
  } else {
    r.checks.append(spotcheck_l1(m));
    r.checks.append(bound_check(weight, 6, true));
  }
  r.results["notes"] = r.checks.notes;
  return r;
}

// Expected dim H^2(G, F_3) for the groups whose certificates the tables rely on.
const std::map<std::string, std::size_t>& known_h2_at_3() {
  static const std::map<std::string, std::size_t> m{
      {"S6", 0},         {"S7", 0},          {"GL(4,2)", 0}, {"x(S3,S3)", 0},       {"wr(S3,C2)", 0},
      {"S5", 0},         {"GL(3,2)", 0},     {"wr(S3,S3)", 0}, {"m324", 0},         {"A7", 1},
      {"dih(C3xC3)", 1}, {"m108", 1},
  };
  return m;
}

Result cmd_cohomology(const std::string& spec, unsigned p) {
  if (p < 3 || p % 2 == 0) throw CLI::ValidationError("--prime", "an odd prime is required");
  for (unsigned d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw CLI::ValidationError("--prime", std::to_string(p) + " is not prime");
  Result r;
  const auto g = named_group(spec);
  const auto cert = h2_certificate(*g, p);
  r.results = to_json(cert);
  r.results["order"] = g->group.order();
  r.checks.title = "cohomology";
  if (p == 3) {
    if (const auto it = known_h2_at_3().find(spec); it != known_h2_at_3().end())
      r.checks.expect("dim H^2(" + spec + ", F_3)", it->second, cert.dim);
  } else if (known_h2_at_3().count(spec)) {
    r.checks.expect("dim H^2(" + spec + ", F_" + std::to_string(p) + ")", std::size_t{0}, cert.dim);
  }
  return r;
}

Result cmd_lim(unsigned l) {
  Result r;
  const auto lim = verify_lim_A2(l);
  r.results = to_json(lim);
  r.checks = lim.report;
  return r;
}

Result cmd_hasse(unsigned l, const std::string& format) {
  Result r;
  const auto fmt = format == "dot" ? HasseFormat::kDot : HasseFormat::kJson;
  r.raw = hasse_export(l, fmt);
  const auto& h = hasse_diagram(l);
  r.results["l"] = l;
  r.results["format"] = format;
  r.results["nodes"] = h.nodes.size();
  r.results["edges"] = h.edges.size();
  r.results["text"] = r.raw;
  r.checks.title = "hasse";
  r.checks.expect("node count", std::size_t{l == 0 ? 10u : 17u}, h.nodes.size());
  return r;
}

}  // namespace

const std::vector<DefectZeroRow>& defect_zero_table() {
  static const std::vector<DefectZeroRow> rows{
      {"S3", "S3", 1},
      {"S3 x S3", "x(S3,S3)", 1},
      {"S3 x S3 x S3", "x(S3,x(S3,S3))", 1},
      {"S3 wr C2", "wr(S3,C2)", 0},
      {"(C3xC3):-1:C2", "dih(C3xC3)", 4},
      {"(C3)^3:(C2xS3)", "m324", 1},
      {"GL3(2)", "GL(3,2)", 1},
      {"GL4(2)", "GL(4,2)", 1},
      {"S6", "S6", 1},
      {"S3 wr S3", "wr(S3,S3)", 1},
      {"S5", "S5", 0},
      {"A7", "A7", 0},
      {"S7", "S7", 0},
  };
  return rows;
}

json without_timing(json report) {
  if (report.is_object()) report.erase("timing");
  return report;
}

Outcome dispatch(const std::vector<std::string>& args) {
  Outcome out;
  CLI::App app{"defect-zero blocks, weights and limits for the Solomon fusion systems", "solw"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  unsigned threads = 1;
  std::uint64_t cap = 0;
  app.add_flag("--json", as_json, "print the run report as JSON");
  app.add_option("--threads", threads, "worker threads for parallel scans")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", cap, std::string("enumeration cap (also ") + kCapEnvVar + ")")->check(CLI::PositiveNumber);

  std::string group, system = "F", format = "dot";
  unsigned l = 0, prime = 3;
  json inputs = json::object();
  std::function<Result()> action;
  std::string command;

  auto* dz = app.add_subcommand("defect-zero", "Robinson matrix and defect-zero block count of one group");
  dz->add_option("--group", group, "group spec, e.g. A7, wr(S3,S3), GL(4,2)")->required();
  dz->callback([&] {
    command = "defect-zero";
    inputs = {{"group", group}};
    action = [&] { return cmd_defect_zero(group); };
  });

  auto* td = app.add_subcommand("table-def0", "all rows of the defect-zero table");
  td->callback([&] {
    command = "table-def0";
    action = [] { return cmd_table_def0(); };
  });

  auto* w = app.add_subcommand("weights", "weight count of a fusion system");
  w->add_option("--system", system, "H or F")->check(CLI::IsMember({"H", "F"}));
  w->add_option("--l", l, "level, q = 5^(2^l)")->required();
  w->callback([&] {
    command = "weights";
    inputs = {{"system", system}, {"l", l}};
    action = [&] { return cmd_weights(system, l); };
  });

  auto* v = app.add_subcommand("verify", "model verifications");
  v->require_subcommand(1);
  auto* vq = v->add_subcommand("quaternion", "quaternion subgroups of the Sylow 2-subgroup of SL2(q)");
  vq->add_option("--l", l, "1, 2 or 3")->required();
  vq->callback([&] {
    command = "verify quaternion";
    inputs = {{"l", l}};
    action = [&] { return cmd_verify_quaternion(l); };
  });
  auto* vs = v->add_subcommand("sol", "the Sylow 2-subgroup and K-side radicals");
  vs->add_option("--l", l, "0 or 1")->required();
  vs->callback([&] {
    command = "verify sol";
    inputs = {{"l", l}};
    action = [&] { return cmd_verify_sol(l); };
  });

  auto* co = app.add_subcommand("cohomology", "certificate for dim H^2(G, F_p), p odd");
  co->add_option("--group", group, "group spec")->required();
  co->add_option("--prime", prime, "odd prime")->required();
  co->callback([&] {
    command = "cohomology";
    inputs = {{"group", group}, {"prime", prime}};
    action = [&] { return cmd_cohomology(group, prime); };
  });

  auto* li = app.add_subcommand("lim", "limit of the degree-two functor over the chain poset");
  li->add_option("--l", l, "level")->required();
  li->callback([&] {
    command = "lim";
    inputs = {{"l", l}};
    action = [&] { return cmd_lim(l); };
  });

  auto* ha = app.add_subcommand("hasse", "export a Hasse diagram");
  ha->add_option("--l", l, "level")->required();
  ha->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  ha->callback([&] {
    command = "hasse";
    inputs = {{"l", l}, {"format", format}};
    action = [&] { return cmd_hasse(l, format); };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out.text = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.text = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kUsage;
    out.text = std::string(e.what()) + "\n" + "Run with --help for more information.\n";
    return out;
  }

  set_thread_count(threads);
  if (cap) set_enumeration_cap(cap);
  if (cap || std::getenv(kCapEnvVar)) inputs["cap"] = enumeration_cap();

  const auto t0 = std::chrono::steady_clock::now();
  Result res;
  try {
    res = action();
  } catch (const CLI::ValidationError& e) {
    out.exit_code = kUsage;
    out.text = std::string(e.what()) + "\n";
    return out;
  } catch (const CapExceeded& e) {
    out.exit_code = kCapExceeded;
    out.text = std::string("cap exceeded: ") + e.what() + "\n";
    out.report = {{"command", command}, {"inputs", inputs}, {"error", e.what()}};
    return out;
  } catch (const UnknownSpec& e) {
    out.exit_code = kUsage;
    out.text = std::string("unknown group: ") + e.what() + "\n";
    return out;
  } catch (const Error& e) {
    res.checks.title = command;
    res.checks.expect_true("completed", false, e.what());
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

  out.report = {{"command", command},
                {"inputs", inputs},
                {"results", res.results},
                {"checks", checks_json(res.checks)},
                {"timing", {{"wall_ms", ms}}}};
  out.exit_code = res.checks.passed() ? kOk : kCheckFailed;
  if (as_json)
    out.text = out.report.dump(2) + "\n";
  else if (!res.raw.empty())
    out.text = res.raw;
  else
    out.text = plain_text(out.report);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto o = dispatch(args);
  (o.exit_code == kUsage || o.exit_code == kCapExceeded ? err : out) << o.text;
  return o.exit_code;
}

}  // namespace solw::cli
