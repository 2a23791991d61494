#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "solweights/fusion_data.hpp"

using namespace solw;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(SOLW_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("affine exponents") {
  CHECK(Affine::parse("8") == Affine{8, 0});
  CHECK(Affine::parse("7+l") == Affine{7, 1});
  CHECK(Affine::parse("10+3l") == Affine{10, 3});
  CHECK(Affine::parse("10+3l").at(1) == 13);
  CHECK(Affine::parse("10+3l").to_string() == "10+3l");
  CHECK_THROWS(Affine::parse("x"));
}

TEST_CASE("tables load with the expected row counts") {
  const auto& t = fusion_tables();
  CHECK(t.l0.size() == 10);
  CHECK(t.k.size() == 11);
  CHECK(t.h.size() == 18);
  CHECK(t.f.size() == 17);
  for (const auto& r : t.l0)
    if (r.label == "C_S(E)") CHECK(r.f == "GL3(2)");
  for (const auto& r : t.f)
    if (r.label == "A") {
      CHECK(r.f == "GL4(2)");
      CHECK(r.exponent.at(1) == 4);
    }
}

TEST_CASE("table validation rejects bad input") {
  const auto text = read_data("tables.txt");
  CHECK_NOTHROW(load_validate_tables(text));
  // drop a K row
  const auto k_row = text.find("\nK ");
  REQUIRE(k_row != std::string::npos);
  const auto end = text.find('\n', k_row + 1);
  CHECK_THROWS_AS(load_validate_tables(text.substr(0, k_row) + text.substr(end)), ValidationFailure);
  CHECK_THROWS_AS(load_validate_tables(replace_once(text, "GL4(2)", "GL5(7)")), ValidationFailure);
  CHECK_THROWS_AS(load_validate_tables(replace_once(text, "| 10 |", "| 1x |")), ValidationFailure);
}

TEST_CASE("descriptors resolve to groups of the right order") {
  CHECK(resolve_out_descriptor("S3 wr S3")->group.order() == 1296);
  CHECK(resolve_out_descriptor("(C3)^3:(C2xS3)")->group.order() == 324);
  CHECK(resolve_out_descriptor("(C3xC3):-1:C2")->group.order() == 18);
  CHECK_THROWS_AS(resolve_out_descriptor("Monster"), UnknownSpec);
}

TEST_CASE("weights") {
  const auto f0 = weight_count(FusionSystem::kF, 0);
  CHECK(f0.total == 12);
  std::vector<std::size_t> z;
  std::vector<std::string> labels;
  for (const auto& r : f0.rows) {
    z.push_back(r.z);
    labels.push_back(r.label);
  }
  CHECK(z == std::vector<std::size_t>{1, 1, 4, 1, 1, 0, 1, 1, 1, 1});
  CHECK(labels == std::vector<std::string>{"S", "Q", "QR", "QR*", "C_S(U)", "R", "R*", "RR*", "C_S(E)", "A"});
  CHECK(weight_count(FusionSystem::kF, 1).total == 12);
  CHECK(weight_count(FusionSystem::kH, 0).total == 12);
  CHECK(weight_count(FusionSystem::kH, 1).total == 12);
  CHECK(weight_count(FusionSystem::kF, 2).total == 12);
}

TEST_CASE("property: weight is the sum of per-row counts in any order") {
  auto rows = weight_count(FusionSystem::kF, 1).rows;
  std::reverse(rows.begin(), rows.end());
  std::uint64_t sum = 0;
  for (const auto& r : rows) sum += defect_zero_count_cached(descriptor_spec(r.descriptor));
  CHECK(sum == 12);
  // isomorphic constructions of the same descriptor
  CHECK(descriptor_spec("S3 wr C2 x S3") == descriptor_spec("(S3 wr C2) x S3"));
  CHECK(defect_zero_count_cached("x(S3,wr(S3,C2))") == defect_zero_count_cached("x(wr(S3,C2),S3)"));
}

TEST_CASE("bound check, including the s = 0 negative control") {
  CHECK(bound_check(12, 6, false).passed());
  const auto flagged = bound_check(12, 6, true);
  CHECK(flagged.passed());
  CHECK(flagged.notes.size() == 1);
  CHECK_FALSE(bound_check(12, 0, false).passed());
  CHECK_FALSE(bound_check(12, 3, false).passed());
}

TEST_CASE("Hasse diagrams") {
  const auto& h0 = hasse_diagram(0);
  CHECK(h0.nodes.size() == 10);
  CHECK(h0.edges.size() == 14);
  auto has_edge = [](const HasseDiagram& h, const std::string& a, const std::string& b) {
    for (const auto& [x, y] : h.edges)
      if (h.nodes[x].label == a && h.nodes[y].label == b) return true;
    return false;
  };
  CHECK(has_edge(h0, "A", "R"));
  CHECK(has_edge(h0, "A", "C_S(E)"));
  CHECK(has_edge(h0, "Q", "QR"));
  CHECK(has_edge(h0, "RR*", "S"));
  const auto& h1 = hasse_diagram(1);
  CHECK(h1.nodes.size() == 17);
  CHECK(has_edge(h1, "R", "R**"));
  for (unsigned l : {0u, 1u, 3u}) {
    const auto& h = hasse_diagram(l);
    for (const auto& [a, b] : h.edges) CHECK(h.nodes[a].exponent.at(l) < h.nodes[b].exponent.at(l));
  }
}

TEST_CASE("Hasse validation rejects cycles and non-increasing edges") {
  const auto text = read_data("hasse.txt");
  CHECK_NOTHROW(load_validate_hasse(text, "l0"));
  CHECK_THROWS_AS(load_validate_hasse(text + "\nedge l0 S A\n", "l0"), Error);
  CHECK_THROWS_AS(load_validate_hasse(text + "\nedge l0 QR CSU\n", "l0"), ValidationFailure);
}

TEST_CASE("DOT export") {
  const auto dot = hasse_export(0, HasseFormat::kDot);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.back() == '\n');
  const std::regex node_decl(R"(^\s*"[^"]+" \[label=)");
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (std::regex_search(line, node_decl)) ++nodes;
    if (line.find("->") != std::string::npos) ++edges;
  }
  CHECK(nodes == 10);
  CHECK(edges == 14);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(hasse_export(0, HasseFormat::kDot) == dot);
  const auto js = hasse_export(1, HasseFormat::kJson);
  CHECK(js.find("\"nodes\"") != std::string::npos);
}
