#include <doctest.h>

#include <set>

#include "solweights/robinson.hpp"
#include "solweights/zoo.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace solw;

namespace {

// N_ij = |y_i^G n x_j S| mod 2 with classes from all-pairs conjugation.
std::vector<std::vector<int>> oracle_n(const PermGroup& g, const RobinsonData& d) {
  const auto& elems = g.elements();
  const auto id = oracle::class_ids(elems);
  std::map<Perm, std::size_t> cls;
  for (std::size_t i = 0; i < elems.size(); ++i) cls[elems[i]] = id[i];
  std::vector<std::vector<int>> n(d.y.size(), std::vector<int>(d.x.size(), 0));
  for (std::size_t i = 0; i < d.y.size(); ++i)
    for (std::size_t j = 0; j < d.x.size(); ++j) {
      int count = 0;
      for (const auto& s : d.sylow.elements())
        if (cls.at(d.x[j] * s) == cls.at(d.y[i].representative)) ++count;
      n[i][j] = count % 2;
    }
  return n;
}

std::multiset<std::vector<int>> cycle_types(const std::vector<ConjClass<Perm>>& cs) {
  std::multiset<std::vector<int>> out;
  for (const auto& c : cs) out.insert(c.representative.cycle_type());
  return out;
}

}  // namespace

TEST_CASE("defect-zero classes") {
  CHECK(defect_zero_classes(named_group("C2")->group).empty());
  const auto w = defect_zero_classes(named_group("wr(S3,S3)")->group);
  REQUIRE(w.size() == 1);
  CHECK(w[0].representative.cycle_type() == std::vector<int>{9});
  const auto a7 = defect_zero_classes(named_group("A7")->group);
  CHECK(cycle_types(a7) == std::multiset<std::vector<int>>{{3, 3}, {5}, {7}, {7}});
  for (const auto& c : a7) CHECK(c.centralizer_order % 2 == 1);
}

TEST_CASE("Robinson matrix: A7") {
  const auto& g = named_group("A7")->group;
  const auto d = robinson_matrix(g);
  CHECK(d.y.size() == 4);
  CHECK(d.x.size() == 33);
  const auto n = d.n.to_rows();
  CHECK(n == oracle_n(g, d));
  for (const auto& row : oracle::gram(n))
    for (int v : row) CHECK(v % 2 == 0);
  CHECK(d.rank == 0);
}

TEST_CASE("Robinson matrix: S7, S5, S3 wr S3") {
  const auto& s7 = named_group("S7")->group;
  const auto d7 = robinson_matrix(s7);
  CHECK(d7.y.size() == 1);
  CHECK(d7.x.size() == 10);
  CHECK(d7.rank == 0);
  CHECK(d7.n.to_rows() == oracle_n(s7, d7));

  const auto& s5 = named_group("S5")->group;
  const auto d5 = robinson_matrix(s5);
  CHECK(d5.n.to_rows() == std::vector<std::vector<int>>{{0}});
  CHECK(d5.n.to_rows() == oracle_n(s5, d5));

  const auto& w = named_group("wr(S3,S3)")->group;
  const auto dw = robinson_matrix(w);
  CHECK(dw.n.to_rows() == std::vector<std::vector<int>>{{1}});
  CHECK(dw.n.to_rows() == oracle_n(w, dw));
}

TEST_CASE("Robinson rank agrees with an independent GF(2) elimination") {
  for (const auto& spec : props::table_specs()) {
    const auto d = robinson_matrix(named_group(spec)->group);
    CHECK_MESSAGE(d.rank == oracle::gf2_rank(oracle::gram(d.n.to_rows())), spec);
    CHECK(d.rank <= d.bound);
  }
}

TEST_CASE("trivial group convention") {
  const auto d = defect_zero_block_count(named_group("1")->group);
  CHECK(d.count == 1);
}

TEST_CASE("normal 2-complement shortcut") {
  CHECK(two_complement_shortcut(named_group("S3")->group) == 1);
  CHECK(two_complement_shortcut(named_group("dih(C3xC3)")->group) == 4);
  CHECK_FALSE(two_complement_shortcut(named_group("A7")->group).has_value());
}

TEST_CASE("property: shortcut agrees with the matrix on every normal 2-complement group") {
  std::size_t seen = 0;
  for (const auto& spec : props::table_specs()) {
    const auto& g = named_group(spec)->group;
    if (const auto sc = two_complement_shortcut(g)) {
      ++seen;
      CHECK_MESSAGE(*sc == defect_zero_block_count(g).count, spec);
    }
  }
  CHECK(seen == 6);
}

TEST_CASE("property: odd-core lower bound") {
  for (const auto& spec : props::table_specs()) {
    const auto& g = named_group(spec)->group;
    CHECK_MESSAGE(defect_zero_block_count(g).count >= odd_core_defect_zero_classes(g), spec);
  }
}

TEST_CASE("property: multiplicativity on direct products") {
  auto z = [](const char* s) { return defect_zero_block_count(named_group(s)->group).count; };
  CHECK(z("x(S3,S3)") == z("S3") * z("S3"));
  CHECK(z("x(S3,wr(S3,C2))") == z("S3") * z("wr(S3,C2)"));
}

TEST_CASE("property: rank is invariant under 20 randomized choices") {
  std::uint64_t seed = 1;
  for (const auto& spec : props::table_specs()) {
    const auto inv = props::robinson_invariance(spec, 20, seed++);
    CHECK_MESSAGE(inv.ok, spec);
    CHECK(inv.ranks.size() == 20);
  }
}
