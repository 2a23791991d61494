#include <doctest.h>

#include <random>

#include "solweights/cohomology.hpp"
#include "solweights/zoo.hpp"

using namespace solw;

namespace {

const PermGroup& G(const char* spec) { return named_group(spec)->group; }

// A basis of an elementary abelian group of order p^2.
std::vector<Perm> rank2_basis(const PermGroup& v) {
  Perm a;
  for (const auto& x : v.elements())
    if (!x.is_identity()) {
      a = x;
      break;
    }
  const auto ca = subgroup(v, {a});
  for (const auto& x : v.elements())
    if (!ca.contains(x)) return {a, x};
  return {a};
}

}  // namespace

TEST_CASE("p-perfect and H^1") {
  CHECK(is_p_perfect(G("A7"), 3));
  CHECK(is_p_perfect(G("S3"), 3));
  CHECK_FALSE(is_p_perfect(G("C3"), 3));
  CHECK(h1_dim(G("x(C3,C3)"), 3) == 2);
  CHECK(h1_dim(G("wr(S3,C2)"), 3) == 0);
  CHECK(h1_dim(G("S7"), 2) == 1);
}

TEST_CASE("H^2 at p = 3 for the table groups") {
  struct Want {
    const char* spec;
    std::size_t dim;
    H2Path path;
  };
  const std::vector<Want> want{
      {"S6", 0, H2Path::kElementaryAbelianInvariants},     {"S7", 0, H2Path::kElementaryAbelianInvariants},
      {"GL(4,2)", 0, H2Path::kElementaryAbelianInvariants}, {"x(S3,S3)", 0, H2Path::kElementaryAbelianInvariants},
      {"wr(S3,C2)", 0, H2Path::kElementaryAbelianInvariants}, {"S5", 0, H2Path::kCyclicSylowVanishing},
      {"GL(3,2)", 0, H2Path::kCyclicSylowVanishing},       {"wr(S3,S3)", 0, H2Path::kThreeTermVanishing},
      {"m324", 0, H2Path::kWreathNakaoka},                 {"A7", 1, H2Path::kElementaryAbelianInvariants},
      {"dih(C3xC3)", 1, H2Path::kElementaryAbelianInvariants}, {"m108", 1, H2Path::kElementaryAbelianInvariants},
  };
  for (const auto& w : want) {
    const auto c = h2_certificate(*named_group(w.spec), 3);
    CHECK_MESSAGE(c.dim == w.dim, w.spec);
    CHECK_MESSAGE(c.path == w.path, w.spec);
  }
}

TEST_CASE("m108 invariants are spanned by x1x3 + x2x3") {
  const auto c = h2_certificate(*named_group("m108"), 3);
  REQUIRE(c.invariant_vectors.size() == 1);
  std::vector<std::string> support;
  for (std::size_t i = 0; i < c.coordinates.size(); ++i)
    if (c.invariant_vectors[0][i] != 0) {
      support.push_back(c.coordinates[i]);
      CHECK(c.invariant_vectors[0][i] == c.invariant_vectors[0][4]);
    }
  CHECK(support == std::vector<std::string>{"x1x3", "x2x3"});
}

TEST_CASE("odd multipliers") {
  CHECK(odd_h2_kx(*named_group("dih(C3xC3)")).conclusion == "C3");
  CHECK(odd_h2_kx(*named_group("A7")).conclusion == "C3");
  for (const char* spec : {"wr(S3,S3)", "wr(S3,C2)", "x(S3,S3)", "S3", "S5", "S6", "S7", "GL(3,2)", "GL(4,2)"})
    CHECK_MESSAGE(odd_h2_kx(*named_group(spec)).conclusion == "0", spec);
}

TEST_CASE("primes >= 5 go through the cyclic path") {
  for (const char* spec : {"S5", "S6", "S7", "A7", "GL(3,2)", "GL(4,2)"}) {
    const auto& g = G(spec);
    for (unsigned p : {5u, 7u}) {
      if (g.order() % p) continue;
      const auto c = h2_certificate(*named_group(spec), p);
      CHECK(c.path == H2Path::kCyclicSylowVanishing);
      CHECK(c.dim == 0);
    }
  }
}

TEST_CASE("Nakaoka: C3 wr C3 with trivial outer action") {
  const auto w = named_group("wr(C3,C3)");
  REQUIRE(w->wreath_c3.has_value());
  const auto c = h2_wreath_c3(w->group, *w->wreath_c3, "wr(C3,C3)");
  CHECK(c.dim == 3);
  CHECK(h2_wreath_c3(G("m324"), *named_group("m324")->wreath_c3).dim == 0);
  CHECK_THROWS_AS(h2_wreath_c3(G("S6"), *w->wreath_c3), Error);
}

TEST_CASE("Nakaoka middle term: explicit 1-cocycles vanish") {
  // cyclic shift of the three coordinates
  const auto a = FpMatrix::from_rows(3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  CHECK(h1_cyclic_by_cocycles(a) == 0);
}

TEST_CASE("three-term vanishing") {
  const auto w = named_group("wr(S3,S3)");
  const auto base = subgroup(w->group, w->component_generators[0]);
  CHECK(three_term_vanishing(w->group, base, 3).dim == 0);
  const auto x = named_group("x(S3,S3)");
  const auto factor = subgroup(x->group, x->component_generators[0]);
  CHECK(three_term_vanishing(x->group, factor, 3).dim == 0);
  CHECK(three_term_vanishing(G("S5"), G("S5"), 3).dim == 0);
  // C3 x C3 over one factor: H^1(G/N, H^1(N)) does not vanish
  const auto c = named_group("x(C3,C3)");
  CHECK_THROWS_AS(three_term_vanishing(c->group, subgroup(c->group, c->component_generators[0]), 3), Inconclusive);
}

TEST_CASE("Kunneth consistency") {
  auto dim = [](const char* s) { return h2_certificate(*named_group(s), 3).dim; };
  CHECK(dim("x(S3,S3)") == dim("S3") + dim("S3"));
  CHECK(dim("x(S3,x(S3,S3))") == dim("S3") + dim("x(S3,S3)"));
}

TEST_CASE("property: rank-2 fixed points agree with the determinant criterion") {
  for (const char* spec : {"A7", "S6", "S7", "GL(4,2)", "x(S3,S3)", "wr(S3,C2)", "dih(C3xC3)"}) {
    const auto& g = G(spec);
    const auto& v = g.sylow(3);
    REQUIRE(v.order() == 9);
    const auto basis = rank2_basis(v);
    const auto n = normalizer_in(g, v);
    bool in_sl = true;
    for (const auto& a : n.generators()) {
      const auto m = conjugation_matrix(basis, 3, a);
      const long det = (static_cast<long>(m(0, 0)) * m(1, 1) - static_cast<long>(m(0, 1)) * m(1, 0)) % 3;
      if ((det + 3) % 3 != 1) in_sl = false;
    }
    REQUIRE(is_p_perfect(g, 3));
    CHECK_MESSAGE(h2_abelian_sylow(g, 3, spec).dim == (in_sl ? 1u : 0u), spec);
  }
}

TEST_CASE("property: fixed points do not depend on the generators of Aut_G(P)") {
  std::mt19937_64 rng(99);
  for (const char* spec : {"A7", "S6", "m108", "dih(C3xC3)", "x(S3,S3)"}) {
    const auto& g = G(spec);
    const auto& p = g.sylow(3);
    const auto n = normalizer_in(g, p);
    const auto baseline = h2_abelian_sylow(g, 3, spec).dim;
    auto pool = n.elements();
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<Perm> gens;
      for (const auto& x : pool) {
        gens.push_back(x);
        if (subgroup(g, gens).order() == n.order()) break;
      }
      CHECK_MESSAGE(h2_abelian_sylow(g, 3, spec, {}, gens).dim == baseline, spec);
    }
  }
}
