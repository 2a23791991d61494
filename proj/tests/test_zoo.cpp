#include <doctest.h>

#include <random>

#include "solweights/field.hpp"
#include "solweights/structure.hpp"
#include "solweights/zoo.hpp"
#include "support/oracles.hpp"

using namespace solw;

TEST_CASE("field tower: omega has order 2^(l+2)") {
  for (unsigned l = 0; l <= 3; ++l) {
    const auto t = field_tower(l);
    std::uint64_t q = 5;
    for (unsigned i = 0; i < l; ++i) q *= q;
    CHECK(t.fq->size() == q);
    CHECK(t.fq2->size() == q * q);
    const std::uint64_t n = std::uint64_t{1} << (l + 2);
    CHECK(t.fq->pow(t.omega, n) == t.fq->one());
    CHECK(t.fq->pow(t.omega, n / 2) != t.fq->one());
  }
  CHECK(field_tower(0).omega == 2);
}

TEST_CASE("field axioms: exhaustive inverses, sampled ring laws") {
  for (unsigned l = 0; l <= 1; ++l) {
    const auto tower = field_tower(l);
    const auto& f = *tower.fq2;
    for (Field::Elem a = 1; a < f.size(); ++a) CHECK(f.mul(a, f.inv(a)) == f.one());
    std::mt19937_64 rng(l + 11);
    std::uniform_int_distribution<Field::Elem> pick(0, f.size() - 1);
    for (int i = 0; i < 500; ++i) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
    }
  }
}

TEST_CASE("quaternion frame relations") {
  for (unsigned l = 0; l <= 2; ++l) {
    const auto fr = sl2_with_quaternion_frame(l);
    const std::int64_t n = std::int64_t{1} << (l + 2);
    CHECK(fr.x.pow(n).is_identity());
    CHECK(fr.y.pow(4).is_identity());
    CHECK(fr.x.pow(n / 2) == fr.y.pow(2));
    CHECK(fr.y.inverse() * fr.x * fr.y == fr.x.inverse());
    CHECK(fr.c * fr.c == fr.x.inverse());
    CHECK(fr.r.order() == (std::uint64_t{1} << (l + 3)));
  }
  const auto fr = sl2_with_quaternion_frame(1);
  CHECK(fr.sl2_order == 25 * 24 * 26);
  CHECK(fr.sl2_order == 15600);
}

TEST_CASE("registry orders match closed forms") {
  CHECK(named_group("S7")->group.order() == 5040);
  const auto gl4 = named_group("GL(4,2)");
  CHECK(gl4->group.order() == 20160);
  CHECK(gl4->degree == 15);
  const auto w = named_group("wr(S3,S3)");
  CHECK(w->group.order() == 1296);
  CHECK(w->degree == 9);
  CHECK(named_group("wr(S3,C2)")->group.order() == 72);
  for (const char* spec : {"S3", "S5", "S6", "A7", "C6", "D8", "GL(3,2)", "SL2(5)", "quat(8)", "dih(C3xC3)", "m108",
                           "m324", "x(S3,S3)", "x(S3,x(S3,S3))", "wr(C3,C3)", "1"}) {
    const auto g = named_group(spec);
    CHECK_MESSAGE(g->group.order() == g->closed_form_order, spec);
  }
  CHECK_THROWS_AS(named_group("Z7"), UnknownSpec);
  CHECK_THROWS_AS(named_group("wr(S3"), UnknownSpec);
}

TEST_CASE("wreath products") {
  CHECK(compare_groups(named_group("wr(C2,C2)")->group, named_group("D8")->group) == IsoVerdict::kIsomorphic);
  const auto c3c3 = named_group("wr(C3,C3)");
  CHECK(c3c3->group.order() == 81);
  CHECK(exponent(c3c3->group) == 9);
}

TEST_CASE("generalized dihedral group of C3 x C3") {
  const auto& g = named_group("dih(C3xC3)")->group;
  CHECK(g.classes().size() == 6);
  CHECK(oracle::class_sizes(g.elements()) == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 9});
}
