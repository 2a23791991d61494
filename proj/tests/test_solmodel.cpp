#include <doctest.h>

#include <set>

#include "solweights/solmodel.hpp"
#include "solweights/robinson.hpp"
#include "solweights/structure.hpp"
#include "support/oracles.hpp"

using namespace solw;

namespace {

// Q8-subgroups of a group given by its elements: pairs of non-commuting
// elements of order 4 with equal squares generate Q8.
template <class E>
std::size_t count_q8(const std::vector<E>& elems, const E& id) {
  std::set<std::set<E>> found;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (a * a == id || (a * a) * (a * a) != id || a * a != b * b || a * b == b * a) continue;
      const auto span = oracle::closure(id, std::vector<E>{a, b});
      if (span.size() == 8) found.insert(std::set<E>(span.begin(), span.end()));
    }
  return found.size();
}

}  // namespace

TEST_CASE("quaternion suite passes for l = 1, 2, 3") {
  for (unsigned l = 1; l <= 3; ++l) {
    const auto r = verify_quaternion_lemma(l);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, "l=", l, " ", c.name, ": ", c.computed);
    const auto fr = sl2_with_quaternion_frame(l);
    CHECK(count_q8(fr.r.elements(), Mat2::identity(fr.tower.fq2.get())) == (std::size_t{1} << l));
  }
}

TEST_CASE("sectional rank of C2 x D8 is 3") {
  // C2 on {0,1}, D8 on the square {2,3,4,5}
  const auto g = PermGroup::generate(Perm(6), {Perm::from_cycles(6, {{0, 1}}), Perm::from_cycles(6, {{2, 3, 4, 5}}),
                                               Perm::from_cycles(6, {{3, 5}})});
  REQUIRE(g.order() == 16);
  CHECK(sectional_rank_small_2group(g) == 3);
  // elementary abelian of rank 4
  const auto e = PermGroup::generate(Perm(8), {Perm::from_cycles(8, {{0, 1}}), Perm::from_cycles(8, {{2, 3}}),
                                               Perm::from_cycles(8, {{4, 5}}), Perm::from_cycles(8, {{6, 7}})});
  CHECK(sectional_rank_small_2group(e) == 4);
}

TEST_CASE("Sol model l = 0: marked elements") {
  const auto m = build_sol_model(0);
  CHECK(m.s.order() == 1024);
  CHECK(m.r0.order() == 256);
  CHECK(m.k_order == 120ULL * 120 * 120 * 6);
  CHECK(m.k_order == 10368000);
  // [-1,-1,1] and [1,1,-1] are one element of K
  CHECK(m.minus_one[0] * m.minus_one[1] == m.minus_one[2]);
  CHECK(m.z == m.minus_one[2]);
  CHECK((m.d * m.d).is_identity());
  CHECK(m.d * m.tau == m.tau * m.d);
  CHECK(m.tau_prime == m.d * m.tau);
  CHECK(m.zg.order() == 2);
  CHECK(m.s.center().order() == 2);
  CHECK(m.s.center().contains(m.z));
  for (const auto& t : m.t.elements()) CHECK(oracle::conj(t, m.d) == t.inverse());
  CHECK(m.t.order() == 64);
}
