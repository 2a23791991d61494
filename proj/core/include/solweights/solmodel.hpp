#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "solweights/group.hpp"
#include "solweights/kelement.hpp"
#include "solweights/report.hpp"
#include "solweights/zoo.hpp"

namespace solw {

using KGroup = FiniteGroup<KElem>;

/// The group K for q = 5^(2^l) as generators only, together with the Sylow
/// 2-subgroup S and the marked 2-local subgroups, all enumerated.
struct SolModel {
  unsigned l = 0;
  QuaternionFrame frame;  // owns the fields
  const Field* f = nullptr;

  KElem one, z, d, tau, tau_prime, c_diag, three_cycle;
  std::array<KElem, 3> minus_one;  // [-1,1,1], [1,-1,1], [1,1,-1]

  std::vector<KElem> k_generators;  // L_1 frame, tau, the 3-cycle, [c,c,c]
  std::uint64_t k_order = 0;        // closed form |SL_2(q)|^3 * 6

  std::array<std::vector<KElem>, 3> l_frames;  // SL_2(q) generators in slot i
  std::array<KGroup, 3> r, q, q_prime;
  KGroup r0, s, t, zg, u, e, a;
};

/// m placed in slot i, identity elsewhere.
KElem in_slot(int i, const Mat2& m);
KElem diagonal(const Mat2& a, const Mat2& b, const Mat2& c);

/// l in {0, 1}.
SolModel build_sol_model(unsigned l);

/// Structure of R = <x, y> and its Q8-subgroups for 1 <= l <= 3.
Report verify_quaternion_lemma(unsigned l);

Report verify_torus_sequence(const SolModel& m);

struct SectionalRankCertificate {
  unsigned lower = 0;  // rank of R_0 / Phi(R_0)
  unsigned upper = 0;  // s(T) + s(S/T)
  unsigned s_t = 0;
  unsigned s_quotient = 0;
  Report report;
};

/// l = 0 only.
SectionalRankCertificate sectional_rank_certificate(const SolModel& m);

/// Sectional rank of a 2-group by scanning all subgroups H and taking the
/// largest rank of H / Phi(H). Order at most 64.
unsigned sectional_rank_small_2group(const FiniteGroup<Perm>& g);

/// Subgroups of the l = 0 model: Out_K(P) for S, Q, QR, QR*, C_S(U).
Report verify_k_radicals_l0(const SolModel& m);

/// l = 1 spot checks, including the non-radical witness.
Report spotcheck_l1(const SolModel& m);

}  // namespace solw
