#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "solweights/linalg.hpp"
#include "solweights/robinson.hpp"
#include "solweights/zoo.hpp"

namespace solw {

enum class H2Path {
  kCyclicSylowVanishing,
  kElementaryAbelianInvariants,
  kWreathNakaoka,
  kThreeTermVanishing,
  kKunneth,
};

const char* to_string(H2Path path);

/// Evidence for dim H^2(G, F_p), p odd.
struct H2Certificate {
  std::string group;
  unsigned prime = 3;
  std::size_t dim = 0;
  H2Path path = H2Path::kCyclicSylowVanishing;
  /// Coordinates of a basis of the invariants, in the coordinates named by
  /// `coordinates`.
  std::vector<std::vector<unsigned>> invariant_vectors;
  std::vector<std::string> coordinates;
  /// p-part of H^2(G, k^x): "0", "C3", "C3^2", ... or "undetermined".
  std::string kx_conclusion = "undetermined";
  std::vector<std::string> trace;
};

bool is_p_perfect(const PermGroup& g, unsigned p);
/// p-rank of the abelianization, i.e. dim Hom(G, F_p).
std::size_t h1_dim(const PermGroup& g, unsigned p);

/// Action on Lambda^2 V* of the map f -> f A on row vectors of V*, in the
/// basis x_i ^ x_j (i < j) ordered lexicographically.
FpMatrix exterior_square(const FpMatrix& a);
/// Action on H^2(V, F_p) = V* (Bockstein images) + Lambda^2 V*.
FpMatrix h2_elementary_action(const FpMatrix& a);
/// Basis (rows, reduced echelon form) of the row vectors fixed by every matrix.
FpMatrix common_fixed_points(unsigned p, std::size_t dim, const std::vector<FpMatrix>& actions);
/// Coordinate names y_1..y_r, x_ix_j matching h2_elementary_action.
std::vector<std::string> h2_elementary_coordinates(std::size_t rank);

/// Matrix of v -> v^g on an elementary abelian group with the given basis;
/// column j holds the coordinates of basis[j]^g.
FpMatrix conjugation_matrix(const std::vector<Perm>& basis, unsigned p, const Perm& g);

/// H^2 via stable elements for a cyclic or elementary abelian (rank 2 or 3)
/// Sylow p-subgroup. `basis` overrides the basis of an elementary abelian
/// Sylow subgroup (it must generate one). Throws UnsupportedSylow.
H2Certificate h2_abelian_sylow(const PermGroup& g, unsigned p, const std::string& name = "",
                               const std::vector<Perm>& basis = {},
                               const std::optional<std::vector<Perm>>& aut_generators = std::nullopt);

/// Nakaoka decomposition for a normal Sylow 3-subgroup C3 wr C3 with the
/// given frame, followed by invariants of the outer generators.
/// Throws WrongSylowShape.
H2Certificate h2_wreath_c3(const PermGroup& g, const WreathC3Frame& frame, const std::string& name = "");

/// Explicit 1-cocycle count for H^1(<sigma>, V*) with sigma acting by the
/// matrix a of order 3 on F_3^3; returns its dimension.
std::size_t h1_cyclic_by_cocycles(const FpMatrix& a);

/// Certifies H^2(G, F_p) = 0 from H^0(G/N, H^2(N)), H^1(G/N, H^1(N)) and
/// H^2(G/N, F_p) all vanishing. Throws Inconclusive otherwise.
H2Certificate three_term_vanishing(const PermGroup& g, const PermGroup& n, unsigned p, const std::string& name = "");

/// Dispatches to the applicable path for a registry group.
H2Certificate h2_certificate(const NamedGroup& g, unsigned p);

struct OddMultiplier {
  std::string group;
  std::vector<H2Certificate> per_prime;
  /// Product of the p-parts, "0" when all vanish.
  std::string conclusion;
};

/// Odd part of H^2(G, k^x) prime by prime.
OddMultiplier odd_h2_kx(const NamedGroup& g);

nlohmann::json to_json(const H2Certificate& c);
nlohmann::json to_json(const OddMultiplier& m);

}  // namespace solw
