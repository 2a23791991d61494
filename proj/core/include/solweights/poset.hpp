#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "solweights/fusion_data.hpp"
#include "solweights/linalg.hpp"
#include "solweights/report.hpp"

namespace solw {

/// Chains X_0 < ... < X_n of classes, one chain class per class-sequence.
struct ChainPoset {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> less;        // transitive closure of the covers
  std::vector<std::vector<std::size_t>> chains;  // ordered by length, then lexicographically
  std::map<std::vector<std::size_t>, std::size_t> index;

  std::size_t length(std::size_t c) const { return chains[c].size() - 1; }
  std::size_t max_length() const;
  std::size_t label_index(const std::string& label) const;
  std::size_t chain(const std::vector<std::string>& seq) const;
  std::string chain_name(std::size_t c) const;
};

/// covers are (lower, upper) pairs. Throws CyclicInput.
ChainPoset build_chain_poset(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::size_t, std::size_t>>& covers);
ChainPoset chain_poset_of(const HasseDiagram& h);

/// Covariant functor from chain classes to F_p-vector spaces. Face maps not
/// given explicitly are zero when either end is zero, and missing otherwise.
class ChainPosetFunctor {
 public:
  ChainPosetFunctor(ChainPoset poset, unsigned p);
  static ChainPosetFunctor constant(ChainPoset poset, unsigned p);

  const ChainPoset& poset() const { return poset_; }
  unsigned prime() const { return p_; }
  std::size_t dim(std::size_t c) const { return dims_[c]; }

  void set_dim(std::size_t c, std::size_t d);
  void set_dim(const std::vector<std::string>& seq, std::size_t d) { set_dim(poset_.chain(seq), d); }
  /// Map F(face) -> F(chain) acting on column vectors (dim(chain) x dim(face)).
  void set_map(std::size_t face, std::size_t chain, FpMatrix m);
  void set_map(const std::vector<std::string>& face, const std::vector<std::string>& chain, FpMatrix m) {
    set_map(poset_.chain(face), poset_.chain(chain), std::move(m));
  }
  /// Throws NotAFunctor when a needed map was not supplied.
  FpMatrix face_map(std::size_t face, std::size_t chain) const;
  bool has_map(std::size_t face, std::size_t chain) const { return maps_.count({face, chain}) > 0; }

  /// Every map present with the right shape and every pair of routes through
  /// codimension-one faces agreeing. Throws NotAFunctor.
  void validate() const;

 private:
  ChainPoset poset_;
  unsigned p_;
  std::vector<std::size_t> dims_;
  std::map<std::pair<std::size_t, std::size_t>, FpMatrix> maps_;
};

/// delta^n : C^n -> C^(n+1), alternating sum over all faces.
FpMatrix coboundary(const ChainPosetFunctor& f, std::size_t n);

struct CochainCohomology {
  std::vector<std::size_t> cochain_dims;  // dim C^n
  std::vector<std::size_t> h;             // dim H^n
  bool delta_squared_zero = true;
};

CochainCohomology cochain_cohomology(const ChainPosetFunctor& f, std::size_t max_degree);

struct VanishingCriterion {
  char criterion = 'a';
  std::string x1, x2, y;  // for (b)
};

std::optional<VanishingCriterion> vanishing_criteria(const ChainPosetFunctor& f);

struct LimResult {
  unsigned l = 0;
  std::optional<VanishingCriterion> criterion;
  std::vector<std::pair<std::string, std::string>> singleton_values;  // label, value of A^2
  std::vector<std::string> maps;
  std::size_t lim_dim = 0;
  std::vector<std::string> caveats;
  Report report;
};

nlohmann::json to_json(const LimResult& r);

/// lim over the centric radical chain poset of A^2 = H^2(Out_F(-), k^x).
/// Throws MissingCertificate when some H^2 value cannot be certified.
LimResult verify_lim_A2(unsigned l);

}  // namespace solw
