#include "solweights/cohomology.hpp"

#include <map>
#include <unordered_map>

#include "solweights/structure.hpp"

namespace solw {

const char* to_string(H2Path path) {
  switch (path) {
    case H2Path::kCyclicSylowVanishing: return "cyclic-sylow-vanishing";
    case H2Path::kElementaryAbelianInvariants: return "elementary-abelian-invariants";
    case H2Path::kWreathNakaoka: return "wreath-nakaoka";
    case H2Path::kThreeTermVanishing: return "three-term-vanishing";
    case H2Path::kKunneth: return "kunneth";
  }
  return "?";
}

bool is_p_perfect(const PermGroup& g, unsigned p) { return h1_dim(g, p) == 0; }

std::size_t h1_dim(const PermGroup& g, unsigned p) {
  std::size_t n = 0;
  for (const auto q : abelian_invariants(g))
    if (q % p == 0) ++n;
  return n;
}

FpMatrix exterior_square(const FpMatrix& a) {
  const std::size_t r = a.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  FpMatrix out(a.prime(), pairs.size(), pairs.size());
  for (std::size_t u = 0; u < pairs.size(); ++u) {
    const auto [i, j] = pairs[u];
    for (std::size_t v = 0; v < pairs.size(); ++v) {
      const auto [k, l] = pairs[v];
      out.set(u, v, static_cast<long>(a(i, k)) * a(j, l) - static_cast<long>(a(i, l)) * a(j, k));
    }
  }
  return out;
}

FpMatrix h2_elementary_action(const FpMatrix& a) {
  const FpMatrix ext = exterior_square(a);
  const std::size_t r = a.rows(), e = ext.rows();
  FpMatrix out(a.prime(), r + e, r + e);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) out.set(r + i, r + j, ext(i, j));
  return out;
}

std::vector<std::string> h2_elementary_coordinates(std::size_t rank) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back("y" + std::to_string(i + 1));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) out.push_back("x" + std::to_string(i + 1) + "x" + std::to_string(j + 1));
  return out;
}

FpMatrix common_fixed_points(unsigned p, std::size_t dim, const std::vector<FpMatrix>& actions) {
  // v M = v for all M  <=>  (M - I)^T v^T = 0.
  FpMatrix stacked(p, 0, dim);
  const FpMatrix id = FpMatrix::identity(p, dim);
  for (const auto& m : actions) stacked = stacked.vstack((m - id).transpose());
  if (stacked.rows() == 0) return id;
  return stacked.nullspace();
}

namespace {

/// Coordinates of every element of the elementary abelian group spanned by basis.
std::unordered_map<Perm, std::vector<long>> coordinate_table(const std::vector<Perm>& basis, unsigned p) {
  std::unordered_map<Perm, std::vector<long>> table;
  const std::size_t r = basis.size();
  std::vector<long> c(r, 0);
  const Perm id(basis.front().degree());
  while (true) {
    Perm x = id;
    for (std::size_t i = 0; i < r; ++i) x = x * basis[i].pow(c[i]);
    table.emplace(std::move(x), c);
    std::size_t i = 0;
    while (i < r && ++c[i] == static_cast<long>(p)) c[i++] = 0;
    if (i == r) break;
  }
  if (table.size() != [&] {
        std::size_t n = 1;
        for (std::size_t i = 0; i < r; ++i) n *= p;
        return n;
      }())
    throw UnsupportedSylow("basis elements are not independent");
  return table;
}

std::string kx_for(std::size_t dim, unsigned p) {
  if (dim == 0) return "0";
  std::string s = "C" + std::to_string(p);
  if (dim > 1) s += "^" + std::to_string(dim);
  return s;
}

bool is_elementary_abelian(const PermGroup& s, unsigned p) {
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].pow(p).is_identity()) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  }
  return true;
}

std::size_t log_p(std::uint64_t n, unsigned p) {
  std::size_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

FpMatrix conjugation_matrix(const std::vector<Perm>& basis, unsigned p, const Perm& g) {
  const auto table = coordinate_table(basis, p);
  const std::size_t r = basis.size();
  FpMatrix a(p, r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto it = table.find(conj(basis[j], g));
    if (it == table.end()) throw DoesNotNormalize("element does not normalize the elementary abelian subgroup");
    for (std::size_t i = 0; i < r; ++i) a.set(i, j, it->second[i]);
  }
  return a;
}

H2Certificate h2_abelian_sylow(const PermGroup& g, unsigned p, const std::string& name, const std::vector<Perm>& basis,
                               const std::optional<std::vector<Perm>>& aut_generators) {
  H2Certificate cert;
  cert.group = name;
  cert.prime = p;
  const std::uint64_t pp = p_part(g.order(), p);
  PermGroup s = basis.empty() ? g.sylow(p) : subgroup(g, basis);
  if (s.order() != pp || !is_subgroup_of(s, g)) throw UnsupportedSylow("supplied basis does not span a Sylow subgroup");
  const bool perfect = is_p_perfect(g, p);
  const auto n = normalizer_in(g, s);
  const std::vector<Perm>& acting = aut_generators ? *aut_generators : n.generators();
  for (const auto& a : acting)
    if (!n.contains(a)) throw DoesNotNormalize("automorphism generator outside N_G(P)");
  const auto aut = induced_outer_automorphisms(acting, s);
  cert.trace.push_back("|N_G(P)| = " + std::to_string(n.order()) + ", |Aut_G(P)| = " + std::to_string(aut.out.order()));

  // Cyclic Sylow subgroup (including the trivial one).
  const Perm* gen = nullptr;
  for (const auto& c : s.elements())
    if (c.order() == s.order()) {
      gen = &c;
      break;
    }
  if (gen != nullptr || s.order() == 1) {
    cert.path = H2Path::kCyclicSylowVanishing;
    cert.coordinates = {"y"};
    bool fixed = true;
    if (s.order() > 1) {
      for (const auto& a : acting) {
        // v^a = v^k; H^1 and H^2 of a cyclic p-group scale by k.
        const Perm img = conj(*gen, a);
        std::uint64_t k = 1;
        for (Perm y = *gen; !(y == img); y = y * *gen) ++k;
        if (k % p != 1) fixed = false;
      }
    }
    cert.dim = (s.order() > 1 && fixed) ? 1 : 0;
    if (cert.dim) cert.invariant_vectors.push_back({1});
    if (perfect) cert.trace.push_back("p-perfect with cyclic Sylow subgroup: H^2 vanishes");
    cert.kx_conclusion = perfect ? kx_for(cert.dim, p) : "undetermined";
    return cert;
  }

  if (!is_elementary_abelian(s, p)) throw UnsupportedSylow("Sylow subgroup is neither cyclic nor elementary abelian");
  const std::size_t rank = log_p(s.order(), p);
  if (rank > 3) throw UnsupportedSylow("elementary abelian Sylow subgroup of rank > 3");
  std::vector<Perm> b = basis.empty() ? s.generators() : basis;
  if (b.size() != rank) b = FiniteGroup<Perm>::from_elements(s.identity(), s.elements()).generators();
  cert.path = H2Path::kElementaryAbelianInvariants;
  cert.coordinates = h2_elementary_coordinates(rank);
  std::vector<FpMatrix> actions;
  bool all_det_one = true;
  for (const auto& a : acting) {
    const FpMatrix m = conjugation_matrix(b, p, a);
    if (m.determinant() != 1) all_det_one = false;
    actions.push_back(h2_elementary_action(m));
  }
  const FpMatrix inv = common_fixed_points(p, cert.coordinates.size(), actions);
  cert.dim = inv.rows();
  cert.invariant_vectors = inv.to_rows();
  if (rank == 2)
    cert.trace.push_back(std::string("rank 2: Aut_G(V) ") + (all_det_one ? "inside" : "not inside") + " SL(V)");
  if (perfect) {
    cert.trace.push_back("restriction to P is injective on the p-part; M(P) has exponent p");
    cert.kx_conclusion = kx_for(cert.dim, p);
    if (cert.dim > 0 && (g.order() % (std::uint64_t{p} * p) == 0))
      cert.trace.push_back("Schur bound check: " + std::to_string(p * p) + " divides " + std::to_string(g.order()));
  }
  return cert;
}

std::size_t h1_cyclic_by_cocycles(const FpMatrix& a) {
  const unsigned p = a.prime();
  const std::size_t r = a.rows();
  const FpMatrix id = FpMatrix::identity(p, r);
  const FpMatrix norm = id + a + a * a;
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= p;
  // A 1-cocycle on <sigma> is determined by m = f(sigma) with m (1 + a + a^2) = 0.
  std::size_t cocycles = 0;
  std::map<std::vector<unsigned>, int> coboundaries;
  for (std::size_t code = 0; code < total; ++code) {
    FpMatrix v(p, 1, r);
    std::size_t c = code;
    for (std::size_t i = 0; i < r; ++i, c /= p) v.set(0, i, static_cast<long>(c % p));
    if ((v * norm).is_zero()) ++cocycles;
    coboundaries[(v * (a - id)).to_rows().front()] = 1;
  }
  std::size_t dim = 0;
  for (std::size_t q = cocycles / coboundaries.size(); q > 1; q /= p) ++dim;
  return dim;
}

H2Certificate h2_wreath_c3(const PermGroup& g, const WreathC3Frame& frame, const std::string& name) {
  constexpr unsigned p = 3;
  H2Certificate cert;
  cert.group = name;
  cert.prime = p;
  cert.path = H2Path::kWreathNakaoka;
  if (frame.base_basis.size() != 3) throw WrongSylowShape("wreath frame needs a rank-3 base");
  std::vector<Perm> wgens = frame.base_basis;
  wgens.push_back(frame.sigma);
  const auto w = subgroup(g, wgens);
  const auto w0 = subgroup(g, frame.base_basis);
  if (w.order() != 81 || w.order() != p_part(g.order(), 3) || w0.order() != 27)
    throw WrongSylowShape("Sylow 3-subgroup is not C3 wr C3 with the given base");
  if (!is_normal(g, w)) throw WrongSylowShape("Sylow 3-subgroup is not normal");
  if (!is_normal(w, w0)) throw WrongSylowShape("base is not normal in the Sylow subgroup");
  const FpMatrix a_sigma = conjugation_matrix(frame.base_basis, p, frame.sigma);

  // Summand 1: H^2(W0)^<sigma>.
  const FpMatrix s1 = common_fixed_points(p, 6, {h2_elementary_action(a_sigma)});
  // Summand 2: H^1(C3, H^1(W0)) by explicit cocycles.
  const std::size_t s2 = h1_cyclic_by_cocycles(a_sigma);
  // Summand 3: H^2(C3, F_3) is one-dimensional.
  cert.trace.push_back("Nakaoka summands: " + std::to_string(s1.rows()) + " + " + std::to_string(s2) + " + 1");
  if (s2 != 0) throw WrongSylowShape("middle Nakaoka term does not vanish");

  // Coordinates: the summand-1 invariants in the basis found, then H^2(C3).
  const std::size_t d1 = s1.rows();
  const std::size_t dim = d1 + 1;
  std::vector<FpMatrix> actions;
  for (const auto& o : frame.outer) {
    if (!normalizes(o, w0) || !normalizes(o, w)) throw WrongSylowShape("outer generator does not normalize the frame");
    const FpMatrix a = h2_elementary_action(conjugation_matrix(frame.base_basis, p, o));
    // Express the image of each summand-1 basis vector in that basis.
    const FpMatrix img = s1 * a;
    FpMatrix act(p, dim, dim);
    for (std::size_t i = 0; i < d1; ++i) {
      // Solve c s1 = img_i; s1 is in reduced echelon form.
      for (std::size_t k = 0; k < d1; ++k) {
        std::size_t pivot = 0;
        while (s1(k, pivot) == 0) ++pivot;
        act.set(i, k, img(i, pivot));
      }
    }
    // sigma^o = sigma^k modulo W0; H^2(C3) scales by k.
    const Perm so = conj(frame.sigma, o);
    long k = 0;
    for (long e = 1; e <= 2 && k == 0; ++e)
      if (w0.contains(so * frame.sigma.pow(e).inverse())) k = e;
    if (k == 0) throw WrongSylowShape("outer generator does not normalize <sigma> W0");
    act.set(d1, d1, k);
    actions.push_back(act);
  }
  const FpMatrix inv = common_fixed_points(p, dim, actions);
  cert.dim = inv.rows();
  cert.invariant_vectors = inv.to_rows();
  for (std::size_t i = 0; i < d1; ++i) cert.coordinates.push_back("H2(W0)^C3[" + std::to_string(i) + "]");
  cert.coordinates.push_back("H2(C3)");
  if (is_p_perfect(g, p)) {
    cert.kx_conclusion = cert.dim == 0 ? "0" : "undetermined";
  }
  return cert;
}

namespace {

/// dim H^2(G, F_p) through the cyclic or elementary abelian paths only.
std::size_t h2_dim_abelian(const PermGroup& g, unsigned p) {
  try {
    return h2_abelian_sylow(g, p).dim;
  } catch (const UnsupportedSylow& e) {
    throw Inconclusive(std::string("no depth-1 path for H^2: ") + e.what());
  }
}

}  // namespace

H2Certificate three_term_vanishing(const PermGroup& g, const PermGroup& n, unsigned p, const std::string& name) {
  H2Certificate cert;
  cert.group = name;
  cert.prime = p;
  cert.path = H2Path::kThreeTermVanishing;
  if (!is_subgroup_of(n, g) || !is_normal(g, n)) throw NotNormal("three-term: N is not normal in G");
  const std::size_t h2n = h2_dim_abelian(n, p);
  cert.trace.push_back("dim H^2(N) = " + std::to_string(h2n));
  if (h2n != 0) throw Inconclusive("H^0(G/N, H^2(N)) not shown to vanish");
  const std::size_t h1n = h1_dim(n, p);
  cert.trace.push_back("dim H^1(N) = " + std::to_string(h1n));
  if (h1n != 0) throw Inconclusive("H^1(G/N, H^1(N)) not shown to vanish");
  const auto q = quotient_group(g, n).group;
  const std::size_t h2q = q.order() == 1 ? 0 : h2_dim_abelian(q, p);
  cert.trace.push_back("dim H^2(G/N) = " + std::to_string(h2q));
  if (h2q != 0) throw Inconclusive("H^2(G/N) does not vanish");
  cert.dim = 0;
  if (is_p_perfect(g, p)) cert.kx_conclusion = "0";
  return cert;
}

H2Certificate h2_certificate(const NamedGroup& ng, unsigned p) {
  const auto& g = ng.group;
  const auto& s = g.sylow(p);
  const bool cyclic = [&] {
    for (const auto& c : s.classes())
      if (c.element_order == s.order()) return true;
    return false;
  }();
  if (cyclic || (is_elementary_abelian(s, p) && log_p(s.order(), p) <= 3)) {
    std::vector<Perm> basis;
    if (!ng.sylow_basis.empty() && ng.sylow_basis.front().pow(p).is_identity() &&
        subgroup(g, ng.sylow_basis).order() == s.order())
      basis = ng.sylow_basis;
    return h2_abelian_sylow(g, p, ng.spec, basis);
  }
  if (ng.wreath_c3 && p == 3) return h2_wreath_c3(g, *ng.wreath_c3, ng.spec);
  if (ng.kind == NamedGroup::Kind::kDirect) {
    const auto& a = *ng.factors[0];
    const auto& b = *ng.factors[1];
    if (!is_p_perfect(a.group, p) || !is_p_perfect(b.group, p))
      throw UnsupportedSylow("Kunneth path needs p-perfect factors");
    const auto ca = h2_certificate(a, p);
    const auto cb = h2_certificate(b, p);
    H2Certificate cert;
    cert.group = ng.spec;
    cert.prime = p;
    cert.path = H2Path::kKunneth;
    cert.dim = ca.dim + cb.dim;
    cert.trace.push_back(a.spec + ": " + std::to_string(ca.dim) + " via " + to_string(ca.path));
    cert.trace.push_back(b.spec + ": " + std::to_string(cb.dim) + " via " + to_string(cb.path));
    if (ca.kx_conclusion != "undetermined" && cb.kx_conclusion != "undetermined") cert.kx_conclusion = kx_for(cert.dim, p);
    return cert;
  }
  if (ng.kind == NamedGroup::Kind::kWreath) {
    const auto base = subgroup(g, ng.component_generators[0]);
    return three_term_vanishing(g, base, p, ng.spec);
  }
  throw UnsupportedSylow("no H^2 path applies to " + ng.spec + " at p = " + std::to_string(p));
}

OddMultiplier odd_h2_kx(const NamedGroup& g) {
  OddMultiplier out;
  out.group = g.spec;
  std::vector<std::string> parts;
  bool undetermined = false;
  for (const auto& [p, e] : detail::factorize(g.group.order())) {
    if (p == 2) continue;
    auto cert = h2_certificate(g, static_cast<unsigned>(p));
    if (cert.kx_conclusion == "undetermined") undetermined = true;
    else if (cert.kx_conclusion != "0") parts.push_back(cert.kx_conclusion);
    out.per_prime.push_back(std::move(cert));
  }
  if (undetermined) {
    out.conclusion = "undetermined";
  } else if (parts.empty()) {
    out.conclusion = "0";
  } else {
    out.conclusion = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out.conclusion += " x " + parts[i];
  }
  return out;
}

nlohmann::json to_json(const H2Certificate& c) {
  return {{"group", c.group},
          {"prime", c.prime},
          {"dim", c.dim},
          {"path", to_string(c.path)},
          {"coordinates", c.coordinates},
          {"invariant_vectors", c.invariant_vectors},
          {"kx_conclusion", c.kx_conclusion},
          {"trace", c.trace}};
}

nlohmann::json to_json(const OddMultiplier& m) {
  nlohmann::json j{{"group", m.group}, {"conclusion", m.conclusion}, {"per_prime", nlohmann::json::array()}};
  for (const auto& c : m.per_prime) j["per_prime"].push_back(to_json(c));
  return j;
}

}  // namespace solw
