#include "solweights/poset.hpp"

#include <algorithm>
#include <functional>

#include "solweights/cohomology.hpp"
#include "solweights/zoo.hpp"

namespace solw {

std::size_t ChainPoset::max_length() const {
  std::size_t m = 0;
  for (const auto& c : chains) m = std::max(m, c.size() - 1);
  return m;
}

std::size_t ChainPoset::label_index(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error("unknown poset label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

std::size_t ChainPoset::chain(const std::vector<std::string>& seq) const {
  std::vector<std::size_t> key;
  for (const auto& s : seq) key.push_back(label_index(s));
  const auto it = index.find(key);
  if (it == index.end()) throw Error("not a chain: " + describe(seq));
  return it->second;
}

std::string ChainPoset::chain_name(std::size_t c) const {
  std::string s = "[";
  for (std::size_t i = 0; i < chains[c].size(); ++i) s += (i ? "<" : "") + labels[chains[c][i]];
  return s + "]";
}

ChainPoset build_chain_poset(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  ChainPoset cp;
  cp.labels = labels;
  const std::size_t n = labels.size();
  cp.less.assign(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : covers) {
    if (a >= n || b >= n) throw Error("cover edge out of range");
    if (a == b) throw CyclicInput("self-loop in the cover relation");
    cp.less[a][b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (cp.less[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (cp.less[k][j]) cp.less[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (cp.less[i][i]) throw CyclicInput("cover relation has a cycle through '" + labels[i] + "'");

  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t i = 0; i < n; ++i) layer.push_back({i});
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : layer) {
      cp.index[c] = cp.chains.size();
      cp.chains.push_back(c);
      for (std::size_t j = 0; j < n; ++j)
        if (cp.less[c.back()][j]) {
          auto d = c;
          d.push_back(j);
          next.push_back(std::move(d));
        }
    }
    layer = std::move(next);
  }
  return cp;
}

ChainPoset chain_poset_of(const HasseDiagram& h) {
  std::vector<std::string> labels;
  for (const auto& n : h.nodes) labels.push_back(n.label);
  return build_chain_poset(labels, h.edges);
}

ChainPosetFunctor::ChainPosetFunctor(ChainPoset poset, unsigned p)
    : poset_(std::move(poset)), p_(p), dims_(poset_.chains.size(), 0) {}

ChainPosetFunctor ChainPosetFunctor::constant(ChainPoset poset, unsigned p) {
  ChainPosetFunctor f(std::move(poset), p);
  for (std::size_t c = 0; c < f.dims_.size(); ++c) f.dims_[c] = 1;
  for (std::size_t c = 0; c < f.dims_.size(); ++c) {
    const auto& ch = f.poset_.chains[c];
    if (ch.size() < 2) continue;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      auto face = ch;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      f.maps_[{f.poset_.index.at(face), c}] = FpMatrix::identity(p, 1);
    }
  }
  return f;
}

void ChainPosetFunctor::set_dim(std::size_t c, std::size_t d) { dims_.at(c) = d; }

void ChainPosetFunctor::set_map(std::size_t face, std::size_t chain, FpMatrix m) {
  const auto& big = poset_.chains.at(chain);
  const auto& small = poset_.chains.at(face);
  auto is_face = [&] {
    if (small.size() + 1 != big.size()) return false;
    for (std::size_t i = 0; i < big.size(); ++i) {
      auto f = big;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      if (f == small) return true;
    }
    return false;
  };
  if (!is_face())
    throw NotAFunctor(poset_.chain_name(face) + " is not a face of " + poset_.chain_name(chain));
  maps_[{face, chain}] = std::move(m);
}

FpMatrix ChainPosetFunctor::face_map(std::size_t face, std::size_t chain) const {
  const auto it = maps_.find({face, chain});
  if (it != maps_.end()) return it->second;
  if (dims_[face] == 0 || dims_[chain] == 0) return FpMatrix(p_, dims_[chain], dims_[face]);
  throw NotAFunctor("missing map " + poset_.chain_name(face) + " -> " + poset_.chain_name(chain));
}

void ChainPosetFunctor::validate() const {
  for (const auto& [key, m] : maps_) {
    if (m.rows() != dims_[key.second] || m.cols() != dims_[key.first] || m.prime() != p_)
      throw NotAFunctor("map " + poset_.chain_name(key.first) + " -> " + poset_.chain_name(key.second) +
                        " has the wrong shape");
  }
  for (std::size_t c = 0; c < poset_.chains.size(); ++c) {
    const auto& ch = poset_.chains[c];
    if (ch.size() < 2) continue;
    std::vector<std::size_t> faces;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      auto face = ch;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      faces.push_back(poset_.index.at(face));
      face_map(faces.back(), c);  // presence
    }
    if (ch.size() < 3) continue;
    for (std::size_t i = 0; i < ch.size(); ++i)
      for (std::size_t j = i + 1; j < ch.size(); ++j) {
        auto rho = ch;
        rho.erase(rho.begin() + static_cast<std::ptrdiff_t>(j));
        rho.erase(rho.begin() + static_cast<std::ptrdiff_t>(i));
        const auto r = poset_.index.at(rho);
        const auto via_i = face_map(faces[i], c) * face_map(r, faces[i]);
        const auto via_j = face_map(faces[j], c) * face_map(r, faces[j]);
        if (!(via_i == via_j))
          throw NotAFunctor("routes " + poset_.chain_name(r) + " -> " + poset_.chain_name(c) + " disagree");
      }
  }
}

FpMatrix coboundary(const ChainPosetFunctor& f, std::size_t n) {
  const auto& cp = f.poset();
  std::vector<std::size_t> src_off(cp.chains.size(), 0), dst_off(cp.chains.size(), 0);
  std::size_t src_dim = 0, dst_dim = 0;
  for (std::size_t c = 0; c < cp.chains.size(); ++c) {
    if (cp.length(c) == n) {
      src_off[c] = src_dim;
      src_dim += f.dim(c);
    } else if (cp.length(c) == n + 1) {
      dst_off[c] = dst_dim;
      dst_dim += f.dim(c);
    }
  }
  const unsigned p = f.prime();
  FpMatrix d(p, dst_dim, src_dim);
  for (std::size_t c = 0; c < cp.chains.size(); ++c) {
    if (cp.length(c) != n + 1 || f.dim(c) == 0) continue;
    const auto& ch = cp.chains[c];
    for (std::size_t i = 0; i < ch.size(); ++i) {
      auto face = ch;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      const auto fc = cp.index.at(face);
      if (f.dim(fc) == 0) continue;
      const auto m = f.face_map(fc, c);
      const long sign = i % 2 == 0 ? 1 : -1;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < m.cols(); ++k) {
          const long cur = d(dst_off[c] + r, src_off[fc] + k);
          d.set(dst_off[c] + r, src_off[fc] + k, cur + sign * static_cast<long>(m(r, k)));
        }
    }
  }
  return d;
}

CochainCohomology cochain_cohomology(const ChainPosetFunctor& f, std::size_t max_degree) {
  f.validate();
  CochainCohomology out;
  const std::size_t top = std::max(max_degree, f.poset().max_length()) + 1;
  std::vector<FpMatrix> deltas;
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= top; ++n) {
    deltas.push_back(coboundary(f, n));
    ranks.push_back(deltas.back().rank());
    out.cochain_dims.push_back(deltas.back().cols());
  }
  for (std::size_t n = 0; n + 1 < deltas.size(); ++n) {
    const auto dd = deltas[n + 1] * deltas[n];
    if (!dd.is_zero()) out.delta_squared_zero = false;
  }
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t below = n == 0 ? 0 : ranks[n - 1];
    out.h.push_back(out.cochain_dims[n] - ranks[n] - below);
  }
  out.cochain_dims.resize(max_degree + 1);
  return out;
}

std::optional<VanishingCriterion> vanishing_criteria(const ChainPosetFunctor& f) {
  const auto& cp = f.poset();
  std::vector<std::size_t> nonzero;
  for (std::size_t c = 0; c < cp.chains.size(); ++c)
    if (cp.length(c) == 0 && f.dim(c) > 0) nonzero.push_back(c);
  if (nonzero.empty()) return VanishingCriterion{'a', "", "", ""};
  if (nonzero.size() != 2) return std::nullopt;

  auto injective = [](const FpMatrix& m) { return m.rank() == m.cols(); };
  for (int swap = 0; swap < 2; ++swap) {
    const auto x1 = cp.chains[nonzero[swap]][0];
    const auto x2 = cp.chains[nonzero[1 - swap]][0];
    if (!cp.less[x1][x2]) continue;
    const auto pair = cp.index.at({x1, x2});
    const auto m1 = f.face_map(nonzero[swap], pair);
    const auto m2 = f.face_map(nonzero[1 - swap], pair);
    if (!injective(m1) || !injective(m2)) continue;
    // Same image: stacking the two column spaces adds nothing.
    FpMatrix both(f.prime(), m1.rows(), m1.cols() + m2.cols());
    for (std::size_t r = 0; r < m1.rows(); ++r) {
      for (std::size_t k = 0; k < m1.cols(); ++k) both.set(r, k, m1(r, k));
      for (std::size_t k = 0; k < m2.cols(); ++k) both.set(r, m1.cols() + k, m2(r, k));
    }
    if (both.rank() != m1.rank() || m1.rank() != m2.rank()) continue;
    for (std::size_t y = 0; y < cp.labels.size(); ++y) {
      if (y == x1 || !cp.less[y][x2]) continue;
      if (injective(f.face_map(nonzero[1 - swap], cp.index.at({y, x2}))))
        return VanishingCriterion{'b', cp.labels[x1], cp.labels[x2], cp.labels[y]};
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(const LimResult& r) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [k, v] : r.singleton_values) values[k] = v;
  nlohmann::json crit = nullptr;
  if (r.criterion) {
    crit = {{"criterion", std::string(1, r.criterion->criterion)}};
    if (r.criterion->criterion == 'b') {
      crit["X1"] = r.criterion->x1;
      crit["X2"] = r.criterion->x2;
      crit["Y"] = r.criterion->y;
    }
  }
  return {{"l", r.l},        {"criterion", crit},    {"singleton_values", values},
          {"maps", r.maps},  {"lim_dim", r.lim_dim}, {"caveats", r.caveats}};
}

namespace {

// Figure labels that name a different representative of the same F-class
// than the table row.
std::string table_label(const std::string& hasse_label) {
  if (hasse_label == "Q1Q2Q3'") return "Q1'Q2Q3";
  if (hasse_label == "Q1Q2'R3") return "Q1'Q2R3";
  return hasse_label;
}

std::size_t three_dim(const std::string& kx) {
  if (kx == "0") return 0;
  if (kx == "C3") return 1;
  throw MissingCertificate("unexpected value " + kx);
}

}  // namespace

LimResult verify_lim_A2(unsigned l) {
  LimResult out;
  out.l = l;
  auto& rep = out.report;
  rep.title = "lim";
  rep.l = l;
  const auto& rows = table_for(FusionSystem::kF, l);
  const auto& hasse = hasse_diagram(l);
  const auto cp = chain_poset_of(hasse);
  ChainPosetFunctor f(cp, 3);

  std::map<std::string, std::string> value_of;
  for (const auto& node : hasse.nodes) {
    const auto lbl = table_label(node.label);
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const FusionTableRow& r) { return r.label == lbl; });
    if (it == rows.end() || !it->f) throw MissingCertificate("no F-table entry for " + node.label);
    const auto g = resolve_out_descriptor(*it->f);
    const auto om = odd_h2_kx(*g);
    if (om.conclusion == "undetermined") throw MissingCertificate("H^2 of Out_F(" + node.label + ") undetermined");
    value_of[node.label] = om.conclusion;
    out.singleton_values.emplace_back(node.label, om.conclusion);
    f.set_dim({node.label}, three_dim(om.conclusion));
  }
  out.caveats.push_back("chain classes identified with class-sequences");

  if (l == 0) {
    rep.expect("A^2 at [R]", std::string("C3"), value_of.at("R"));
    rep.expect("A^2 at [QR]", std::string("C3"), value_of.at("QR"));
    std::size_t others = 0;
    for (const auto& [k, v] : value_of)
      if (k != "R" && k != "QR" && v != "0") ++others;
    rep.expect("other nonzero singleton values", 0, others);

    // Aut_F(R < QR) restricted to R, modulo Inn(R): N_A7 of a four-group.
    const auto a7 = named_group("A7");
    const auto v4 = PermGroup::generate(Perm(7), {Perm::from_cycles(7, {{0, 1}, {2, 3}}),
                                                  Perm::from_cycles(7, {{0, 2}, {1, 3}})});
    const auto n = normalizer_in(a7->group, v4);
    rep.expect("|N_A7(V4)|", 72, n.order());
    const auto index = a7->group.order() / n.order();
    rep.expect("index in A7", 35, index);
    rep.expect_true("index prime to 3", index % 3 != 0);
    rep.expect("Sylow 3-subgroup of A7 inside N_A7(V4)", p_part(a7->group.order(), 3), p_part(n.order(), 3));
    const auto h_a7 = h2_certificate(*a7, 3);
    const auto h_n = h2_abelian_sylow(n, 3, "N_A7(V4)");
    rep.expect("dim H^2(A7, F3)", 1, h_a7.dim);
    rep.expect("dim H^2(N_A7(V4), F3)", 1, h_n.dim);
    const auto h_qr = resolve_out_descriptor("(C3xC3):-1:C2");
    const auto h_qr_cert = h2_certificate(*h_qr, 3);
    rep.expect("dim H^2(Out_F(QR), F3)", 1, h_qr_cert.dim);

    // Restriction to a subgroup of index prime to 3 is injective; equal
    // dimensions make it an isomorphism.
    const bool iso = index % 3 != 0 && h_a7.dim == h_n.dim;
    f.set_dim({"R", "QR"}, h_n.dim);
    f.set_dim({"Q", "QR"}, h_qr_cert.dim);
    const auto one = FpMatrix::identity(3, 1);
    if (iso) f.set_map({"R"}, {"R", "QR"}, one);
    f.set_map({"QR"}, {"R", "QR"}, one);
    f.set_map({"QR"}, {"Q", "QR"}, one);
    out.maps = {"[R] -> [R<QR]: restriction, isomorphism (index 35, both dimensions 1)",
                "[QR] -> [R<QR]: identity (Aut_F(R<QR) = Aut_F(QR))",
                "[QR] -> [Q<QR]: identity (Aut_F(Q<QR) = Aut_F(QR))"};
    out.caveats.push_back("values on chains of length >= 1 other than [R<QR], [Q<QR] taken as 0");
  }

  out.criterion = vanishing_criteria(f);
  const auto coh = cochain_cohomology(f, 1);
  out.lim_dim = coh.h[0];
  const std::string want = l == 0 ? "b" : "a";
  rep.expect("criterion", want, out.criterion ? std::string(1, out.criterion->criterion) : std::string("none"));
  if (l == 0 && out.criterion && out.criterion->criterion == 'b') {
    rep.expect("X1", std::string("R"), out.criterion->x1);
    rep.expect("X2", std::string("QR"), out.criterion->x2);
    rep.expect("Y", std::string("Q"), out.criterion->y);
  }
  rep.expect_true("delta o delta = 0", coh.delta_squared_zero);
  rep.expect("lim (full cochain complex)", 0, out.lim_dim);
  return out;
}

}  // namespace solw
