#include "solweights/robinson.hpp"

#include <random>

namespace solw {

std::vector<ConjClass<Perm>> defect_zero_classes(const PermGroup& g) {
  std::vector<ConjClass<Perm>> out;
  for (const auto& c : g.classes())
    if (c.centralizer_order % 2 == 1) out.push_back(c);
  return out;
}

RobinsonData robinson_matrix(const PermGroup& g, const RobinsonOptions& opt) {
  RobinsonData r;
  r.classes = g.classes();
  if (g.order() == 1) {
    // The whole algebra is one block of defect zero.
    r.trivial_group = true;
    r.sylow = g;
    r.y = r.classes;
    r.y0_size = 1;
    r.double_cosets = 1;
    r.x = {g.identity()};
    r.x_coset_sizes = {1};
    r.n = Gf2Matrix(1, 1);
    r.n.set(0, 0, true);
    r.rank = r.bound = 1;
    return r;
  }

  r.sylow = opt.sylow ? *opt.sylow : g.sylow(2);
  if (r.sylow.order() != p_part(g.order(), 2) || !is_subgroup_of(r.sylow, g))
    throw Error("robinson: supplied subgroup is not a Sylow 2-subgroup");
  const auto& cd = g.class_data();
  const auto& elems = g.elements();
  std::vector<char> dz_class(r.classes.size(), 0);
  std::vector<std::uint32_t> y_row(r.classes.size(), ElementTable<Perm>::kNone);
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    if (r.classes[c].centralizer_order % 2 == 1) {
      dz_class[c] = 1;
      y_row[c] = static_cast<std::uint32_t>(r.y.size());
      r.y.push_back(r.classes[c]);
      r.y0_size += r.classes[c].size;
    }
  }

  const auto part = double_coset_partition(g, r.sylow);
  r.double_cosets = part.cosets.size();
  // Defect-zero members of each double coset, in enumeration order.
  std::vector<std::vector<std::uint32_t>> dz_members(part.cosets.size());
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    if (dz_class[cd.class_of[i]]) dz_members[part.coset_of[i]].push_back(i);

  std::mt19937_64 rng(opt.choice_seed.value_or(0));
  const auto& sel = r.sylow.elements();
  for (std::size_t d = 0; d < part.cosets.size(); ++d) {
    const auto& members = dz_members[d];
    if (members.empty()) continue;
    std::size_t pick = 0;
    if (opt.choice_seed) pick = std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng);
    const Perm& x = elems[members[pick]];
    const Perm xi = x.inverse();
    // S meets S^x trivially iff x s x^-1 lies outside S for every s != 1.
    bool trivial_intersection = true;
    for (std::size_t k = 1; k < sel.size() && trivial_intersection; ++k)
      trivial_intersection = !r.sylow.contains(x * sel[k] * xi);
    if (!trivial_intersection) continue;
    r.x.push_back(x);
    r.x_coset_sizes.push_back(part.cosets[d].size);
  }

  r.n = Gf2Matrix(r.y.size(), r.x.size());
  std::vector<std::vector<std::uint32_t>> counts(r.x.size(), std::vector<std::uint32_t>(r.y.size(), 0));
  parallel_for(r.x.size(), [&](std::size_t j) {
    for (const auto& s : sel) {
      const auto c = cd.class_of[g.index_of(r.x[j] * s)];
      if (y_row[c] != ElementTable<Perm>::kNone) ++counts[j][y_row[c]];
    }
  });
  for (std::size_t j = 0; j < r.x.size(); ++j)
    for (std::size_t i = 0; i < r.y.size(); ++i)
      if (counts[j][i] % 2) r.n.set(i, j, true);
  r.rank = (r.n * r.n.transpose()).rank();
  r.bound = std::min(r.x.size(), r.y.size());
  return r;
}

DefectZeroCount defect_zero_block_count(const PermGroup& g) {
  const auto r = robinson_matrix(g);
  return {r.rank, r.bound};
}

PermGroup odd_core(const PermGroup& g) {
  std::vector<Perm> gens;
  PermGroup core = PermGroup::generate(g.identity(), {});
  for (const auto& c : g.classes()) {
    if (c.element_order % 2 == 0 || core.contains(c.representative)) continue;
    auto trial = gens;
    trial.push_back(c.representative);
    auto cand = normal_closure(g, trial);
    if (cand.order() % 2 == 1) {
      gens = std::move(trial);
      core = std::move(cand);
    }
  }
  return core;
}

std::size_t odd_core_defect_zero_classes(const PermGroup& g) {
  const auto core = odd_core(g);
  std::size_t n = 0;
  for (const auto& c : g.classes())
    if (c.centralizer_order % 2 == 1 && core.contains(c.representative)) ++n;
  return n;
}

std::optional<std::size_t> two_complement_shortcut(const PermGroup& g) {
  const std::uint64_t complement = g.order() / p_part(g.order(), 2);
  std::uint64_t odd = 0;
  std::vector<Perm> reps;
  for (const auto& c : g.classes()) {
    if (c.element_order % 2 == 1) {
      odd += c.size;
      reps.push_back(c.representative);
    }
  }
  if (odd != complement) return std::nullopt;
  if (normal_closure(g, reps).order() != complement) return std::nullopt;
  return defect_zero_classes(g).size();
}

nlohmann::json to_json(const RobinsonData& d, const std::string& group, std::uint64_t order) {
  auto cls = [](const ConjClass<Perm>& c) {
    return nlohmann::json{{"representative", c.representative.to_cycle_string()},
                          {"cycle_type", c.representative.cycle_type()},
                          {"size", c.size},
                          {"centralizer_order", c.centralizer_order}};
  };
  nlohmann::json j;
  j["group"] = group;
  j["order"] = order;
  j["sylow_order"] = d.sylow.order();
  j["classes"] = d.classes.size();
  j["defect_zero"] = nlohmann::json::array();
  for (const auto& c : d.y) j["defect_zero"].push_back(cls(c));
  j["defect_zero_elements"] = d.y0_size;
  j["double_cosets"] = d.double_cosets;
  j["X"] = d.x.size();
  j["N"] = d.n.to_rows();
  j["rank"] = d.rank;
  j["bound"] = d.bound;
  j["count"] = d.rank;
  return j;
}

}  // namespace solw
