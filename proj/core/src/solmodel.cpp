#include "solweights/solmodel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "solweights/structure.hpp"

namespace solw {

namespace {

template <GroupElement E>
std::vector<E> sorted_elements(const FiniteGroup<E>& g) {
  auto v = g.elements();
  std::sort(v.begin(), v.end());
  return v;
}

template <GroupElement E>
std::vector<E> conjugate_set(const std::vector<E>& v, const E& t) {
  const E ti = t.inverse();
  std::vector<E> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ti * x * t);
  std::sort(out.begin(), out.end());
  return out;
}

template <GroupElement E>
std::vector<E> concat(std::vector<E> a, const std::vector<E>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

unsigned log2_exact(std::uint64_t n) {
  unsigned k = 0;
  while (n > 1) {
    n >>= 1;
    ++k;
  }
  return k;
}

bool in_l0(const KElem& k, std::uint64_t q) {
  if (k.slot_permutation() != std::array<std::uint8_t, 3>{0, 1, 2}) return false;
  for (int i = 0; i < 3; ++i)
    if (!k.block(i).entries_below(q)) return false;
  return true;
}

template <GroupElement E>
std::uint64_t involution_count(const FiniteGroup<E>& g) {
  std::uint64_t n = 0;
  for (const auto& x : g.elements())
    if (!(x == g.identity()) && x * x == g.identity()) ++n;
  return n;
}

}  // namespace

KElem in_slot(int i, const Mat2& m) {
  const Mat2 one = Mat2::identity(m.field());
  std::array<Mat2, 3> b{one, one, one};
  b[static_cast<std::size_t>(i)] = m;
  return KElem(b[0], b[1], b[2]);
}

KElem diagonal(const Mat2& a, const Mat2& b, const Mat2& c) { return KElem(a, b, c); }

SolModel build_sol_model(unsigned l) {
  if (l > 1) throw Error("the Sol model is built for l = 0 and l = 1 only");
  SolModel m;
  m.l = l;
  m.frame = sl2_with_quaternion_frame(l);
  m.f = m.frame.tower.fq2.get();
  const Field* f = m.f;
  const Mat2 one = Mat2::identity(f);
  const Mat2 minus = one.negated();
  const Mat2& x = m.frame.x;
  const Mat2& y = m.frame.y;
  const Mat2& c = m.frame.c;

  m.one = KElem::identity(f);
  m.z = diagonal(minus, minus, one);
  m.minus_one = {diagonal(minus, one, one), diagonal(one, minus, one), diagonal(one, one, minus)};
  m.c_diag = diagonal(c, c, c);
  m.d = diagonal(y * c, y * c, y * c);
  m.tau = KElem::permutation(f, {1, 0, 2});
  m.tau_prime = m.d * m.tau;
  m.three_cycle = KElem::permutation(f, {1, 2, 0});

  for (int i = 0; i < 3; ++i)
    for (const auto& g : m.frame.sl2_generators) m.l_frames[i].push_back(in_slot(i, g));
  m.k_generators = m.l_frames[0];
  m.k_generators.push_back(m.tau);
  m.k_generators.push_back(m.three_cycle);
  m.k_generators.push_back(m.c_diag);
  const std::uint64_t sl2 = m.frame.sl2_order;
  m.k_order = sl2 * sl2 * sl2 * 6;

  const Mat2 xq = x.pow(std::int64_t{1} << l);
  std::vector<KElem> r0_gens;
  for (int i = 0; i < 3; ++i) {
    m.r[i] = KGroup::generate(m.one, {in_slot(i, x), in_slot(i, y)});
    m.q[i] = KGroup::generate(m.one, {in_slot(i, xq), in_slot(i, y)});
    m.q_prime[i] = KGroup::generate(m.one, {in_slot(i, xq), in_slot(i, x * y)});
    r0_gens.push_back(in_slot(i, x));
    r0_gens.push_back(in_slot(i, y));
  }
  m.r0 = KGroup::generate(m.one, r0_gens);
  m.s = KGroup::generate(m.one, concat(r0_gens, {m.d, m.tau}));
  m.t = KGroup::generate(m.one, {in_slot(0, x), in_slot(1, x), m.c_diag});
  m.zg = KGroup::generate(m.one, {m.z});
  m.u = KGroup::generate(m.one, {m.minus_one[0], m.minus_one[1]});
  m.e = filter_subgroup(m.t, [](const KElem& k) { return (k * k).is_identity(); });
  m.a = KGroup::generate(m.one, concat(m.e.generators(), {m.d}));
  return m;
}

Report verify_quaternion_lemma(unsigned l) {
  if (l < 1 || l > 3) throw Error("quaternion checks need 1 <= l <= 3");
  Report rep;
  rep.title = "quaternion";
  rep.l = l;
  const auto fr = sl2_with_quaternion_frame(l);
  const Field* f = fr.tower.fq2.get();
  const Mat2 one = Mat2::identity(f);
  const Mat2 &x = fr.x, &y = fr.y, &c = fr.c;
  const auto& r = fr.r;
  const std::int64_t n = std::int64_t{1} << (l + 2);  // order of x

  rep.expect("|R|", std::uint64_t{1} << (l + 3), r.order());
  rep.expect_true("x^(2^(l+2)) = y^4 = 1", x.pow(n).is_identity() && y.pow(4).is_identity());
  rep.expect_true("x^(2^(l+1)) = y^2", x.pow(n / 2) == y * y);
  rep.expect_true("y^-1 x y = x^-1", conj(x, y) == x.inverse());
  rep.expect("order of x", static_cast<std::uint64_t>(n), element_order(x, one));
  rep.expect_true("c^2 = x^-1", c * c == x.inverse());
  rep.expect("order of c", static_cast<std::uint64_t>(2 * n), element_order(c, one));
  rep.expect_true("c^-1 y c = xy", conj(y, c) == x * y);
  rep.expect_true("c y c^-1 = yx", c * y * c.inverse() == y * x);
  rep.expect_true("x, y have entries in F_q", x.entries_below(fr.tower.fq->size()) && y.entries_below(fr.tower.fq->size()));

  // (a) normal forms
  std::set<Mat2> forms;
  for (std::int64_t i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j) forms.insert(x.pow(i) * y.pow(j));
  bool all_in = std::all_of(forms.begin(), forms.end(), [&](const Mat2& g) { return r.contains(g); });
  rep.expect_true("(a) x^i y^j are distinct and exhaust R", forms.size() == r.order() && all_in);

  // (b)
  const auto cyclic = FiniteGroup<Mat2>::generate(one, {x});
  bool order4 = true;
  for (const auto& g : r.elements())
    if (!cyclic.contains(g) && element_order(g, one) != 4) order4 = false;
  rep.expect_true("(b) elements outside <x> have order 4", order4);

  // (c)
  const auto& cd = r.class_data();
  bool parity = true;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) {
      const bool same = cd.class_of[r.index_of(x.pow(i) * y)] == cd.class_of[r.index_of(x.pow(j) * y)];
      if (same != ((i - j) % 2 == 0)) parity = false;
    }
  rep.expect_true("(c) x^i y ~ x^j y iff i = j mod 2", parity);

  // (d) Q8-subgroups: nonabelian of order 8 with one involution, from pairs of order-4 elements
  std::vector<Mat2> order4_elems;
  for (const auto& g : r.elements())
    if (element_order(g, one) == 4) order4_elems.push_back(g);
  std::set<std::vector<Mat2>> q8s;
  for (std::size_t i = 0; i < order4_elems.size(); ++i)
    for (std::size_t j = i + 1; j < order4_elems.size(); ++j) {
      const auto& a = order4_elems[i];
      const auto& b = order4_elems[j];
      if (a * b == b * a) continue;
      const auto h = FiniteGroup<Mat2>::generate(one, {a, b});
      if (h.order() == 8 && involution_count(h) == 1) q8s.insert(sorted_elements(h));
    }
  rep.expect("(d) number of Q8-subgroups", std::uint64_t{1} << l, q8s.size());
  const Mat2 xq = x.pow(std::int64_t{1} << l);
  std::set<std::vector<Mat2>> listed;
  for (std::int64_t i = 0; i < n; ++i) listed.insert(sorted_elements(FiniteGroup<Mat2>::generate(one, {xq, x.pow(i) * y})));
  rep.expect_true("(d) they are the <x^(2^l), x^i y>", listed == q8s);

  // (e) conjugacy classes under R
  const auto qg = FiniteGroup<Mat2>::generate(one, {xq, y});
  const auto qpg = FiniteGroup<Mat2>::generate(one, {xq, x * y});
  auto r_class = [&](const std::vector<Mat2>& h) {
    std::set<std::vector<Mat2>> cls;
    for (const auto& g : r.elements()) cls.insert(conjugate_set(h, g));
    return cls;
  };
  const auto class_q = r_class(sorted_elements(qg));
  const auto class_qp = r_class(sorted_elements(qpg));
  const std::uint64_t half = l == 0 ? 0 : std::uint64_t{1} << (l - 1);
  rep.expect("(e) class length of Q", half, class_q.size());
  rep.expect("(e) class length of Q'", half, class_qp.size());
  bool disjoint_cover = class_q.size() + class_qp.size() == q8s.size();
  for (const auto& h : class_q)
    if (class_qp.count(h) || !q8s.count(h)) disjoint_cover = false;
  for (const auto& h : class_qp)
    if (!q8s.count(h)) disjoint_cover = false;
  rep.expect_true("(e) two classes partition the Q8-subgroups", disjoint_cover);

  // (f)
  const Mat2 xh = x.pow(std::int64_t{1} << (l - 1));
  for (const auto* h : {&qg, &qpg}) {
    const auto nr = normalizer_in(r, *h);
    const auto expected = FiniteGroup<Mat2>::generate(one, concat(h->generators(), {xh}));
    rep.expect_true(std::string("(f) N_R(") + (h == &qg ? "Q" : "Q'") + ") = <" + (h == &qg ? "Q" : "Q'") +
                        ", x^(2^(l-1))>",
                    sorted_elements(nr) == sorted_elements(expected), "order " + std::to_string(nr.order()));
  }

  // c exchanges the classes
  bool swaps = true;
  for (const auto& h : q8s) {
    const auto hc = conjugate_set(h, c);
    const bool from_q = class_q.count(h) > 0;
    if (from_q ? !class_qp.count(hc) : !class_q.count(hc)) swaps = false;
  }
  rep.expect_true("c-conjugation exchanges the two classes", swaps);
  rep.expect_true("Q^c = Q'", conjugate_set(sorted_elements(qg), c) == sorted_elements(qpg));
  return rep;
}

Report verify_torus_sequence(const SolModel& m) {
  Report rep;
  rep.title = "torus";
  rep.l = m.l;
  const unsigned l = m.l;
  const std::uint64_t ex = std::uint64_t{1} << (l + 2);

  rep.expect("|S|", std::uint64_t{1} << (10 + 3 * l), m.s.order());
  const std::uint64_t rq = std::uint64_t{1} << (l + 3);
  rep.expect("|R_0| = (2^(l+3))^3 / 2", rq * rq * rq / 2, m.r0.order());
  const auto dt = KGroup::generate(m.one, {m.d, m.tau});
  bool complement = dt.order() == 4;
  for (const auto& g : dt.elements())
    if (!g.is_identity() && m.r0.contains(g)) complement = false;
  rep.expect_true("<d, tau> = C2 x C2 complements R_0", complement && is_normal(m.s, m.r0));
  rep.expect_true("d is an involution commuting with tau",
                  !m.d.is_identity() && (m.d * m.d).is_identity() && m.d * m.tau == m.tau * m.d);
  const auto& one_block = Mat2::identity(m.f);
  rep.expect_true("[-1,-1,1] = [1,1,-1]",
                  m.z == diagonal(one_block, one_block, one_block.negated()));
  rep.expect("|Z|", 2, m.zg.order());
  rep.expect_true("Z = Z(S)", sorted_elements(m.s.center()) == sorted_elements(m.zg));
  rep.expect("|U|", 4, m.u.order());
  rep.expect("|E|", 8, m.e.order());
  rep.expect("|A|", 16, m.a.order());
  rep.expect_true("Z < U < E < A", is_subgroup_of(m.zg, m.u) && is_subgroup_of(m.u, m.e) && is_subgroup_of(m.e, m.a));
  rep.expect_true("A elementary abelian", std::all_of(m.a.elements().begin(), m.a.elements().end(), [&](const KElem& g) {
                    return (g * g).is_identity() &&
                           std::all_of(m.a.generators().begin(), m.a.generators().end(),
                                       [&](const KElem& h) { return g * h == h * g; });
                  }));
  rep.expect_true("U normal in S", is_normal(m.s, m.u));

  // T
  const auto& t = m.t;
  bool abelian = true;
  for (const auto& a : t.generators())
    for (const auto& b : t.generators())
      if (!(a * b == b * a)) abelian = false;
  rep.expect("|T|", ex * ex * ex, t.order());
  rep.expect_true("T abelian", abelian);
  rep.expect("exponent of T", ex, exponent(t));
  rep.expect("rank of T", 3u, log2_exact(m.e.order()));
  rep.expect_true("T normal in S", is_normal(m.s, t));
  bool inverted = true;
  for (const auto& g : t.elements())
    if (!(conj(g, m.d) == g.inverse())) inverted = false;
  rep.expect_true("d inverts T", inverted);

  const auto st = quotient_group(m.s, t);
  rep.expect("|S/T|", 16, st.group.order());
  const auto target = named_group("x(C2,D8)");
  rep.expect("S/T vs C2 x D8", std::string("isomorphic"), std::string(to_string(compare_groups(st.group, target->group))));

  if (l != 0) {
    rep.note("uniqueness searches skipped at l = " + std::to_string(l));
    return rep;
  }

  // Normal four-subgroups: their nonidentity elements are involutions with S-class size <= 2.
  const auto& cd = m.s.class_data();
  std::vector<KElem> cand;
  for (std::uint32_t i = 0; i < m.s.order(); ++i) {
    const auto& g = m.s.element(i);
    if (g.is_identity() || !(g * g).is_identity()) continue;
    if (cd.classes[cd.class_of[i]].size <= 2) cand.push_back(g);
  }
  std::set<std::vector<KElem>> fours;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (!(cand[i] * cand[j] == cand[j] * cand[i])) continue;
      const auto v = KGroup::generate(m.one, {cand[i], cand[j]});
      if (is_normal(m.s, v)) fours.insert(sorted_elements(v));
    }
  rep.expect("normal four-subgroups of S", 1, fours.size());
  rep.expect_true("the normal four-subgroup is U", fours.size() == 1 && *fours.begin() == sorted_elements(m.u));

  // Subgroups isomorphic to T = C4^3, built as C4 < C4^2 < C4^3.
  std::vector<KElem> o4;
  for (const auto& g : m.s.elements())
    if (element_order(g, m.one) == 4) o4.push_back(g);
  auto commutes_with = [](const KElem& g, const KGroup& h) {
    return std::all_of(h.generators().begin(), h.generators().end(), [&](const KElem& a) { return a * g == g * a; });
  };
  std::map<std::vector<KElem>, KGroup> layer;
  for (const auto& g : o4) {
    auto h = KGroup::generate(m.one, {g});
    layer.emplace(sorted_elements(h), h);
  }
  for (int step = 0; step < 2; ++step) {
    std::map<std::vector<KElem>, KGroup> next;
    const std::uint64_t want = layer.begin()->second.order() * 4;
    for (const auto& [key, h] : layer)
      for (const auto& g : o4) {
        if (h.contains(g) || !commutes_with(g, h)) continue;
        auto k = KGroup::generate(m.one, concat(h.generators(), {g}));
        if (k.order() == want) next.emplace(sorted_elements(k), k);
      }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  rep.expect("subgroups of S isomorphic to C4^3", 1, layer.size());
  rep.expect_true("that subgroup is T", layer.size() == 1 && layer.begin()->first == sorted_elements(t));
  return rep;
}

unsigned sectional_rank_small_2group(const FiniteGroup<Perm>& g) {
  const std::size_t n = g.order();
  if (n > 64) throw Error("sectional rank scan limited to order 64");
  std::vector<std::vector<std::uint8_t>> mul(n, std::vector<std::uint8_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = static_cast<std::uint8_t>(g.index_of(g.element(i) * g.element(j)));
  auto close = [&](std::uint64_t mask) {
    for (bool grown = true; grown;) {
      grown = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!(mask >> j & 1)) continue;
          const auto k = mul[i][j];
          if (!(mask >> k & 1)) {
            mask |= std::uint64_t{1} << k;
            grown = true;
          }
        }
      }
    }
    return mask;
  };
  const std::uint32_t id = g.index_of(g.identity());
  std::set<std::uint64_t> seen{std::uint64_t{1} << id};
  std::vector<std::uint64_t> todo{std::uint64_t{1} << id};
  unsigned best = 0;
  while (!todo.empty()) {
    const auto h = todo.back();
    todo.pop_back();
    std::uint64_t squares = std::uint64_t{1} << id;
    for (std::size_t i = 0; i < n; ++i)
      if (h >> i & 1) squares |= std::uint64_t{1} << mul[i][i];
    const auto phi = close(squares);
    best = std::max(best, log2_exact(static_cast<std::uint64_t>(std::popcount(h)) /
                                     static_cast<std::uint64_t>(std::popcount(phi))));
    for (std::size_t i = 0; i < n; ++i) {
      if (h >> i & 1) continue;
      const auto k = close(h | std::uint64_t{1} << i);
      if (seen.insert(k).second) todo.push_back(k);
    }
  }
  return best;
}

SectionalRankCertificate sectional_rank_certificate(const SolModel& m) {
  if (m.l != 0) throw Error("sectional rank certificate is computed at l = 0");
  SectionalRankCertificate cert;
  auto& rep = cert.report;
  rep.title = "sectional-rank";
  rep.l = m.l;
  std::vector<KElem> squares;
  for (const auto& g : m.r0.elements()) squares.push_back(g * g);
  const auto phi = subgroup(m.r0, squares);
  cert.lower = log2_exact(m.r0.order() / phi.order());
  rep.expect("rank of R_0/Phi(R_0)", 6u, cert.lower);

  cert.s_t = log2_exact(m.e.order());  // T abelian: its rank is that of Omega_1(T)
  const auto st = quotient_group(m.s, m.t);
  cert.s_quotient = sectional_rank_small_2group(st.group);
  cert.upper = cert.s_t + cert.s_quotient;
  rep.expect("s(T)", 3u, cert.s_t);
  rep.expect("s(S/T)", 3u, cert.s_quotient);
  rep.expect("s(S) lower bound", 6u, cert.lower);
  rep.expect("s(S) upper bound", 6u, cert.upper);
  return cert;
}

namespace {

struct RadicalRow {
  std::string name;
  KGroup p;
  std::string target;
  std::uint64_t out_order;
};

}  // namespace

Report verify_k_radicals_l0(const SolModel& m) {
  if (m.l != 0) throw Error("K-radical classification is checked at l = 0");
  Report rep;
  rep.title = "k-radicals";
  rep.l = 0;
  const std::uint64_t q = m.frame.tower.fq->size();

  const auto sl2 = enumerate_sl2(m.frame);
  rep.expect("|SL2(5)|", m.frame.sl2_order, sl2.order());
  const auto q8 = FiniteGroup<Mat2>::generate(Mat2::identity(m.f), {m.frame.x, m.frame.y});
  const auto nq8 = normalizer_in(sl2, q8);
  rep.expect("|N_SL2(5)(Q8)|", 24, nq8.order());

  std::vector<KElem> ngens;
  for (int i = 0; i < 3; ++i)
    for (const auto& g : nq8.generators()) ngens.push_back(in_slot(i, g));
  ngens.insert(ngens.end(), {m.c_diag, m.d, m.tau, m.three_cycle});
  const auto nkq = KGroup::generate(m.one, ngens);
  rep.expect("|K|", 10368000, m.k_order);
  rep.expect("|N_K(Q)| by closure", 82944, nkq.order());

  const auto& qg = m.r0;  // Q = R_0 when l = 0
  const std::vector<RadicalRow> rows{
      {"S", m.s, "1", 1},
      {"Q", qg, "m324", 324},
      {"QR", KGroup::generate(m.one, concat(qg.generators(), {m.tau})), "dih(C3xC3)", 18},
      {"QR*", KGroup::generate(m.one, concat(qg.generators(), {m.tau_prime})), "S3", 6},
      {"C_S(U)", KGroup::generate(m.one, concat(qg.generators(), {m.d})), "S3", 6},
  };
  std::vector<std::uint64_t> out_orders;
  for (const auto& row : rows) {
    const auto& p = row.p;
    std::uint64_t meet = 0;
    for (const auto& g : p.elements())
      if (in_l0(g, q)) ++meet;
    rep.expect(row.name + ": |P cap L_0| = |Q|", qg.order(), meet);
    // P cap L_0 = Q is normalized by N_K(P), so N_K(P) <= N_K(Q).
    const auto n = row.name == "Q" ? nkq : normalizer_in(nkq, p);
    const auto orbit = subgroup_conjugation_orbit(m.k_generators, p, m.k_order);
    rep.expect(row.name + ": |N_K(P)| certified by orbit " + std::to_string(orbit.orbit_size), *orbit.normalizer_order,
               n.order());
    if (row.name == "Q") rep.expect("Q: orbit size under K", 125, orbit.orbit_size);
    const auto out = outer_automorphisms_via_quotient(n, p);
    out_orders.push_back(out.order());
    rep.expect(row.name + ": |Out_K(P)|", row.out_order, out.order());
    const auto induced = induced_outer_automorphisms(n.generators(), p);
    rep.expect(row.name + ": |Out| via the action on P", out.order(), induced.out.order());
    if (row.name == "Q") {
      rep.expect("Q: |Inn(Q)|", 64, induced.inn.order());
      rep.expect("Q: |Aut_K(Q)|", 324 * 64, induced.aut.order());
    }
    const auto target = named_group(row.target);
    rep.expect(row.name + ": Out_K(P) vs " + row.target, std::string("isomorphic"),
               std::string(to_string(compare_groups(out, target->group))));
  }
  rep.expect("Out orders (S,Q,QR,QR*,C_S(U))", std::vector<std::uint64_t>{1, 324, 18, 6, 6}, out_orders);
  return rep;
}

Report spotcheck_l1(const SolModel& m) {
  if (m.l != 1) throw Error("spot checks are for the l = 1 model");
  Report rep;
  rep.title = "l1-spotcheck";
  rep.l = 1;
  const Field* f = m.f;
  const Mat2 one = Mat2::identity(f);
  const Mat2 &x = m.frame.x, &y = m.frame.y;
  const Mat2 x2 = x.pow(2);

  rep.expect("|S|", 8192, m.s.order());

  // (iii) per-factor Q8-normalizers in SL2(25)
  const auto sl2 = enumerate_sl2(m.frame);
  rep.expect("|SL2(25)|", 15600, sl2.order());
  const auto q8 = FiniteGroup<Mat2>::generate(one, {x2, y});
  const auto q8p = FiniteGroup<Mat2>::generate(one, {x2, x * y});
  const auto nq = normalizer_in(sl2, q8);
  const auto nqp = normalizer_in(sl2, q8p);
  const auto oq = subgroup_conjugation_orbit(m.frame.sl2_generators, q8, m.frame.sl2_order);
  const auto oqp = subgroup_conjugation_orbit(m.frame.sl2_generators, q8p, m.frame.sl2_order);
  rep.expect("orbit of Q8 under SL2(25)", 325, oq.orbit_size);
  rep.expect("|N_SL2(25)(Q8)| from the orbit", 48, *oq.normalizer_order);
  rep.expect("|N_SL2(25)(Q8)| by scan", 48, nq.order());
  rep.expect("orbit of Q8' under SL2(25)", 325, oqp.orbit_size);
  rep.expect("|N_SL2(25)(Q8')| by scan", 48, nqp.order());
  const auto n_inv = involution_count(nq);
  const auto zq = nq.center();
  const auto nq_mod_z = quotient_group(nq, zq).group;
  rep.note("N_SL2(25)(Q8): order " + std::to_string(nq.order()) + ", " + std::to_string(n_inv) +
           " involution(s), center of order " + std::to_string(zq.order()) + ", central quotient " +
           to_string(compare_groups(nq_mod_z, named_group("S4")->group)) + " to S4");
  rep.expect("involutions in N_SL2(25)(Q8)", 1, n_inv);

  // (i) Out_K(Q1Q2Q3) with N_K(P) = N_L1(Q1) N_L2(Q2) N_L3(Q3) X
  const auto p0 = KGroup::generate(m.one, concat(concat(m.q[0].generators(), m.q[1].generators()), m.q[2].generators()));
  rep.expect("|Q1Q2Q3|", 256, p0.order());
  std::vector<KElem> mgens;
  for (int i = 0; i < 3; ++i)
    for (const auto& g : nq.generators()) mgens.push_back(in_slot(i, g));
  mgens.push_back(m.tau);
  mgens.push_back(m.three_cycle);
  const auto mgrp = KGroup::generate(m.one, mgens);
  rep.expect("|N_L1(Q1)N_L2(Q2)N_L3(Q3)X|", 48ull * 48 * 48 / 2 * 6, mgrp.order());
  const auto out0 = outer_automorphisms_via_quotient(mgrp, p0);
  rep.expect("|Out_K(Q1Q2Q3)|", 1296, out0.order());
  rep.expect("Out_K(Q1Q2Q3) vs S3 wr S3", std::string("fingerprint-verified"),
             std::string(to_string(compare_groups(out0, named_group("wr(S3,S3)")->group))));

  // (ii) Out_K(C_S(U)), induced by X
  const auto csu = KGroup::generate(m.one, concat(m.r0.generators(), {m.d}));
  rep.expect("|C_S(U)|", 4096, csu.order());
  bool centralizes = true;
  for (const auto& g : csu.generators())
    for (const auto& u : m.u.generators())
      if (!(g * u == u * g)) centralizes = false;
  rep.expect_true("C_S(U) = R_0<d> centralizes U", centralizes);
  const auto ncsu = KGroup::generate(m.one, concat(csu.generators(), {m.tau, m.three_cycle}));
  rep.expect("|C_S(U) X|", 24576, ncsu.order());
  const auto out_csu = outer_automorphisms_via_quotient(ncsu, csu);
  rep.expect("Out_K(C_S(U)) vs S3", std::string("isomorphic"),
             std::string(to_string(compare_groups(out_csu, named_group("S3")->group))));

  // (iv) the non-radical witness P = P0<s>
  const KElem s = in_slot(0, x) * m.tau;
  rep.expect_true("s = [x,1,1] tau lies in S", m.s.contains(s));
  rep.expect_true("s normalizes P0", normalizes(s, p0));
  const auto mbar = quotient_group(mgrp, p0);
  const Perm sbar = quotient_image(mgrp, mbar, s);
  const Perm idbar(mbar.coset_reps.size());
  rep.expect("order of s in M/P0", 4, element_order(sbar, idbar));
  const Perm sq_target = quotient_image(mgrp, mbar, diagonal(x, x, one));
  rep.expect_true("s^2 = [x,x,1] mod P0", sbar * sbar == sq_target);
  std::vector<Perm> n3bar_gens;
  for (const auto& g : nq.generators()) n3bar_gens.push_back(quotient_image(mgrp, mbar, in_slot(2, g)));
  const auto n3bar = FiniteGroup<Perm>::generate(idbar, n3bar_gens);
  const auto o3_n3 = pcore(n3bar, 3);
  rep.expect("|O3 of the third factor's image|", 3, o3_n3.order());
  rep.expect_true("s centralizes it", std::all_of(o3_n3.elements().begin(), o3_n3.elements().end(),
                                                  [&](const Perm& g) { return g * sbar == sbar * g; }));
  const auto csbar = centralizer_of(mbar.group, sbar);
  rep.expect("|O3(C(s))| in M/P0", 3, pcore(csbar, 3).order());
  const auto s_cyc = FiniteGroup<Perm>::generate(idbar, {sbar});
  const auto nsbar = normalizer_in(mbar.group, s_cyc);
  rep.expect("O2(N(<s>)) in M/P0 vs D8", std::string("isomorphic"),
             std::string(to_string(compare_groups(pcore(nsbar, 2), named_group("D8")->group))));

  const auto p = KGroup::generate(m.one, concat(p0.generators(), {s}));
  rep.expect("|P0<s>|", 1024, p.order());
  rep.expect_true("P0<s> <= S", is_subgroup_of(p, m.s));
  std::uint64_t meet = 0;
  for (const auto& g : p.elements())
    if (in_l0(g, m.frame.tower.fq->size())) ++meet;
  rep.note("|P0<s> cap L_0| = " + std::to_string(meet) + "; normalizer of P0<s> taken inside N_K(P0)");
  const auto np = normalizer_in(mgrp, p);
  const auto cp = centralizer_of_subgroup(np, p);
  const auto pc = subgroup(np, concat(p.generators(), cp.generators()));
  const auto outq = quotient_group(np, pc);
  const auto o2 = pcore(outq.group, 2);
  rep.note("|Out(P0<s>)| = " + std::to_string(outq.group.order()));
  rep.expect("|O2(Out(P0<s>))|", 2, o2.order());
  const KElem xh = in_slot(0, x);
  const bool xh_in = np.contains(xh);
  rep.expect_true("[x,1,1] induces the generator of O2(Out)",
                  xh_in && o2.contains(quotient_image(np, outq, xh)) &&
                      !quotient_image(np, outq, xh).is_identity());
  return rep;
}

}  // namespace solw
