#include "solweights/zoo.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <utility>

#include "solweights/errors.hpp"

namespace solw {
namespace {

using Cycles = std::vector<std::vector<int>>;

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::shared_ptr<NamedGroup> atomic(std::string spec, std::size_t degree, std::vector<Perm> gens,
                                   std::uint64_t closed_form) {
  auto g = std::make_shared<NamedGroup>();
  g->spec = std::move(spec);
  g->degree = degree;
  g->closed_form_order = closed_form;
  g->group = make_perm_group(degree, std::move(gens));
  return g;
}

std::shared_ptr<NamedGroup> symmetric(unsigned n) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, Cycles{{0, 1}}));
  if (n >= 3) {
    std::vector<int> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = static_cast<int>(i);
    gens.push_back(Perm::from_cycles(n, Cycles{cyc}));
  }
  return atomic("S" + std::to_string(n), std::max(n, 1U), std::move(gens), factorial(n));
}

std::shared_ptr<NamedGroup> alternating(unsigned n) {
  std::vector<Perm> gens;
  if (n >= 3) gens.push_back(Perm::from_cycles(n, Cycles{{0, 1, 2}}));
  if (n >= 4) {
    std::vector<int> cyc;
    for (unsigned i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cyc.push_back(static_cast<int>(i));
    gens.push_back(Perm::from_cycles(n, Cycles{cyc}));
  }
  return atomic("A" + std::to_string(n), std::max(n, 1U), std::move(gens), n >= 2 ? factorial(n) / 2 : 1);
}

std::shared_ptr<NamedGroup> cyclic(unsigned n) {
  std::vector<int> cyc;
  for (unsigned i = 0; i < n; ++i) cyc.push_back(static_cast<int>(i));
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, Cycles{cyc}));
  return atomic("C" + std::to_string(n), std::max(n, 1U), std::move(gens), n);
}

std::shared_ptr<NamedGroup> dihedral(unsigned order) {
  const unsigned n = order / 2;
  if (order % 2 != 0 || n < 2) throw UnknownSpec("dihedral order must be even and at least 4");
  if (n == 2) {
    return atomic("D4", 4, {Perm::from_cycles(4, Cycles{{0, 1}, {2, 3}}), Perm::from_cycles(4, Cycles{{0, 2}, {1, 3}})},
                  4);
  }
  std::vector<int> rot;
  for (unsigned i = 0; i < n; ++i) rot.push_back(static_cast<int>(i));
  Cycles refl;
  for (unsigned i = 1; i < n - i; ++i) refl.push_back({static_cast<int>(i), static_cast<int>(n - i)});
  return atomic("D" + std::to_string(order), n, {Perm::from_cycles(n, Cycles{rot}), Perm::from_cycles(n, refl)},
                order);
}

/// GL_n(2) on the 2^n - 1 nonzero vectors; vector v is point v - 1.
std::shared_ptr<NamedGroup> gl2(unsigned n) {
  if (n < 1 || n > 6) throw UnknownSpec("GL(n,2) supported for 1 <= n <= 6");
  const unsigned pts = (1U << n) - 1;
  std::vector<Perm> gens;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      // v -> v + v_j e_i
      std::vector<Perm::Point> img(pts);
      for (unsigned v = 1; v <= pts; ++v) {
        const unsigned w = ((v >> j) & 1U) ? v ^ (1U << i) : v;
        img[v - 1] = static_cast<Perm::Point>(w - 1);
      }
      gens.emplace_back(std::move(img));
    }
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  return atomic("GL(" + std::to_string(n) + ",2)", pts, std::move(gens), order);
}

/// Field of order q: prime, or an odd prime raised to a power of two.
std::shared_ptr<const Field> field_of_order(std::uint64_t q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    auto f = Field::prime(p);
    while (f->size() < q) {
      if (p == 2) throw UnknownSpec("even-characteristic extensions are not supported");
      Field::Elem omega = 0;
      for (Field::Elem a = 1; a < f->size(); ++a) {
        if (!f->is_square(a)) {
          omega = a;
          break;
        }
      }
      f = Field::quadratic_extension(f, omega);
    }
    if (f->size() != q) throw UnknownSpec("unsupported field order " + std::to_string(q));
    return f;
  }
  throw UnknownSpec("unsupported field order " + std::to_string(q));
}

/// SL_2(q) acting on the q^2 - 1 nonzero vectors (a, b), point a + q b - 1.
std::shared_ptr<NamedGroup> sl2_perm(std::uint64_t q) {
  if (q * q - 1 > 0xffff) throw UnknownSpec("SL2(q) too large for the vector action");
  const auto f = field_of_order(q);
  const unsigned p = f->characteristic();
  std::vector<Perm> gens;
  for (std::uint64_t basis = 1; basis < q; basis *= p) {
    for (int lower = 0; lower < 2; ++lower) {
      std::vector<Perm::Point> img(q * q - 1);
      for (std::uint64_t v = 1; v < q * q; ++v) {
        Field::Elem a = v % q, b = v / q;
        if (lower) {
          b = f->add(b, f->mul(basis, a));
        } else {
          a = f->add(a, f->mul(basis, b));
        }
        img[v - 1] = static_cast<Perm::Point>(a + q * b - 1);
      }
      gens.emplace_back(std::move(img));
    }
  }
  return atomic("SL2(" + std::to_string(q) + ")", q * q - 1, std::move(gens), q * (q * q - 1));
}

std::shared_ptr<NamedGroup> quaternion(std::uint64_t order) {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < order) ++k;
  if ((std::uint64_t{1} << k) != order || k < 3 || k > 6) throw UnknownSpec("quat(2^k) supported for 3 <= k <= 6");
  const auto frame = sl2_with_quaternion_frame(k - 3);
  auto g = std::make_shared<NamedGroup>();
  g->spec = "quat(" + std::to_string(order) + ")";
  g->group = regular_representation(frame.r);
  g->degree = order;
  g->closed_form_order = order;
  return g;
}

// Nine points in blocks {0,1,2}, {3,4,5}, {6,7,8}; the base C3^3 rotates
// each block and the inversion d fixes the first point of every block.
std::vector<Perm> base_c3_cubed() {
  return {Perm::from_cycles(9, Cycles{{0, 1, 2}}), Perm::from_cycles(9, Cycles{{3, 4, 5}}),
          Perm::from_cycles(9, Cycles{{6, 7, 8}})};
}
Perm blockwise_inversion() { return Perm::from_cycles(9, Cycles{{1, 2}, {4, 5}, {7, 8}}); }
Perm swap_blocks_01() { return Perm::from_cycles(9, Cycles{{0, 3}, {1, 4}, {2, 5}}); }
Perm cycle_blocks() { return Perm::from_cycles(9, Cycles{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}); }

std::shared_ptr<NamedGroup> m108() {
  auto gens = base_c3_cubed();
  gens.push_back(blockwise_inversion());
  gens.push_back(swap_blocks_01());
  auto g = atomic("m108", 9, std::move(gens), 108);
  g->sylow_basis = base_c3_cubed();
  return g;
}

std::shared_ptr<NamedGroup> m324() {
  auto gens = base_c3_cubed();
  gens.push_back(blockwise_inversion());
  gens.push_back(swap_blocks_01());
  gens.push_back(cycle_blocks());
  auto g = atomic("m324", 9, std::move(gens), 324);
  g->wreath_c3 = WreathC3Frame{base_c3_cubed(), cycle_blocks(), {blockwise_inversion(), swap_blocks_01()}};
  return g;
}

/// Generalized dihedral group of C3 x C3: translations of F_3^2 and negation.
/// Point 3a + b is the vector (a, b).
std::shared_ptr<NamedGroup> dih_c3xc3() {
  auto translation = [](int da, int db) {
    std::vector<Perm::Point> img(9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) img[3 * a + b] = static_cast<Perm::Point>(3 * ((a + da) % 3) + (b + db) % 3);
    return Perm(std::move(img));
  };
  std::vector<Perm::Point> neg(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) neg[3 * a + b] = static_cast<Perm::Point>(3 * ((3 - a) % 3) + (3 - b) % 3);
  auto g = atomic("dih(C3xC3)", 9, {translation(1, 0), translation(0, 1), Perm(std::move(neg))}, 18);
  g->sylow_basis = {translation(1, 0), translation(0, 1)};
  return g;
}

class Parser {
 public:
  explicit Parser(std::string s) : s_(std::move(s)) {}

  std::shared_ptr<const NamedGroup> parse_all() {
    auto g = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UnknownSpec("cannot parse group spec '" + s_ + "': " + why);
  }
  bool eat(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::uint64_t number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too large");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  std::shared_ptr<const NamedGroup> parse() {
    if (eat("wr(") || eat("x(")) {
      const bool wreath = s_[pos_ - 2] == 'r';
      auto a = parse();
      expect(',');
      auto b = parse();
      expect(')');
      return wreath ? wreath_product(std::move(a), std::move(b)) : direct_product(std::move(a), std::move(b));
    }
    if (eat("GL(")) {
      const auto n = number();
      expect(',');
      if (number() != 2) fail("only GL(n,2) is supported");
      expect(')');
      return gl2(static_cast<unsigned>(n));
    }
    if (eat("SL2(")) {
      const auto q = number();
      expect(')');
      return sl2_perm(q);
    }
    if (eat("quat(")) {
      const auto n = number();
      expect(')');
      return quaternion(n);
    }
    if (eat("dih(C3xC3)")) return dih_c3xc3();
    if (eat("m108")) return m108();
    if (eat("m324")) return m324();
    if (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '1') {
        ++pos_;
        return atomic("1", 1, {}, 1);
      }
      if (c == 'S' || c == 'A' || c == 'C' || c == 'D') {
        ++pos_;
        const auto n = number();
        if (n > 60) fail("degree too large");
        const auto k = static_cast<unsigned>(n);
        if (c == 'S') return symmetric(k);
        if (c == 'A') return alternating(k);
        if (c == 'C') return cyclic(k);
        return dihedral(k);
      }
    }
    fail("unknown group name");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::shared_ptr<const NamedGroup> wreath_product(std::shared_ptr<const NamedGroup> base,
                                                 std::shared_ptr<const NamedGroup> top) {
  const std::size_t m = base->degree, k = top->degree;
  if (m * k > 0xffff) throw Error("wreath product degree too large");
  auto g = std::make_shared<NamedGroup>();
  g->spec = "wr(" + base->spec + "," + top->spec + ")";
  g->kind = NamedGroup::Kind::kWreath;
  g->degree = m * k;
  std::uint64_t order = top->closed_form_order;
  for (std::size_t i = 0; i < k; ++i) order *= base->closed_form_order;
  g->closed_form_order = order;

  std::vector<Perm> base_gens, top_gens;
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Perm::Point> block;
    for (std::size_t i = 0; i < m; ++i) block.push_back(static_cast<Perm::Point>(b * m + i));
    g->blocks.push_back(std::move(block));
    for (const auto& s : base->group.generators()) {
      std::vector<Perm::Point> img(m * k);
      for (std::size_t i = 0; i < m * k; ++i) img[i] = static_cast<Perm::Point>(i);
      for (std::size_t i = 0; i < m; ++i) img[b * m + i] = static_cast<Perm::Point>(b * m + s[i]);
      base_gens.emplace_back(std::move(img));
    }
  }
  for (const auto& t : top->group.generators()) {
    std::vector<Perm::Point> img(m * k);
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t i = 0; i < m; ++i) img[b * m + i] = static_cast<Perm::Point>(t[b] * m + i);
    top_gens.emplace_back(std::move(img));
  }
  std::vector<Perm> gens = base_gens;
  gens.insert(gens.end(), top_gens.begin(), top_gens.end());
  g->group = make_perm_group(m * k, std::move(gens));
  if (base->spec == "C3" && top->spec == "C3")
    g->wreath_c3 = WreathC3Frame{base_gens, top_gens.front(), {}};
  g->component_generators = {std::move(base_gens), std::move(top_gens)};
  g->factors = {std::move(base), std::move(top)};
  return g;
}

std::shared_ptr<const NamedGroup> direct_product(std::shared_ptr<const NamedGroup> a,
                                                 std::shared_ptr<const NamedGroup> b) {
  const std::size_t da = a->degree, db = b->degree;
  if (da + db > 0xffff) throw Error("direct product degree too large");
  auto g = std::make_shared<NamedGroup>();
  g->spec = "x(" + a->spec + "," + b->spec + ")";
  g->kind = NamedGroup::Kind::kDirect;
  g->degree = da + db;
  g->closed_form_order = a->closed_form_order * b->closed_form_order;
  std::vector<Perm> ga, gb;
  for (const auto& s : a->group.generators()) {
    std::vector<Perm::Point> img(da + db);
    for (std::size_t i = 0; i < da + db; ++i) img[i] = static_cast<Perm::Point>(i < da ? s[i] : i);
    ga.emplace_back(std::move(img));
  }
  for (const auto& s : b->group.generators()) {
    std::vector<Perm::Point> img(da + db);
    for (std::size_t i = 0; i < da + db; ++i) img[i] = static_cast<Perm::Point>(i < da ? i : da + s[i - da]);
    gb.emplace_back(std::move(img));
  }
  std::vector<Perm> gens = ga;
  gens.insert(gens.end(), gb.begin(), gb.end());
  g->group = make_perm_group(da + db, std::move(gens));
  g->component_generators = {std::move(ga), std::move(gb)};
  g->factors = {std::move(a), std::move(b)};
  return g;
}

std::shared_ptr<const NamedGroup> named_group(const std::string& spec) {
  // Registry groups are immutable, so repeated lookups share one construction.
  static std::mutex mu;
  // keyed on the cap too: a group built under a small cap is only a chain
  static std::map<std::pair<std::string, std::uint64_t>, std::shared_ptr<const NamedGroup>> cache;
  std::string key;
  for (const char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) key.push_back(c);
  const std::pair slot{key, enumeration_cap()};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(slot); it != cache.end()) return it->second;
  }
  auto g = Parser(key).parse_all();
  std::lock_guard lock(mu);
  return cache.emplace(slot, std::move(g)).first->second;
}

QuaternionFrame sl2_with_quaternion_frame(unsigned l) {
  QuaternionFrame fr;
  fr.tower = field_tower(l);
  const Field* f = fr.tower.fq2.get();
  const Field& fq = *fr.tower.fq;
  const auto w = fr.tower.omega;
  const auto z = f->adjoined();
  fr.x = Mat2::diag(f, w, f->inv(w));
  fr.y = Mat2(f, 0, f->neg(1), 1, 0);
  fr.c = Mat2::diag(f, f->inv(z), z);
  for (std::uint64_t basis = 1; basis < fq.size(); basis *= fq.characteristic()) {
    fr.sl2_generators.emplace_back(f, 1, basis, 0, 1);
    fr.sl2_generators.emplace_back(f, 1, 0, basis, 1);
  }
  const std::uint64_t q = fq.size();
  fr.sl2_order = q * (q * q - 1);
  fr.r = FiniteGroup<Mat2>::generate(Mat2::identity(f), {fr.x, fr.y});
  return fr;
}

FiniteGroup<Mat2> enumerate_sl2(const QuaternionFrame& frame, std::uint64_t cap) {
  return FiniteGroup<Mat2>::generate(Mat2::identity(frame.tower.fq2.get()), frame.sl2_generators, cap);
}

}  // namespace solw
