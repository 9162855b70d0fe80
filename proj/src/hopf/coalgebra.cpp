#include <unordered_map>

#include "cm/hopf.hpp"

namespace cm::hopf {

void clear_mul_cache();
void clear_relation_cache();

namespace {

using K = Generator::Kind;

struct CoCache {
  std::map<std::pair<int, Generator>, TensorPoly> delta_gen;
  std::map<std::pair<int, Monomial>, TensorPoly> delta_mono;
  std::map<std::pair<int, Generator>, HopfPoly> s_gen;
  std::map<std::pair<int, Monomial>, HopfPoly> s_mono;
};

CoCache& cache() {
  thread_local CoCache c;
  return c;
}

TensorPoly primitive(Generator g) {
  TensorPoly t;
  t.add_term({Monomial{g}, Monomial{}}, 1);
  t.add_term({Monomial{}, Monomial{g}}, 1);
  return t;
}

const TensorPoly& coproduct_monomial(const Monomial& m, int dim) {
  auto key = std::make_pair(dim, m);
  auto& memo = cache().delta_mono;
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  TensorPoly r;
  if (m.empty()) {
    r.add_term({Monomial{}, Monomial{}}, 1);
  } else {
    // Δ(g1 ... gr) = Δ(g1 ... g(r-1)) Δ(gr); prefixes are shared between monomials
    Monomial prefix(m.begin(), m.end() - 1);
    r = multiply(coproduct_monomial(prefix, dim), coproduct(m.back(), dim), dim);
  }
  return cache().delta_mono.emplace(key, std::move(r)).first->second;
}

const HopfPoly& antipode_monomial(const Monomial& m, int dim) {
  auto key = std::make_pair(dim, m);
  auto& memo = cache().s_mono;
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  HopfPoly r;
  if (m.empty()) {
    r = HopfPoly::unit();
  } else {
    // S(g1 g2 ... gn) = S(g2 ... gn) S(g1)
    Monomial suffix(m.begin() + 1, m.end());
    r = multiply(antipode_monomial(suffix, dim), antipode(m.front(), dim), dim);
  }
  return cache().s_mono.emplace(key, std::move(r)).first->second;
}

}  // namespace

TensorPoly coproduct(Generator g, int dim) {
  validate(g, dim);
  auto key = std::make_pair(dim, g);
  auto& memo = cache().delta_gen;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  TensorPoly r;
  if (!is_canonical(g)) {
    r = coproduct(canonical_delta(g, dim), dim);
  } else if (g.kind() == K::X) {
    // Δ(X_i) = X_i ⊗ 1 + 1 ⊗ X_i + Σ_{j,k} δ^k_{ji} ⊗ Y^j_k
    r = primitive(g);
    int i = g.a();
    for (int j = 1; j <= dim; ++j)
      for (int k = 1; k <= dim; ++k) r.add_term({Monomial{Generator::delta(k, j, i)}, Monomial{Generator::y(j, k)}}, 1);
  } else if (g.kind() == K::Y || g.tail_length() == 0) {
    r = primitive(g);
  } else {
    // Δ(δ_{a l}) = [Δ(X_l), Δ(δ_a)], peeling the largest tail index
    IndexString tail = g.tail();
    int l = tail.back();
    tail.pop_back();
    r = commutator(coproduct(Generator::x(l), dim), coproduct(Generator::delta(g.a(), g.b(), g.c(), tail), dim), dim);
  }
  return cache().delta_gen.emplace(key, std::move(r)).first->second;
}

TensorPoly coproduct(const HopfPoly& p, int dim) {
  TensorPoly r;
  for (const auto& [m, c] : p.terms())
    for (const auto& [k, v] : coproduct_monomial(m, dim).terms()) r.add_term(k, c * v);
  return r;
}

Rational counit(const HopfPoly& p) { return p.coefficient({}); }

HopfPoly antipode(Generator g, int dim) {
  validate(g, dim);
  auto key = std::make_pair(dim, g);
  auto& memo = cache().s_gen;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  HopfPoly r;
  if (!is_canonical(g)) {
    r = antipode(canonical_delta(g, dim), dim);
  } else if (g.kind() == K::X) {
    // S(X_i) = −X_i + Σ_{j,k} δ^k_{ji} Y^j_k
    r = HopfPoly::gen(g, -1);
    int i = g.a();
    for (int j = 1; j <= dim; ++j)
      for (int k = 1; k <= dim; ++k) r += HopfPoly::gen(Generator::delta(k, j, i)) * HopfPoly::gen(Generator::y(j, k));
  } else if (g.kind() == K::Y || g.tail_length() == 0) {
    r = HopfPoly::gen(g, -1);
  } else {
    // S(δ_{a l}) = [S(δ_a), S(X_l)]
    IndexString tail = g.tail();
    int l = tail.back();
    tail.pop_back();
    r = commutator(antipode(Generator::delta(g.a(), g.b(), g.c(), tail), dim), antipode(Generator::x(l), dim), dim);
  }
  return cache().s_gen.emplace(key, std::move(r)).first->second;
}

HopfPoly antipode(const HopfPoly& p, int dim) {
  HopfPoly r;
  for (const auto& [m, c] : p.terms()) r += antipode_monomial(m, dim) * c;
  return r;
}

Tensor3 coproduct_left(const TensorPoly& t, int dim) {
  Tensor3 r;
  for (const auto& [k, c] : t.terms())
    for (const auto& [d, v] : coproduct_monomial(k[0], dim).terms()) r.add_term({d[0], d[1], k[1]}, c * v);
  return r;
}

Tensor3 coproduct_right(const TensorPoly& t, int dim) {
  Tensor3 r;
  for (const auto& [k, c] : t.terms())
    for (const auto& [d, v] : coproduct_monomial(k[1], dim).terms()) r.add_term({k[0], d[0], d[1]}, c * v);
  return r;
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Generator g : m) h = (h ^ g.key()) * 1099511628211ull;
    return h;
  }
};

// Monomials interned to small ids; three ids packed into one 64-bit key.
class Interner {
 public:
  std::uint64_t id(const Monomial& m) {
    auto [it, fresh] = ids_.try_emplace(m, ids_.size());
    return it->second;
  }
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> ids_;
};

bool small_integer(const Rational& c) { return c.get_den() == 1 && abs(c.get_num()) < (1l << 31); }

// The difference (Δ ⊗ id)Δ(p) − (id ⊗ Δ)Δ(p) with coefficients in Coeff; Convert maps a Rational into Coeff.
template <typename Coeff, typename Convert>
bool coassoc_difference_vanishes(const TensorPoly& d, int dim, Convert convert) {
  constexpr int kBits = 21;
  struct FlatTerm {
    std::uint64_t a, b;
    Coeff c;
  };
  Interner ids;
  std::unordered_map<Monomial, std::vector<FlatTerm>, MonomialHash> flat;
  auto flat_coproduct = [&](const Monomial& m) -> const std::vector<FlatTerm>& {
    auto [it, fresh] = flat.try_emplace(m);
    if (fresh)
      for (const auto& [e, v] : coproduct_monomial(m, dim).terms())
        it->second.push_back({ids.id(e[0]), ids.id(e[1]), convert(v)});
    return it->second;
  };
  std::unordered_map<std::uint64_t, Coeff> diff;
  diff.reserve(4 * d.size());
  auto add = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, const Coeff& v) {
    auto [it, fresh] = diff.try_emplace((a << (2 * kBits)) | (b << kBits) | c, v);
    if (!fresh) it->second += v;
  };
  for (const auto& [k, c] : d.terms()) {
    std::uint64_t left = ids.id(k[0]), right = ids.id(k[1]);
    Coeff cc = convert(c);
    const auto& l = flat_coproduct(k[0]);
    const auto& r = flat_coproduct(k[1]);
    if (ids.size() >= (1u << kBits)) throw std::length_error("check_coassoc: too many distinct monomials");
    for (const auto& t : l) add(t.a, t.b, right, cc * t.c);
    for (const auto& t : r) add(left, t.a, t.b, -(cc * t.c));
  }
  for (const auto& [k, c] : diff)
    if (c != 0) return false;
  return true;
}

}  // namespace

// Same comparison as coproduct_left(d) == coproduct_right(d), accumulated as one difference.
// Integer coefficients below 2^31 give products below 2^62, so 128-bit sums stay exact.
bool check_coassoc(const HopfPoly& p, int dim) {
  TensorPoly d = coproduct(p, dim);
  bool integral = true;
  for (const auto& [k, c] : d.terms()) integral = integral && small_integer(c);
  for (const auto& [k, c] : d.terms())
    for (int side = 0; side < 2 && integral; ++side)
      for (const auto& [e, v] : coproduct_monomial(k[side], dim).terms()) integral = integral && small_integer(v);
  if (integral) return coassoc_difference_vanishes<__int128>(d, dim, [](const Rational& c) { return __int128(c.get_num().get_si()); });
  return coassoc_difference_vanishes<Rational>(d, dim, [](const Rational& c) { return c; });
}

bool check_counit(const HopfPoly& p, int dim) {
  TensorPoly d = coproduct(p, dim);
  HopfPoly want = canonical(p, dim);
  HopfPoly left, right;
  for (const auto& [k, c] : d.terms()) {
    if (k[0].empty()) left.add_term(k[1], c);
    if (k[1].empty()) right.add_term(k[0], c);
  }
  return left == want && right == want;
}

bool check_antipode(const HopfPoly& p, int dim) {
  TensorPoly d = coproduct(p, dim);
  HopfPoly want = HopfPoly::unit() * counit(p);
  HopfPoly left, right;
  for (const auto& [k, c] : d.terms()) {
    left += multiply(antipode(HopfPoly::monomial(k[0]), dim), HopfPoly::monomial(k[1], c), dim);
    right += multiply(HopfPoly::monomial(k[0], c), antipode(HopfPoly::monomial(k[1]), dim), dim);
  }
  return left == want && right == want;
}

bool in_h0(const HopfPoly& p, int m) {
  for (const auto& [mono, c] : p.terms()) {
    if (mono.empty()) return false;
    for (Generator g : mono)
      if (g.kind() != K::Delta || g.tail_length() > m) return false;
  }
  return true;
}

bool in_h0_tensor(const TensorPoly& t, int m) {
  for (const auto& [k, c] : t.terms())
    if (!in_h0(HopfPoly::monomial(k[0]), m) || !in_h0(HopfPoly::monomial(k[1]), m)) return false;
  return true;
}

TensorPoly r_term(int k, int j, int i, const IndexString& tail, int dim) {
  Generator g = Generator::delta(k, j, i, tail);
  TensorPoly r = coproduct(g, dim) - canonical(primitive(g), dim);
  int m = static_cast<int>(tail.size()) - 1;
  if (!r.is_zero() && !in_h0_tensor(r, m))
    throw GradingViolation("R term of " + str(g) + " leaves H0_" + std::to_string(m) + " (x) H0_" + std::to_string(m));
  return r;
}

void clear_caches() {
  clear_mul_cache();
  clear_relation_cache();
  cache().delta_gen.clear();
  cache().delta_mono.clear();
  cache().s_gen.clear();
  cache().s_mono.clear();
}

}  // namespace cm::hopf
