#include <algorithm>

#include "cm/hopf.hpp"

// For n >= 2 the deltas are not free: they satisfy
//   δ^i_{jk,l} − δ^i_{jl,k} = Σ_s δ^s_{jl} δ^i_{sk} − δ^s_{jk} δ^i_{sl}
// together with everything obtained from it by [X_m, ·]. Without these the
// coproduct is not multiplicative ([ΔX_1, ΔX_2] != 0). A delta is canonical when its
// lower pair holds the two smallest of its lower indices; canonical deltas are
// algebraically independent, so rewriting every delta to canonical ones gives a normal form.

namespace cm::hopf {

namespace {

using K = Generator::Kind;

// ad X_m on a polynomial in deltas only: append m to each factor in turn.
HopfPoly derive(const HopfPoly& p, int m) {
  HopfPoly r;
  for (const auto& [mono, c] : p.terms())
    for (std::size_t pos = 0; pos < mono.size(); ++pos) {
      Monomial n = mono;
      n[pos] = n[pos].appended(m);
      std::sort(n.begin(), n.end());
      r.add_term(n, c);
    }
  return r;
}

Monomial pair(Generator a, Generator b) {
  Monomial m{a, b};
  std::sort(m.begin(), m.end());
  return m;
}

std::map<std::pair<int, Generator>, HopfPoly>& delta_memo() {
  thread_local std::map<std::pair<int, Generator>, HopfPoly> memo;
  return memo;
}

}  // namespace

void clear_relation_cache() { delta_memo().clear(); }

bool is_canonical(Generator g) {
  return g.kind() != K::Delta || g.tail_length() == 0 || g.c() <= g.tail_at(0);
}

HopfPoly canonical_delta(Generator g, int dim) {
  if (is_canonical(g)) return HopfPoly::gen(g);
  validate(g, dim);
  auto& memo = delta_memo();
  auto key = std::make_pair(dim, g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int i = g.a(), j = g.b(), k = g.c();
  IndexString tail = g.tail();
  int l = tail.front();
  IndexString rest(tail.begin() + 1, tail.end());
  IndexString moved = rest;
  moved.push_back(k);

  // δ^i_{jk,l} = δ^i_{jl,k} + Σ_s δ^s_{jl} δ^i_{sk} − δ^s_{jk} δ^i_{sl}
  HopfPoly q;
  for (int s = 1; s <= dim; ++s) {
    q.add_term(pair(Generator::delta(s, j, l), Generator::delta(i, s, k)), 1);
    q.add_term(pair(Generator::delta(s, j, k), Generator::delta(i, s, l)), -1);
  }
  for (int m : rest) q = derive(q, m);
  q.add_term({Generator::delta(i, j, l, moved)}, 1);
  HopfPoly r = canonical(q, dim);
  return memo.emplace(key, std::move(r)).first->second;
}

HopfPoly canonical(const HopfPoly& p, int dim) {
  HopfPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (std::all_of(m.begin(), m.end(), is_canonical)) {
      r.add_term(m, c);
      continue;
    }
    // Deltas sit at the end of a PBW monomial and commute, so substituting
    // polynomials in deltas keeps the prefix in order.
    auto first = std::find_if(m.begin(), m.end(), [](Generator g) { return g.kind() == K::Delta; });
    Monomial prefix(m.begin(), first);
    HopfPoly tail = HopfPoly::unit();
    for (auto it = first; it != m.end(); ++it) tail = tail * canonical_delta(*it, dim);
    for (const auto& [tm, tc] : tail.terms()) {
      Monomial n = prefix;
      n.insert(n.end(), tm.begin(), tm.end());
      r.add_term(n, c * tc);
    }
  }
  return r;
}

TensorPoly canonical(const TensorPoly& t, int dim) {
  TensorPoly r;
  for (const auto& [k, c] : t.terms()) {
    HopfPoly left = canonical(HopfPoly::monomial(k[0]), dim);
    HopfPoly right = canonical(HopfPoly::monomial(k[1]), dim);
    for (const auto& [ml, cl] : left.terms())
      for (const auto& [mr, cr] : right.terms()) r.add_term({ml, mr}, c * cl * cr);
  }
  return r;
}

HopfPoly multiply(const HopfPoly& a, const HopfPoly& b, int dim) { return canonical(a * b, dim); }

TensorPoly multiply(const TensorPoly& a, const TensorPoly& b, int dim) { return canonical(a * b, dim); }

HopfPoly commutator(const HopfPoly& a, const HopfPoly& b, int dim) { return canonical(commutator(a, b), dim); }

TensorPoly commutator(const TensorPoly& a, const TensorPoly& b, int dim) { return canonical(commutator(a, b), dim); }

}  // namespace cm::hopf
