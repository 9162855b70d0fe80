#include <algorithm>
#include <map>

#include "cm/hopf.hpp"

namespace cm::hopf {

namespace {

void check_index(int v) {
  if (v < 1 || v > kMaxIndex) throw std::out_of_range("index " + std::to_string(v) + " outside 1.." + std::to_string(kMaxIndex));
}

std::uint64_t pack(Generator::Kind kind, int a, int b, int c, const IndexString& tail) {
  if (static_cast<int>(tail.size()) > kMaxTail)
    throw std::length_error("tail longer than " + std::to_string(kMaxTail));
  std::uint64_t k = static_cast<std::uint64_t>(kind) << 60;
  k |= static_cast<std::uint64_t>(a) << 56;
  k |= static_cast<std::uint64_t>(b) << 52;
  k |= static_cast<std::uint64_t>(c) << 48;
  for (std::size_t p = 0; p < tail.size(); ++p) k |= static_cast<std::uint64_t>(tail[p]) << (44 - 4 * p);
  return k;
}

}  // namespace

Generator Generator::x(int i) {
  check_index(i);
  return Generator(pack(Kind::X, i, 0, 0, {}));
}

Generator Generator::y(int j, int k) {
  check_index(j);
  check_index(k);
  return Generator(pack(Kind::Y, j, k, 0, {}));
}

Generator Generator::delta(int k, int j, int i, IndexString tail) {
  check_index(k);
  check_index(j);
  check_index(i);
  for (int l : tail) check_index(l);
  std::sort(tail.begin(), tail.end());
  return Generator(pack(Kind::Delta, k, std::min(j, i), std::max(j, i), tail));
}

int Generator::tail_length() const {
  int n = 0;
  while (n < kMaxTail && tail_at(n) != 0) ++n;
  return n;
}

IndexString Generator::tail() const {
  IndexString t;
  for (int p = 0; p < kMaxTail && tail_at(p) != 0; ++p) t.push_back(tail_at(p));
  return t;
}

Generator Generator::appended(int l) const {
  IndexString t = tail();
  t.push_back(l);
  return delta(a(), b(), c(), std::move(t));
}

int Generator::max_index() const {
  int m = std::max({a(), b(), c()});
  for (int p = 0; p < kMaxTail && tail_at(p) != 0; ++p) m = std::max(m, tail_at(p));
  return m;
}

void validate(Generator g, int dim) {
  int m = g.max_index();
  if (m > dim) throw std::out_of_range("index " + std::to_string(m) + " exceeds dim " + std::to_string(dim));
}

int degree(const Monomial& m) { return static_cast<int>(m.size()); }

bool print_order(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

// ---- commutators

namespace {

using K = Generator::Kind;

int kron(int a, int b) { return a == b ? 1 : 0; }

void add_gen(HopfPoly& p, Generator g, int c) {
  if (c != 0) p.add_term({g}, c);
}

HopfPoly yy(Generator g, Generator h) {
  // [Y^i_j, Y^k_l] = δ^i_l Y^k_j − δ^k_j Y^i_l
  int i = g.a(), j = g.b(), k = h.a(), l = h.b();
  HopfPoly r;
  add_gen(r, Generator::y(k, j), kron(i, l));
  add_gen(r, Generator::y(i, l), -kron(k, j));
  return r;
}

HopfPoly yx(Generator y, Generator x) {
  // [Y^p_q, X_i] = δ^p_i X_q
  HopfPoly r;
  add_gen(r, Generator::x(y.b()), kron(y.a(), x.a()));
  return r;
}

HopfPoly ydelta(Generator y, Generator d) {
  thread_local std::map<std::pair<Generator, Generator>, HopfPoly> memo;
  auto key = std::make_pair(y, d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int p = y.a(), q = y.b();
  HopfPoly r;
  IndexString tail = d.tail();
  if (tail.empty()) {
    // [Y^p_q, δ^k_{lm}] = δ^p_l δ^k_{qm} + δ^p_m δ^k_{lq} − δ^k_q δ^p_{lm}
    int k = d.a(), l = d.b(), m = d.c();
    add_gen(r, Generator::delta(k, q, m), kron(p, l));
    add_gen(r, Generator::delta(k, l, q), kron(p, m));
    add_gen(r, Generator::delta(p, l, m), -kron(k, q));
  } else {
    // [Y, δ_{a i}] = [[Y, X_i], δ_a] + [X_i, [Y, δ_a]]
    int i = tail.back();
    tail.pop_back();
    Generator da = Generator::delta(d.a(), d.b(), d.c(), tail);
    if (p == i) add_gen(r, da.appended(q), 1);
    HopfPoly inner = ydelta(y, da);
    for (const auto& [m, c] : inner.terms()) r.add_term({m.front().appended(i)}, c);
  }
  memo.emplace(key, r);
  return r;
}

}  // namespace

HopfPoly commutator_table(Generator g, Generator h) {
  if (g == h) return {};
  switch (g.kind()) {
    case K::X:
      if (h.kind() == K::Y) return -yx(h, g);
      if (h.kind() == K::Delta) return HopfPoly::gen(h.appended(g.a()));
      return {};
    case K::Y:
      if (h.kind() == K::X) return yx(g, h);
      if (h.kind() == K::Y) return yy(g, h);
      return ydelta(g, h);
    case K::Delta:
      if (h.kind() == K::X) return -HopfPoly::gen(g.appended(h.a()));
      if (h.kind() == K::Y) return -ydelta(h, g);
      return {};
  }
  return {};
}

HopfPoly y_delta_closed_form(Generator y, Generator d) {
  // δ^p_j δ^k_{qi,a} + δ^p_i δ^k_{jq,a} − δ^k_q δ^p_{ji,a} + Σ_r δ^p_{a_r} δ^k_{ji,a[r→q]}
  int p = y.a(), q = y.b(), k = d.a(), j = d.b(), i = d.c();
  IndexString a = d.tail();
  HopfPoly r;
  add_gen(r, Generator::delta(k, q, i, a), kron(p, j));
  add_gen(r, Generator::delta(k, j, q, a), kron(p, i));
  add_gen(r, Generator::delta(p, j, i, a), -kron(k, q));
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s] != p) continue;
    IndexString b = a;
    b[s] = q;
    add_gen(r, Generator::delta(k, j, i, b), 1);
  }
  return r;
}

}  // namespace cm::hopf
