#include <algorithm>
#include <cassert>

#include "cm/hopf.hpp"

namespace cm::hopf {

// ---- HopfPoly

HopfPoly HopfPoly::unit() { return monomial({}, 1); }

HopfPoly HopfPoly::gen(Generator g, const Rational& c) { return monomial({g}, c); }

HopfPoly HopfPoly::monomial(Monomial m, const Rational& c) {
  HopfPoly p;
  p.add_term(m, c);
  return p;
}

Rational HopfPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HopfPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HopfPoly HopfPoly::operator-() const {
  HopfPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

HopfPoly& HopfPoly::operator+=(const HopfPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HopfPoly& HopfPoly::operator-=(const HopfPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HopfPoly& HopfPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

// ---- multiplication by insertion
//
// m·g with m = m'h and h > g:  m'hg = (m'g)h + m'[h,g].
// Every bracket in the table is linear in the generators, so the recursion
// only ever multiplies by single generators.

namespace {

struct MulCache {
  std::map<std::pair<Monomial, Generator>, HopfPoly> gen;
  std::map<std::pair<Monomial, Monomial>, HopfPoly> mono;
};

MulCache& cache() {
  thread_local MulCache c;
  return c;
}

const HopfPoly& mul_gen(const Monomial& m, Generator g);

void accumulate_mul_gen(HopfPoly& out, const Monomial& m, Generator g, const Rational& c) {
  if (m.empty() || m.back() <= g) {
    Monomial n = m;
    n.push_back(g);
    out.add_term(n, c);
    return;
  }
  for (const auto& [mm, cc] : mul_gen(m, g).terms()) out.add_term(mm, c * cc);
}

const HopfPoly& mul_gen(const Monomial& m, Generator g) {
  auto key = std::make_pair(m, g);
  auto& memo = cache().gen;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Generator h = m.back();
  Monomial rest(m.begin(), m.end() - 1);
  HopfPoly left;
  accumulate_mul_gen(left, rest, g, 1);
  HopfPoly r;
  for (const auto& [mm, cc] : left.terms()) accumulate_mul_gen(r, mm, h, cc);
  HopfPoly bracket = commutator_table(h, g);
  for (const auto& [bm, bc] : bracket.terms()) accumulate_mul_gen(r, rest, bm.front(), bc);
  return memo.emplace(key, std::move(r)).first->second;
}

const HopfPoly& mul_mono(const Monomial& a, const Monomial& b) {
  auto key = std::make_pair(a, b);
  auto& memo = cache().mono;
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  HopfPoly cur = HopfPoly::monomial(a);
  for (Generator g : b) {
    HopfPoly next;
    for (const auto& [m, c] : cur.terms()) accumulate_mul_gen(next, m, g, c);
    cur = std::move(next);
  }
  return memo.emplace(key, std::move(cur)).first->second;
}

void accumulate_product(HopfPoly& out, const Monomial& a, const Monomial& b, const Rational& c) {
  if (a.empty() || b.empty() || a.back() <= b.front()) {
    Monomial n = a;
    n.insert(n.end(), b.begin(), b.end());
    out.add_term(n, c);
    return;
  }
  for (const auto& [m, v] : mul_mono(a, b).terms()) out.add_term(m, c * v);
}

}  // namespace

void clear_mul_cache() {
  cache().gen.clear();
  cache().mono.clear();
}

HopfPoly operator*(const HopfPoly& a, const HopfPoly& b) {
  HopfPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) accumulate_product(r, ma, mb, ca * cb);
  return r;
}

HopfPoly commutator(const HopfPoly& a, const HopfPoly& b) { return a * b - b * a; }

// ---- straightening of words

namespace {

long inversions(const std::vector<Generator>& w) {
  long n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[j] < w[i]) ++n;
  return n;
}

bool smaller(const std::vector<Generator>& a, const std::vector<Generator>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return inversions(a) < inversions(b);
}

}  // namespace

HopfPoly normal_form(const Word& w) {
  HopfPoly result;
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    if (cur.coeff == 0) continue;
    auto& g = cur.gens;
    std::size_t k = 0;
    while (k + 1 < g.size() && !(g[k + 1] < g[k])) ++k;
    if (k + 1 >= g.size()) {
      result.add_term(g, cur.coeff);
      continue;
    }
    // g[k] g[k+1] = g[k+1] g[k] + [g[k], g[k+1]]
    Word swapped = cur;
    std::swap(swapped.gens[k], swapped.gens[k + 1]);
    if (!smaller(swapped.gens, g)) throw std::logic_error("straightening made no progress");
    HopfPoly bracket = commutator_table(g[k], g[k + 1]);
    for (const auto& [m, c] : bracket.terms()) {
      Word shorter;
      shorter.coeff = cur.coeff * c;
      shorter.gens.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k));
      shorter.gens.push_back(m.front());
      shorter.gens.insert(shorter.gens.end(), g.begin() + static_cast<std::ptrdiff_t>(k) + 2, g.end());
      if (!smaller(shorter.gens, g)) throw std::logic_error("straightening made no progress");
      stack.push_back(std::move(shorter));
    }
    stack.push_back(std::move(swapped));
  }
  return result;
}

HopfPoly normal_form(const std::vector<Word>& words) {
  HopfPoly r;
  for (const auto& w : words) r += normal_form(w);
  return r;
}

// ---- tensors

TensorPoly tensor(const HopfPoly& a, const HopfPoly& b) {
  TensorPoly t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add_term({ma, mb}, ca * cb);
  return t;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      HopfPoly left, right;
      accumulate_product(left, ka[0], kb[0], 1);
      accumulate_product(right, ka[1], kb[1], 1);
      Rational c = ca * cb;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) r.add_term({ml, mr}, c * cl * cr);
    }
  return r;
}

TensorPoly commutator(const TensorPoly& a, const TensorPoly& b) { return a * b - b * a; }

HopfPoly multiply(const TensorPoly& t) {
  HopfPoly r;
  for (const auto& [k, c] : t.terms()) accumulate_product(r, k[0], k[1], c);
  return r;
}

}  // namespace cm::hopf
