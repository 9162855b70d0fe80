#include <algorithm>

#include "cm/verify.hpp"

namespace cm::verify {

using hopf::Generator;
using hopf::IndexString;
using hopf::Monomial;

namespace {

Generator d(int k, int j, int i, IndexString tail = {}) { return Generator::delta(k, j, i, std::move(tail)); }

Monomial mono(std::initializer_list<Generator> gs) {
  Monomial m(gs);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TensorPoly formula_d2(int k, int j, int i, int l, int dim) {
  TensorPoly t;
  t.add_term({mono({d(k, j, i, {l})}), Monomial{}}, 1);
  t.add_term({Monomial{}, mono({d(k, j, i, {l})})}, 1);
  for (int a = 1; a <= dim; ++a) {
    t.add_term({mono({d(a, j, l)}), mono({d(k, a, i)})}, 1);
    t.add_term({mono({d(a, i, l)}), mono({d(k, j, a)})}, 1);
    t.add_term({mono({d(k, a, l)}), mono({d(a, j, i)})}, -1);
  }
  return t;
}

HopfPoly formula_sd2(int k, int j, int i, int l, int dim) {
  HopfPoly p = HopfPoly::gen(d(k, j, i, {l}), -1);
  for (int a = 1; a <= dim; ++a) {
    p.add_term(mono({d(a, j, l), d(k, a, i)}), 1);
    p.add_term(mono({d(a, i, l), d(k, j, a)}), 1);
    p.add_term(mono({d(k, a, l), d(a, j, i)}), -1);
  }
  return p;
}

TensorPoly formula_cut2(int k, int j, int i, int l, int m, int dim) {
  TensorPoly t;
  for (int a = 1; a <= dim; ++a)
    for (int b = 1; b <= dim; ++b) {
      t.add_term({mono({d(a, j, l), d(b, a, m)}), mono({d(k, b, i)})}, 1);
      t.add_term({mono({d(a, j, l), d(b, i, m)}), mono({d(k, a, b)})}, 1);
      t.add_term({mono({d(a, j, l), d(k, b, m)}), mono({d(b, a, i)})}, -1);
      t.add_term({mono({d(a, i, l), d(b, j, m)}), mono({d(k, b, a)})}, 1);
      t.add_term({mono({d(a, i, l), d(b, a, m)}), mono({d(k, j, b)})}, 1);
      t.add_term({mono({d(a, i, l), d(k, b, m)}), mono({d(b, j, a)})}, -1);
      t.add_term({mono({d(k, a, l), d(b, j, m)}), mono({d(a, b, i)})}, -1);
      t.add_term({mono({d(k, a, l), d(b, i, m)}), mono({d(a, j, b)})}, -1);
      t.add_term({mono({d(k, a, l), d(a, b, m)}), mono({d(b, j, i)})}, 1);
    }
  return t;
}

std::vector<Block> formula_s_table(int k, int j, int i, int l, int m, int dim) {
  std::vector<Block> out;
  out.push_back({"uncut", HopfPoly::gen(d(k, j, i, {l, m}), -1)});

  HopfPoly chain_low, chain_high, chain_double, fork_l, fork_m, fork_double;
  for (int a = 1; a <= dim; ++a) {
    chain_low.add_term(mono({d(a, l, m), d(k, j, i, {a})}), 1);

    chain_high.add_term(mono({d(a, j, l, {m}), d(k, a, i)}), 1);
    chain_high.add_term(mono({d(a, i, l, {m}), d(k, j, a)}), 1);
    chain_high.add_term(mono({d(k, a, l, {m}), d(a, j, i)}), -1);

    fork_l.add_term(mono({d(a, j, l), d(k, a, i, {m})}), 1);
    fork_l.add_term(mono({d(a, i, l), d(k, j, a, {m})}), 1);
    fork_l.add_term(mono({d(k, a, l), d(a, j, i, {m})}), -1);

    fork_m.add_term(mono({d(a, j, m), d(k, a, i, {l})}), 1);
    fork_m.add_term(mono({d(a, i, m), d(k, j, a, {l})}), 1);
    fork_m.add_term(mono({d(k, a, m), d(a, j, i, {l})}), -1);

    for (int b = 1; b <= dim; ++b) {
      chain_double.add_term(mono({d(b, j, m), d(a, b, l), d(k, a, i)}), -1);
      chain_double.add_term(mono({d(b, l, m), d(a, j, b), d(k, a, i)}), -1);
      chain_double.add_term(mono({d(a, b, m), d(b, j, l), d(k, a, i)}), 1);
      chain_double.add_term(mono({d(b, i, m), d(a, b, l), d(k, j, a)}), -1);
      chain_double.add_term(mono({d(b, l, m), d(a, i, b), d(k, j, a)}), -1);
      chain_double.add_term(mono({d(a, b, m), d(b, i, l), d(k, j, a)}), 1);
      chain_double.add_term(mono({d(b, a, m), d(k, b, l), d(a, j, i)}), 1);
      chain_double.add_term(mono({d(b, l, m), d(k, a, b), d(a, j, i)}), 1);
      chain_double.add_term(mono({d(k, b, m), d(b, a, l), d(a, j, i)}), -1);

      fork_double.add_term(mono({d(a, j, l), d(b, a, m), d(k, b, i)}), -1);
      fork_double.add_term(mono({d(a, j, l), d(b, i, m), d(k, a, b)}), -1);
      fork_double.add_term(mono({d(a, j, l), d(k, b, m), d(b, a, i)}), 1);
      fork_double.add_term(mono({d(a, i, l), d(b, j, m), d(k, b, a)}), -1);
      fork_double.add_term(mono({d(a, i, l), d(b, a, m), d(k, j, b)}), -1);
      fork_double.add_term(mono({d(a, i, l), d(k, b, m), d(b, j, a)}), 1);
      fork_double.add_term(mono({d(k, a, l), d(b, j, m), d(a, b, i)}), 1);
      fork_double.add_term(mono({d(k, a, l), d(b, i, m), d(a, j, b)}), 1);
      fork_double.add_term(mono({d(k, a, l), d(a, b, m), d(b, j, i)}), -1);
    }
  }
  out.push_back({"chain, cut above m", chain_low});
  out.push_back({"chain, cut above l", chain_high});
  out.push_back({"chain, double cut", chain_double});
  out.push_back({"fork, cut above l", fork_l});
  out.push_back({"fork, cut above m", fork_m});
  out.push_back({"fork, double cut", fork_double});
  return out;
}

// ---- helpers

std::vector<Generator> generators(int dim, int max_tail) {
  std::vector<Generator> gens;
  for (int i = 1; i <= dim; ++i) gens.push_back(Generator::x(i));
  for (int j = 1; j <= dim; ++j)
    for (int k = 1; k <= dim; ++k) gens.push_back(Generator::y(j, k));
  // sorted tails of each length
  std::vector<IndexString> tails{{}};
  for (std::size_t p = 0; p < tails.size(); ++p) {
    if (static_cast<int>(tails[p].size()) == max_tail) continue;
    for (int l = tails[p].empty() ? 1 : tails[p].back(); l <= dim; ++l) {
      IndexString t = tails[p];
      t.push_back(l);
      tails.push_back(t);
    }
  }
  for (int k = 1; k <= dim; ++k)
    for (int j = 1; j <= dim; ++j)
      for (int i = j; i <= dim; ++i)
        for (const auto& t : tails) gens.push_back(d(k, j, i, t));
  return gens;
}

Generator random_generator(random::Rng& rng, int dim, int max_tail) {
  std::uniform_int_distribution<int> idx(1, dim), kind(0, 2), len(0, std::max(max_tail, 0));
  switch (kind(rng)) {
    case 0:
      return Generator::x(idx(rng));
    case 1: {
      int j = idx(rng);
      return Generator::y(j, idx(rng));
    }
    default: {
      int k = idx(rng), j = idx(rng), i = idx(rng);
      IndexString t(len(rng));
      for (int& l : t) l = idx(rng);
      return d(k, j, i, t);
    }
  }
}

Monomial random_pbw_monomial(random::Rng& rng, int dim, int max_degree, int max_tail) {
  std::uniform_int_distribution<int> deg(1, std::max(max_degree, 1));
  Monomial m(deg(rng));
  for (auto& g : m) g = random_generator(rng, dim, max_tail);
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<Generator> random_word(random::Rng& rng, int dim, int length, int max_tail) {
  std::vector<Generator> w(length);
  for (auto& g : w) g = random_generator(rng, dim, max_tail);
  return w;
}

}  // namespace cm::verify
