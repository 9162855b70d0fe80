#include <algorithm>

#include "cm/trees.hpp"

namespace cm::trees {

using hopf::Generator;
using hopf::Monomial;

namespace {

bool is_ancestor(const DecoratedTree& t, int a, int v) {
  for (v = t.parent(v); v >= 0; v = t.parent(v))
    if (v == a) return true;
  return false;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t p = 2; p <= n; ++p) f *= static_cast<long>(p);
  return f;
}

}  // namespace

std::vector<Cut> cuts(const DecoratedTree& t, bool admissible_only) {
  // edges in application order: depth ascending, then planar (preorder) position
  std::vector<int> order = t.preorder();
  std::vector<int> pos(t.size());
  for (int p = 0; p < t.size(); ++p) pos[order[p]] = p;
  std::vector<int> edges;
  for (int v = 1; v < t.size(); ++v) edges.push_back(v);
  std::sort(edges.begin(), edges.end(), [&](int a, int b) {
    int da = t.depth(a), db = t.depth(b);
    return da != db ? da < db : pos[a] < pos[b];
  });

  std::vector<Cut> out;
  std::size_t n = edges.size();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Cut c;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (1UL << b)) c.edges.push_back(edges[b]);
    c.admissible = true;
    for (int a : c.edges)
      for (int v : c.edges)
        if (a != v && is_ancestor(t, a, v)) c.admissible = false;
    if (c.admissible || !admissible_only) out.push_back(std::move(c));
  }
  return out;
}

CutState CutState::initial(const DecoratedTree& t) {
  CutState s;
  s.v.resize(t.size());
  s.v[0] = {true, t.k(), t.j(), t.i(), 0};
  for (int v = 1; v < t.size(); ++v) s.v[v].index = t.index(v);
  return s;
}

std::vector<CutState> single_cut(const DecoratedTree& t, int edge, const CutState& s, int dim) {
  std::vector<CutState> out;
  int p = t.parent(edge);
  int d = s.v[edge].index;
  const auto& above = s.v[p];
  for (int a = 1; a <= dim; ++a) {
    if (above.head) {
      // pick a lower index: +
      CutState x = s;
      x.v[edge] = {true, a, above.lower1, d, 0};
      x.v[p].lower1 = a;
      out.push_back(std::move(x));
      CutState y = s;
      y.v[edge] = {true, a, above.lower2, d, 0};
      y.v[p].lower2 = a;
      out.push_back(std::move(y));
      // pick the upper index: -
      CutState u = s;
      u.v[edge] = {true, above.upper, a, d, 0};
      u.v[p].upper = a;
      u.coeff = -u.coeff;
      out.push_back(std::move(u));
    } else {
      CutState x = s;
      x.v[edge] = {true, a, above.index, d, 0};
      x.v[p].index = a;
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<CutTerm> apply_cut(const DecoratedTree& t, const Cut& c, int dim) {
  std::vector<CutState> states{CutState::initial(t)};
  for (int e : c.edges) {
    std::vector<CutState> next;
    for (const auto& s : states)
      for (auto& n : single_cut(t, e, s, dim)) next.push_back(std::move(n));
    states = std::move(next);
  }

  // head of the piece containing v
  std::vector<int> head(t.size());
  for (int v : t.preorder()) {
    bool cut = std::find(c.edges.begin(), c.edges.end(), v) != c.edges.end();
    head[v] = (v == 0 || cut) ? v : head[t.parent(v)];
  }

  std::vector<CutTerm> out;
  for (const auto& s : states) {
    std::map<int, IndexString> tails;
    for (int v = 0; v < t.size(); ++v) {
      tails[head[v]];
      if (head[v] != v) tails[head[v]].push_back(s.v[v].index);
    }
    CutTerm term{s.coeff, {}, {}};
    for (auto& [h, tail] : tails) {
      term.coeff /= factorial(tail.size());
      const auto& hv = s.v[h];
      Generator g = Generator::delta(hv.upper, hv.lower1, hv.lower2, tail);
      (h == 0 ? term.trunk : term.branches).push_back(g);
    }
    std::sort(term.branches.begin(), term.branches.end());
    out.push_back(std::move(term));
  }
  return out;
}

TensorPoly cut_coproduct(const DecoratedTree& t, int dim) {
  TensorPoly r;
  for (const auto& c : cuts(t, true))
    for (const auto& term : apply_cut(t, c, dim)) r.add_term({term.branches, term.trunk}, term.coeff);
  return r;
}

HopfPoly cut_antipode(const DecoratedTree& t, int dim) {
  HopfPoly r;
  for (const auto& c : cuts(t, false)) {
    Rational sign = c.edges.size() % 2 ? -1 : 1;
    for (const auto& term : apply_cut(t, c, dim)) {
      Monomial m = term.branches;
      m.insert(m.end(), term.trunk.begin(), term.trunk.end());
      std::sort(m.begin(), m.end());
      r.add_term(m, -sign * term.coeff);
    }
  }
  return r;
}

namespace {

void check_indices(int k, int j, int i, const IndexString& tail, int dim) {
  hopf::validate(Generator::delta(k, j, i, tail), dim);
}

}  // namespace

TensorPoly coproduct_tree(int k, int j, int i, const IndexString& tail, int dim) {
  check_indices(k, j, i, tail, dim);
  Generator g = Generator::delta(k, j, i, tail);
  TensorPoly r;
  r.add_term({Monomial{g}, Monomial{}}, 1);
  r.add_term({Monomial{}, Monomial{g}}, 1);
  for (const auto& [t, mult] : tree_expand(k, j, i, tail).terms) {
    TensorPoly c = cut_coproduct(t, dim);
    c *= Rational(mult);
    r += c;
  }
  return r;
}

HopfPoly antipode_tree(int k, int j, int i, const IndexString& tail, int dim) {
  check_indices(k, j, i, tail, dim);
  HopfPoly r = HopfPoly::gen(Generator::delta(k, j, i, tail), -1);
  for (const auto& [t, mult] : tree_expand(k, j, i, tail).terms) r += cut_antipode(t, dim) * Rational(mult);
  return r;
}

bool check_rel(int k, int j, int i, int l, int m, int dim) {
  IndexString lm{l, m}, ml{m, l};
  if (!(evaluate(tree_expand(k, j, i, lm)) - evaluate(tree_expand(k, j, i, ml))).is_zero()) return false;
  if (!(hopf::canonical(coproduct_tree(k, j, i, lm, dim), dim) == hopf::canonical(coproduct_tree(k, j, i, ml, dim), dim)))
    return false;
  return hopf::canonical(antipode_tree(k, j, i, lm, dim), dim) == hopf::canonical(antipode_tree(k, j, i, ml, dim), dim);
}

}  // namespace cm::trees
