#include <algorithm>
#include <functional>

#include "cm/trees.hpp"

namespace cm::trees {

DecoratedTree::DecoratedTree(int k, int j, int i)
    : k_(k), j_(j), i_(i), index_{0}, parent_{-1}, children_(1) {}

int DecoratedTree::depth(int v) const {
  int d = 0;
  while (parent_[v] >= 0) {
    v = parent_[v];
    ++d;
  }
  return d;
}

std::vector<int> DecoratedTree::preorder() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int v) {
    out.push_back(v);
    for (int c : children_[v]) walk(c);
  };
  walk(0);
  return out;
}

IndexString DecoratedTree::decorations() const {
  IndexString d(index_.begin() + 1, index_.end());
  std::sort(d.begin(), d.end());
  return d;
}

int DecoratedTree::max_index() const {
  int m = std::max({k_, j_, i_});
  for (int l : index_) m = std::max(m, l);
  return m;
}

int DecoratedTree::attach(int v, int l) {
  int id = size();
  index_.push_back(l);
  parent_.push_back(v);
  children_.emplace_back();
  children_[v].push_back(id);
  return id;
}

std::vector<int> DecoratedTree::encode() const {
  std::vector<int> e{k_, j_, i_};
  for (int v : preorder()) {
    e.push_back(index_[v]);
    e.push_back(static_cast<int>(children_[v].size()));
  }
  return e;
}

long TreeSum::total() const {
  long n = 0;
  for (const auto& [t, m] : terms) n += m;
  return n;
}

TreeSum tree_expand(int k, int j, int i, const IndexString& tail) {
  TreeSum s;
  s.terms.emplace(DecoratedTree(k, j, i), 1);
  for (int l : tail) {
    TreeSum next;
    for (const auto& [t, m] : s.terms)
      for (int v = 0; v < t.size(); ++v) {
        DecoratedTree u = t;
        u.attach(v, l);
        next.terms[u] += m;
      }
    s = std::move(next);
  }
  return s;
}

namespace {

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t p = 2; p <= n; ++p) f *= static_cast<long>(p);
  return f;
}

}  // namespace

HopfPoly evaluate(const DecoratedTree& t) {
  IndexString d = t.decorations();
  Rational w = 1 / factorial(d.size());
  return HopfPoly::gen(hopf::Generator::delta(t.k(), t.j(), t.i(), d), w);
}

HopfPoly evaluate(const TreeSum& s) {
  HopfPoly r;
  for (const auto& [t, m] : s.terms) r += evaluate(t) * Rational(m);
  return r;
}

}  // namespace cm::trees
