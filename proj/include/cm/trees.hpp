#pragma once

// Decorated planar rooted trees for the deltas: tree expansion, cuts,
// coproduct and antipode by cuts, renderers.

#include <map>
#include <string>
#include <vector>

#include "cm/hopf.hpp"

namespace cm::trees {

using hopf::HopfPoly;
using hopf::IndexString;
using hopf::Rational;
using hopf::TensorPoly;

/// Vertex 0 is the root and carries (k; j, i); every other vertex one lower index.
/// Children lists are planar (left to right).
class DecoratedTree {
 public:
  DecoratedTree(int k, int j, int i);

  int k() const { return k_; }
  int j() const { return j_; }
  int i() const { return i_; }
  int size() const { return static_cast<int>(index_.size()); }
  int index(int v) const { return index_[v]; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int depth(int v) const;
  std::vector<int> preorder() const;
  /// Lower indices of the non-root vertices, sorted.
  IndexString decorations() const;
  int max_index() const;

  /// New rightmost child of v; returns its id.
  int attach(int v, int l);

  /// `t(k;j,i)(l(m))` is the chain root-l-m, `t(k;j,i)(l)(m)` the fork.
  std::string str() const;
  /// Preorder (index, #children) encoding; planar equality.
  std::vector<int> encode() const;
  bool operator<(const DecoratedTree& o) const { return encode() < o.encode(); }
  bool operator==(const DecoratedTree& o) const { return encode() == o.encode(); }

 private:
  int k_, j_, i_;
  std::vector<int> index_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

/// Planar trees with integer multiplicity.
struct TreeSum {
  std::map<DecoratedTree, long> terms;
  long total() const;
};

/// Appending l attaches a rightmost child l to every vertex of every tree: |a|! trees with multiplicity.
TreeSum tree_expand(int k, int j, int i, const IndexString& tail);

/// Cut-free value in H_n: a tree with root (k; j, i) and decorations M counts as delta^k_{ji,M} / |M|!,
/// so tree_expand(A, a) evaluates to delta^A_a.
HopfPoly evaluate(const DecoratedTree& t);
HopfPoly evaluate(const TreeSum& s);

/// A set of edges, each named by its lower (child) vertex, in application order:
/// depth ascending, then planar position.
struct Cut {
  std::vector<int> edges;
  bool admissible = false;
};

/// All non-empty cuts (2^#edges - 1), or only the admissible ones
/// (at most one cut edge on every root-to-leaf path).
std::vector<Cut> cuts(const DecoratedTree& t, bool admissible_only);

/// Current decorations while cuts are applied: a vertex that heads a piece
/// (the root or a cut branch root) carries three indices (upper; lower, lower).
struct CutState {
  struct Vertex {
    bool head = false;
    int upper = 0, lower1 = 0, lower2 = 0;  // head
    int index = 0;                          // otherwise
  };
  Rational coeff = 1;
  std::vector<Vertex> v;
  static CutState initial(const DecoratedTree& t);
};

/// Cuts the edge above `edge`, reading the current decoration of the vertex above it.
/// A head vertex gives three terms (pick a lower index: +, pick the upper index: -),
/// any other vertex one; the summation value is expanded over 1..dim.
std::vector<CutState> single_cut(const DecoratedTree& t, int edge, const CutState& s, int dim);

/// One term of a cut: coeff * (product of branches) (x) trunk, evaluated in H_n.
struct CutTerm {
  Rational coeff;
  hopf::Monomial branches;
  hopf::Monomial trunk;
};
std::vector<CutTerm> apply_cut(const DecoratedTree& t, const Cut& c, int dim);

/// delta (x) 1 + 1 (x) delta + sum over trees and admissible cuts of P (x) R. Raw (not canonicalized).
TensorPoly coproduct_tree(int k, int j, int i, const IndexString& tail, int dim);
/// -delta - sum over trees and all non-empty cuts of (-1)^|C| P R. Raw (not canonicalized).
HopfPoly antipode_tree(int k, int j, int i, const IndexString& tail, int dim);

/// Coproduct / antipode contribution of a single tree (the sum over its cuts).
TensorPoly cut_coproduct(const DecoratedTree& t, int dim);
HopfPoly cut_antipode(const DecoratedTree& t, int dim);

/// chain(l,m) + fork(l,m) - chain(m,l) - fork(m,l) evaluates to 0, and the two
/// expansions give the same coproduct and antipode in H_n.
bool check_rel(int k, int j, int i, int l, int m, int dim);

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), message(what), position(pos) {}
  std::string message;
  std::size_t position;
};

/// Inverse of DecoratedTree::str(). Indices out of 1..dim raise std::out_of_range.
DecoratedTree parse_tree(const std::string& text, int dim);

std::string ascii(const DecoratedTree& t);
std::string latex(const DecoratedTree& t);
std::string json(const DecoratedTree& t);
std::string render(const DecoratedTree& t, hopf::Format f);

}  // namespace cm::trees
