#include <gtest/gtest.h>

#include "cm/trees.hpp"
#include "cm/verify.hpp"

using namespace cm::trees;
using cm::hopf::Generator;
using cm::hopf::Monomial;

namespace {

Generator d(int k, int j, int i, IndexString t = {}) { return Generator::delta(k, j, i, std::move(t)); }
Monomial M(std::initializer_list<Generator> g) {
  Monomial m(g);
  std::sort(m.begin(), m.end());
  return m;
}

DecoratedTree chain(int k, int j, int i, int l, int m) {
  DecoratedTree t(k, j, i);
  t.attach(t.attach(0, l), m);
  return t;
}

DecoratedTree fork(int k, int j, int i, int l, int m) {
  DecoratedTree t(k, j, i);
  t.attach(0, l);
  t.attach(0, m);
  return t;
}

TensorPoly cut_terms(const DecoratedTree& t, std::vector<int> edges, int dim) {
  TensorPoly r;
  for (const auto& c : apply_cut(t, Cut{std::move(edges), true}, dim)) r.add_term({c.branches, c.trunk}, c.coeff);
  return r;
}

}  // namespace

TEST(Trees, Expansion) {
  auto single = tree_expand(1, 1, 2, {});
  ASSERT_EQ(single.terms.size(), 1u);
  EXPECT_EQ(single.terms.begin()->first.size(), 1);

  auto two = tree_expand(1, 1, 2, {1, 2});
  EXPECT_EQ(two.total(), 2);
  EXPECT_EQ(two.terms.at(chain(1, 1, 2, 1, 2)), 1);
  EXPECT_EQ(two.terms.at(fork(1, 1, 2, 1, 2)), 1);

  EXPECT_EQ(tree_expand(1, 1, 2, {1, 2, 1}).total(), 6);
  EXPECT_EQ(tree_expand(1, 1, 1, {1, 1, 1, 1}).total(), 24);
  // repeated indices merge planar trees into multiplicities
  EXPECT_LT(tree_expand(1, 1, 1, {1, 1, 1}).terms.size(), 6u);
}

TEST(Trees, EvaluateGivesTheDelta) {
  EXPECT_EQ(evaluate(tree_expand(1, 1, 2, {2, 1, 1})), HopfPoly::gen(d(1, 1, 2, {1, 1, 2})));
}

TEST(Trees, ChainCutAboveM) {
  const int n = 2;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (int m = 1; m <= n; ++m) {
        TensorPoly want;
        for (int a = 1; a <= n; ++a) want.add_term({M({d(a, l, m)}), M({d(k, 1, 2, {a})})}, 1);
        EXPECT_EQ(cut_terms(chain(k, 1, 2, l, m), {2}, n), want);
      }
}

TEST(Trees, ChainCutAboveL) {
  const int n = 2;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          TensorPoly want;
          for (int a = 1; a <= n; ++a) {
            want.add_term({M({d(a, j, l, {m})}), M({d(2, a, i)})}, 1);
            want.add_term({M({d(a, i, l, {m})}), M({d(2, j, a)})}, 1);
            want.add_term({M({d(2, a, l, {m})}), M({d(a, j, i)})}, -1);
          }
          EXPECT_EQ(cut_terms(chain(2, j, i, l, m), {1}, n), want);
        }
}

TEST(Trees, ForkCutAboveL) {
  const int n = 2;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          TensorPoly want;
          for (int a = 1; a <= n; ++a) {
            want.add_term({M({d(a, j, l)}), M({d(1, a, i, {m})})}, 1);
            want.add_term({M({d(a, i, l)}), M({d(1, j, a, {m})})}, 1);
            want.add_term({M({d(1, a, l)}), M({d(a, j, i, {m})})}, -1);
          }
          EXPECT_EQ(cut_terms(fork(1, j, i, l, m), {1}, n), want);
        }
}

TEST(Trees, DisplayedFormulas) {
  for (int k = 1; k <= 2; ++k)
    for (int j = 1; j <= 2; ++j)
      for (int i = 1; i <= 2; ++i)
        for (int l = 1; l <= 2; ++l) {
          EXPECT_EQ(coproduct_tree(k, j, i, {l}, 2), cm::verify::formula_d2(k, j, i, l, 2));
          EXPECT_EQ(antipode_tree(k, j, i, {l}, 2), cm::verify::formula_sd2(k, j, i, l, 2));
          for (int m = 1; m <= 2; ++m)
            EXPECT_EQ(cut_terms(fork(k, j, i, l, m), {1, 2}, 2), cm::verify::formula_cut2(k, j, i, l, m, 2));
        }
}

TEST(Trees, AgreesWithRecursion) {
  for (int n = 1; n <= 2; ++n)
    for (Generator g : cm::verify::generators(n, 2)) {
      if (g.kind() != Generator::Kind::Delta) continue;
      EXPECT_EQ(cm::hopf::canonical(coproduct_tree(g.a(), g.b(), g.c(), g.tail(), n), n), cm::hopf::coproduct(g, n));
      EXPECT_EQ(cm::hopf::canonical(antipode_tree(g.a(), g.b(), g.c(), g.tail(), n), n), cm::hopf::antipode(g, n));
    }
  // dim 1 needs no canonicalization at all
  for (int len = 0; len <= 4; ++len) {
    IndexString t(len, 1);
    EXPECT_EQ(antipode_tree(1, 1, 1, t, 1), cm::hopf::antipode(d(1, 1, 1, t), 1));
  }
}

TEST(Trees, Cuts) {
  auto c = chain(1, 1, 2, 1, 2);
  EXPECT_EQ(cuts(c, false).size(), 3u);
  EXPECT_EQ(cuts(c, true).size(), 2u);
  auto f = fork(1, 1, 2, 1, 2);
  EXPECT_EQ(cuts(f, false).size(), 3u);
  EXPECT_EQ(cuts(f, true).size(), 3u);
  // application order: depth, then planar position
  auto all = cuts(c, false);
  EXPECT_EQ(all.back().edges, (std::vector<int>{1, 2}));
}

TEST(Trees, Rel) {
  for (int n = 1; n <= 3; ++n)
    for (int l = 1; l <= n; ++l)
      for (int m = 1; m <= n; ++m) EXPECT_TRUE(check_rel(1, 1, n, l, m, n));
  EXPECT_TRUE(check_rel(2, 1, 2, 1, 2, 2));
}

TEST(Trees, ParsePrintRoundTrip) {
  for (const char* s : {"t(1;1,2)", "t(1;1,2)(1(2))", "t(1;1,2)(1)(2)", "t(2;2,1)(1(2)(1))(2)"}) {
    auto t = parse_tree(s, 2);
    EXPECT_EQ(parse_tree(t.str(), 2), t);
  }
  EXPECT_EQ(parse_tree("t(1;1,2)(1(2))", 2), chain(1, 1, 2, 1, 2));
  EXPECT_THROW(parse_tree("t(1;1,2)(3)", 2), std::out_of_range);
  EXPECT_THROW(parse_tree("t(1;1,2)(1", 2), ParseError);
  EXPECT_THROW(parse_tree("s(1;1,2)", 2), ParseError);
}

TEST(Trees, Renderers) {
  auto t = fork(1, 1, 2, 1, 2);
  EXPECT_EQ(ascii(t), "d(1;1,2)\n|-- 1\n`-- 2\n");
  EXPECT_NE(latex(t).find("picture"), std::string::npos);
  const std::string want =
      R"j({"tree":"t(1;1,2)(1)(2)","vertices":[{"children":[1,2],"id":0,"lower":[1,2],"upper":1},)j"
      R"j({"children":[],"id":1,"index":1},{"children":[],"id":2,"index":2}]})j";
  EXPECT_EQ(json(t), want);
}
