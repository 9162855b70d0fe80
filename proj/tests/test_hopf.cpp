#include <gtest/gtest.h>

#include "cm/hopf.hpp"
#include "cm/verify.hpp"

using namespace cm::hopf;

namespace {

HopfPoly P(const std::string& s, int dim) { return parse(s, dim); }
HopfPoly G(Generator g) { return HopfPoly::gen(g); }
Generator d(int k, int j, int i, IndexString t = {}) { return Generator::delta(k, j, i, std::move(t)); }
TensorPoly T(const HopfPoly& a, const HopfPoly& b) { return tensor(a, b); }
int kron(int a, int b) { return a == b; }

}  // namespace

TEST(Generator, CanonicalKeysSortLowerPairAndTail) {
  EXPECT_EQ(d(1, 2, 1), d(1, 1, 2));
  EXPECT_EQ(d(1, 1, 2, {2, 1}), d(1, 2, 1, {1, 2}));
  EXPECT_EQ(d(1, 1, 2, {2, 1}).tail(), (IndexString{1, 2}));
  EXPECT_EQ(str(d(1, 2, 1, {2, 1})), "d(1;1,2;1 2)");
  EXPECT_THROW(validate(Generator::x(3), 2), std::out_of_range);
}

TEST(Hopf, YYCommutators) {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          HopfPoly want;
          if (kron(i, l)) want += G(Generator::y(k, j));
          if (kron(k, j)) want -= G(Generator::y(i, l));
          EXPECT_EQ(commutator_table(Generator::y(i, j), Generator::y(k, l)), want);
        }
}

TEST(Hopf, YDeltaCommutator) {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          for (int m = 1; m <= 2; ++m) {
            HopfPoly want;
            if (kron(i, l)) want += G(d(k, j, m));
            if (kron(i, m)) want += G(d(k, l, j));
            if (kron(k, j)) want -= G(d(i, l, m));
            EXPECT_EQ(commutator_table(Generator::y(i, j), d(k, l, m)), want);
          }
}

TEST(Hopf, XCommutators) {
  EXPECT_TRUE(commutator_table(Generator::x(1), Generator::x(1)).is_zero());
  EXPECT_TRUE(commutator_table(Generator::x(1), Generator::x(2)).is_zero());
  EXPECT_EQ(commutator_table(Generator::y(1, 2), Generator::x(1)), G(Generator::x(2)));
  EXPECT_EQ(commutator_table(Generator::x(2), d(1, 1, 1)), G(d(1, 1, 1, {2})));
}

TEST(Hopf, NormalForm) {
  EXPECT_EQ(normal_form(Word{1, {Generator::x(1)}}), G(Generator::x(1)));
  EXPECT_EQ(normal_form(Word{1, {Generator::y(1, 1), Generator::x(1)}}), P("X(1) Y(1,1) + X(1)", 1));
  EXPECT_EQ(normal_form(Word{1, {d(1, 1, 1), Generator::x(1)}}), P("X(1) d(1;1,1) - d(1;1,1;1)", 1));
}

TEST(Hopf, ParsePrintRoundTrip) {
  cm::random::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    HopfPoly p;
    for (int s = 0; s < 3; ++s)
      p.add_term(cm::verify::random_pbw_monomial(rng, 2, 3, 2), cm::random::small_rational(rng));
    EXPECT_EQ(P(str(p), 2), p) << str(p);
    EXPECT_EQ(str(P(str(p), 2)), str(p));
  }
}

TEST(Hopf, ParseErrors) {
  EXPECT_THROW(P("X(3)", 2), std::out_of_range);
  EXPECT_THROW(P("X(1", 2), ParseError);
  EXPECT_THROW(P("Z(1)", 2), ParseError);
  try {
    P("X(1) + * Y(1,1)", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 7u);
  }
}

TEST(Hopf, CoproductOfGenerators) {
  EXPECT_EQ(coproduct(HopfPoly::unit(), 1), T(HopfPoly::unit(), HopfPoly::unit()));
  Generator y = Generator::y(1, 2);
  EXPECT_EQ(coproduct(y, 2), T(G(y), HopfPoly::unit()) + T(HopfPoly::unit(), G(y)));
  EXPECT_EQ(coproduct(d(2, 1, 2), 2), T(G(d(2, 1, 2)), HopfPoly::unit()) + T(HopfPoly::unit(), G(d(2, 1, 2))));
  for (int i = 1; i <= 2; ++i) {
    TensorPoly want = T(G(Generator::x(i)), HopfPoly::unit()) + T(HopfPoly::unit(), G(Generator::x(i)));
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) want += T(G(d(k, j, i)), G(Generator::y(j, k)));
    EXPECT_EQ(coproduct(Generator::x(i), 2), want);
  }
}

TEST(Hopf, CoproductD2AllIndices) {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          for (int l = 1; l <= n; ++l)
            EXPECT_EQ(coproduct(d(k, j, i, {l}), n), canonical(cm::verify::formula_d2(k, j, i, l, n), n));
}

TEST(Hopf, LadderInDim1) {
  HopfPoly d1 = G(d(1, 1, 1)), d2 = G(d(1, 1, 1, {1})), u = HopfPoly::unit();
  EXPECT_EQ(coproduct(d(1, 1, 1, {1}), 1), T(d2, u) + T(u, d2) + T(d1, d1));
}

TEST(Hopf, Counit) {
  EXPECT_EQ(counit(HopfPoly::unit()), 1);
  EXPECT_EQ(counit(G(Generator::x(1))), 0);
  EXPECT_EQ(counit(P("3 + 2 X(1) Y(1,1)", 1)), 3);
}

TEST(Hopf, AntipodeOfGenerators) {
  EXPECT_EQ(antipode(HopfPoly::unit(), 2), HopfPoly::unit());
  EXPECT_EQ(antipode(Generator::y(1, 2), 2), -G(Generator::y(1, 2)));
  EXPECT_EQ(antipode(d(1, 1, 2), 2), -G(d(1, 1, 2)));
  for (int i = 1; i <= 2; ++i) {
    HopfPoly want = -G(Generator::x(i));
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) want += multiply(G(d(k, j, i)), G(Generator::y(j, k)), 2);
    EXPECT_EQ(antipode(Generator::x(i), 2), want);
  }
}

TEST(Hopf, AntipodeSd2) {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          for (int l = 1; l <= n; ++l)
            EXPECT_EQ(antipode(d(k, j, i, {l}), n), canonical(cm::verify::formula_sd2(k, j, i, l, n), n));
}

TEST(Hopf, AntipodeOfProduct) {
  HopfPoly x = G(Generator::x(1)), xx = P("X(1) X(1)", 1);
  EXPECT_EQ(antipode(xx, 1), antipode(x, 1) * antipode(x, 1));
  HopfPoly sum;
  TensorPoly co = coproduct(xx, 1);
  for (const auto& [k, c] : co.terms())
    sum += multiply(antipode(HopfPoly::monomial(k[0]), 1), HopfPoly::monomial(k[1]), 1) * c;
  EXPECT_TRUE(sum.is_zero());
}

TEST(Hopf, AxiomExamples) {
  for (const HopfPoly& p : {G(Generator::x(1)), G(d(1, 1, 1, {1, 2}))}) {
    EXPECT_TRUE(check_coassoc(p, 2));
    EXPECT_TRUE(check_counit(p, 2));
    EXPECT_TRUE(check_antipode(p, 2));
  }
}

TEST(Hopf, RTerms) {
  EXPECT_TRUE(r_term(1, 1, 2, {}, 2).is_zero());
  // |a| = 1: R = sum delta^k_{ji} (x) [Y^j_k, delta^A]
  for (int i = 1; i <= 2; ++i) {
    TensorPoly want;
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        want += T(G(d(k, j, i)), commutator_table(Generator::y(j, k), d(2, 1, 2)));
    EXPECT_EQ(r_term(2, 1, 2, {i}, 2), canonical(want, 2));
  }
  // dim 1, |a| = 2: every term is built from delta_1 and delta_2
  TensorPoly r = r_term(1, 1, 1, {1, 1}, 1);
  EXPECT_FALSE(r.is_zero());
  EXPECT_TRUE(in_h0_tensor(r, 1));
  for (const auto& [k, c] : r.terms())
    for (const auto& side : k)
      for (Generator g : side) EXPECT_LE(g.tail_length(), 1);
}

TEST(Hopf, StructureIdentity) {
  // delta^i_{jk,l} - delta^i_{jl,k} = sum_s delta^s_{jl} delta^i_{sk} - delta^s_{jk} delta^i_{sl}
  const int n = 2;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          HopfPoly lhs = canonical(G(d(i, j, k, {l})) - G(d(i, j, l, {k})), n);
          HopfPoly rhs;
          for (int s = 1; s <= n; ++s)
            rhs += multiply(G(d(s, j, l)), G(d(i, s, k)), n) - multiply(G(d(s, j, k)), G(d(i, s, l)), n);
          EXPECT_EQ(lhs, rhs);
        }
  EXPECT_TRUE(is_canonical(d(1, 1, 2, {2})));
  EXPECT_FALSE(is_canonical(d(1, 2, 2, {1})));
  EXPECT_EQ(canonical_delta(d(1, 1, 1, {1}), 1), G(d(1, 1, 1, {1})));
}

TEST(Hopf, CoproductIsMultiplicativeOnBrackets) {
  auto gens = cm::verify::generators(2, 1);
  for (Generator a : gens)
    for (Generator b : gens)
      EXPECT_EQ(coproduct(commutator_table(a, b), 2), commutator(coproduct(a, 2), coproduct(b, 2), 2))
          << str(a) << " " << str(b);
}

TEST(Hopf, RenderFormats) {
  HopfPoly p = P("2 X(1) d(1;1,1;1) - 1/2 Y(1,1)", 1);
  EXPECT_EQ(render(p, Format::Text), str(p));
  EXPECT_NE(latex(p).find("\\delta"), std::string::npos);
  EXPECT_EQ(json(HopfPoly::unit()), R"([{"coeff":"1","monomial":[]}])");
  EXPECT_EQ(str(HopfPoly()), "0");
}
