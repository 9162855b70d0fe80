#include <gtest/gtest.h>

#include "cm/geometry.hpp"
#include "cm/random.hpp"

using namespace cm::geometry;
using cm::symb::Coordinate;
using cm::symb::equal_rf;
using cm::symb::parse_rf;

namespace {

RF rf(int dim, const char* s) { return parse_rf(dim, s); }
RF yinv(int dim, int r, int c) { return frame_inverse(dim)(r - 1, c - 1); }

}  // namespace

TEST(Geometry, SolderingFormDim1) {
  auto alpha = soldering_form(1);
  ASSERT_EQ(alpha.size(), 1u);
  EXPECT_TRUE(equal_rf(alpha[0].x(1), rf(1, "1/y1_1")));
  EXPECT_TRUE(alpha[0].y(1, 1).is_zero());
}

TEST(Geometry, SolderingPairing) {
  for (int n = 1; n <= 3; ++n) {
    auto alpha = soldering_form(n);
    for (int j = 1; j <= n; ++j) {
      for (int i = 1; i <= n; ++i)
        EXPECT_TRUE(equal_rf(alpha[j - 1](horizontal_field(Connection::flat(n), i)), RF::constant(n, i == j)));
      for (const auto& y : vertical_fields(n)) EXPECT_TRUE(alpha[j - 1](y).is_zero());
    }
  }
}

TEST(Geometry, FlatConnectionFormDim1) {
  auto omega = connection_form(Connection::flat(1));
  EXPECT_TRUE(equal_rf(omega[0].y(1, 1), rf(1, "1/y1_1")));
  EXPECT_TRUE(omega[0].x(1).is_zero());
}

TEST(Geometry, VerticalFieldDim1) {
  VectorField y = vertical_field(1, 1, 1);
  EXPECT_TRUE(equal_rf(y.y(1, 1), rf(1, "y1_1")));
  EXPECT_TRUE(y.x(1).is_zero());
}

TEST(Geometry, VerticalCommutatorsDim2) {
  auto ys = vertical_fields(2);
  auto Y = [&](int a, int b) { return ys[(a - 1) * 2 + (b - 1)]; };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          VectorField want(2);
          if (i == l) want = want + Y(k, j);
          if (k == j) want = want - Y(i, l);
          EXPECT_TRUE(equal(lie_bracket(Y(i, j), Y(k, l)), want));
        }
}

TEST(Geometry, FlatHorizontalFields) {
  auto xs = horizontal_fields(Connection::flat(2));
  for (int i = 1; i <= 2; ++i) {
    for (int mu = 1; mu <= 2; ++mu) EXPECT_TRUE(equal_rf(xs[i - 1].x(mu), RF::variable(2, Coordinate::y(mu, i))));
    for (const auto& f : xs[i - 1].frame) EXPECT_TRUE(f.is_zero());
  }
  EXPECT_TRUE(lie_bracket(xs[0], xs[1]).is_zero());
}

TEST(Geometry, BracketWithItselfVanishes) {
  cm::random::Rng rng(3);
  auto gamma = cm::random::random_connection(rng, 2);
  for (const auto& x : horizontal_fields(gamma)) EXPECT_TRUE(lie_bracket(x, x).is_zero());
}

TEST(Geometry, YXBracket) {
  cm::random::Rng rng(5);
  auto gamma = cm::random::random_connection(rng, 2);
  for (int k = 1; k <= 2; ++k)
    for (int j = 1; j <= 2; ++j)
      for (int i = 1; i <= 2; ++i) {
        VectorField want(2);
        if (k == i) want = horizontal_field(gamma, j);
        EXPECT_TRUE(equal(lie_bracket(vertical_field(2, k, j), horizontal_field(gamma, i)), want));
      }
}

TEST(Geometry, FlatCurvatureAndTorsionVanish) {
  auto ct = curvature_torsion(Connection::flat(2));
  for (const auto& r : ct.r) EXPECT_TRUE(r.is_zero());
  for (const auto& t : ct.theta) EXPECT_TRUE(t.is_zero());
}

TEST(Geometry, SymmetricConnectionIsTorsionFree) {
  Connection g = parse_connection(2, "G(1,1,2)=x1; G(1,2,1)=x1; G(2,2,2)=x1*x2");
  EXPECT_TRUE(g.is_symmetric());
  for (const auto& t : curvature_torsion(g).theta) EXPECT_TRUE(t.is_zero());
  for (const auto& t : torsion_form(g)) EXPECT_TRUE(t.is_zero());
}

TEST(Geometry, TorsionExample) {
  // Gamma^1_{12} = 1: Theta^i = (y^-1)^i_1 dx^2 ^ dx^1 = -(y^-1)^i_1 dx^1 ^ dx^2
  Connection g = parse_connection(2, "G(1,1,2)=1");
  auto th = torsion_form(g);
  for (int i = 1; i <= 2; ++i) {
    TwoForm want(2);
    want.add(0, 1, -yinv(2, i, 1));
    EXPECT_TRUE(equal(th[i - 1], want));
  }
}

TEST(Geometry, TorsionVanishesInDim1) {
  cm::random::Rng rng(9);
  for (int t = 0; t < 3; ++t)
    for (const auto& f : torsion_form(cm::random::random_connection(rng, 1))) EXPECT_TRUE(f.is_zero());
}

TEST(Geometry, PullbackGamma) {
  cm::random::Rng rng(21);
  auto gamma = cm::random::random_connection(rng, 2);
  EXPECT_TRUE(equal(pullback_gamma(gamma, PolyDiffeo::identity(2)), gamma));

  Connection g = pullback_gamma(Connection::flat(1), parse_diffeo(1, "x1 + x1^2"));
  EXPECT_TRUE(equal_rf(g(1, 1, 1), rf(1, "2/(1+2*x1)")));

  Connection lin = pullback_gamma(Connection::flat(2), parse_diffeo(2, "2*x1 + x2, x2 - 3"));
  for (const auto& c : lin.coeff) EXPECT_TRUE(c.is_zero());
}

TEST(Geometry, PullbackOneFormByIdentity) {
  auto alpha = soldering_form(2);
  EXPECT_TRUE(equal(pullback_oneform(alpha[1], PolyDiffeo::identity(2)), alpha[1]));
}

TEST(Geometry, TransformationLawExamples) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_prop1(Connection::flat(n), PolyDiffeo::identity(n)).all_passed());
  EXPECT_TRUE(check_prop1(Connection::flat(1), parse_diffeo(1, "x1 + x1^2")).all_passed());
  cm::random::Rng rng(42);
  for (int t = 0; t < 3; ++t)
    EXPECT_TRUE(
        check_prop1(cm::random::random_connection(rng, 2), cm::random::random_diffeo(rng, 2)).all_passed());
}

TEST(Geometry, DiffeoCompositionOrder) {
  PolyDiffeo a = parse_diffeo(1, "x1 + x1^2"), b = parse_diffeo(1, "x1 + 1");
  // a.compose(b) is a o b
  EXPECT_EQ(a.compose(b), parse_diffeo(1, "x1^2 + 3*x1 + 2"));
}

TEST(Geometry, ParseErrors) {
  EXPECT_THROW(parse_connection(2, "G(1,3,1)=x1"), cm::symb::ParseError);
  EXPECT_THROW(parse_connection(2, "G(1,1)=x1"), cm::symb::ParseError);
  EXPECT_THROW(parse_diffeo(2, "x1"), std::exception);
}
