#include <gtest/gtest.h>

#include "cm/random.hpp"
#include "cm/symb.hpp"

using namespace cm::symb;

namespace {

RF rf(int dim, const char* s) { return parse_rf(dim, s); }
Coordinate x(int mu) { return Coordinate::x(mu); }
Coordinate y(int mu, int i) { return Coordinate::y(mu, i); }

}  // namespace

TEST(Symb, AdditiveInverse) { EXPECT_TRUE(add(rf(1, "x1"), rf(1, "-x1")).is_zero()); }

TEST(Symb, Cancellation) { EXPECT_TRUE(equal_rf(mul(rf(1, "x1/y1_1"), rf(1, "y1_1")), rf(1, "x1"))); }

TEST(Symb, CommonDenominator) { EXPECT_TRUE(equal_rf(add(rf(1, "1/(1+x1)"), rf(1, "x1/(1+x1)")), rf(1, "1"))); }

TEST(Symb, Differentiate) {
  EXPECT_TRUE(equal_rf(differentiate(rf(1, "x1*x1"), x(1)), rf(1, "2*x1")));
  EXPECT_TRUE(differentiate(rf(1, "x1"), y(1, 1)).is_zero());
  EXPECT_TRUE(equal_rf(differentiate(rf(1, "1/x1"), x(1)), rf(1, "-1/x1^2")));
}

TEST(Symb, Substitute) {
  EXPECT_TRUE(equal_rf(substitute(rf(1, "x1"), {{x(1), rf(1, "x1+1")}}), rf(1, "x1+1")));
  EXPECT_THROW(substitute(rf(1, "1/x1"), {{x(1), rf(1, "0")}}), IdenticallyZeroDenominator);
  EXPECT_TRUE(equal_rf(substitute(rf(1, "y1_1*x1"), {{x(1), rf(1, "x1")}, {y(1, 1), rf(1, "2*y1_1")}}),
                       rf(1, "2*y1_1*x1")));
}

TEST(Symb, Equality) {
  EXPECT_TRUE(equal_rf(rf(1, "x1/x1"), rf(1, "1")));
  EXPECT_FALSE(equal_rf(rf(2, "x1"), rf(2, "x2")));
  EXPECT_TRUE(equal_rf(rf(1, "(x1+1)^2/(x1+1)"), rf(1, "x1+1")));
}

TEST(Symb, Evaluate) {
  EXPECT_EQ(eval_at(rf(1, "x1+y1_1"), {{x(1), 1}, {y(1, 1), 2}}), 3);
  EXPECT_THROW(eval_at(rf(1, "1/x1"), {{x(1), 0}}), DivisionByZeroAtPoint);
  EXPECT_EQ(eval_at(rf(1, "x1^2/x1"), {{x(1), 3}}), 3);
}

TEST(Symb, RationalLiterals) {
  EXPECT_TRUE(equal_rf(rf(2, "3/4*x2 + 1/4*x2"), rf(2, "x2")));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
}

TEST(Symb, ParseErrors) {
  EXPECT_THROW(parse_rf(2, "x1 +"), ParseError);
  EXPECT_THROW(parse_rf(2, "x3"), std::exception);
  EXPECT_THROW(parse_rf(1, "y1_2"), std::exception);
  try {
    parse_rf(1, "x1 * * x1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 5u);
  }
}

TEST(Symb, PolynomialTermOrderIsGradedLex) {
  Polynomial p = parse_polynomial(2, "x2 + x1^2 + 1 + x1");
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p.leading().exp.total, 2);
  EXPECT_TRUE(p.terms().front().exp.total == 0);
}

class SymbProperties : public ::testing::TestWithParam<int> {};

TEST_P(SymbProperties, RingAxioms) {
  int dim = GetParam();
  cm::random::Rng rng(7 + dim);
  for (int t = 0; t < 20; ++t) {
    RF a = cm::random::random_function(rng, dim), b = cm::random::random_function(rng, dim),
       c = cm::random::random_function(rng, dim);
    EXPECT_TRUE(equal_rf((a * b) * c, a * (b * c)));
    EXPECT_TRUE(equal_rf((a + b) + c, a + (b + c)));
    EXPECT_TRUE(equal_rf(a * (b + c), a * b + a * c));
    EXPECT_TRUE(equal_rf(a * b, b * a));
  }
}

TEST_P(SymbProperties, MixedPartialsCommute) {
  int dim = GetParam();
  cm::random::Rng rng(11 + dim);
  for (int t = 0; t < 10; ++t) {
    RF p = cm::random::random_function(rng, dim) * RF(cm::random::random_polynomial(rng, dim, 2, 3, false));
    for (int u = 0; u < num_vars(dim); ++u)
      for (int v = 0; v < num_vars(dim); ++v)
        EXPECT_TRUE(equal_rf(p.derivative(u).derivative(v), p.derivative(v).derivative(u)));
  }
}

TEST_P(SymbProperties, SubstituteIsHomomorphism) {
  int dim = GetParam();
  cm::random::Rng rng(13 + dim);
  for (int t = 0; t < 10; ++t) {
    RF p = cm::random::random_function(rng, dim), q = cm::random::random_function(rng, dim);
    std::map<Coordinate, RF> s;
    for (int v = 0; v < num_vars(dim); ++v)
      s[Coordinate::from_index(dim, v)] =
          RF(Polynomial::variable_index(dim, v)) + RF(cm::random::random_polynomial(rng, dim, 1, 1, false));
    try {
      EXPECT_TRUE(equal_rf(substitute(p * q, s), substitute(p, s) * substitute(q, s)));
      EXPECT_TRUE(equal_rf(substitute(p + q, s), substitute(p, s) + substitute(q, s)));
    } catch (const IdenticallyZeroDenominator&) {
    }
  }
}

TEST_P(SymbProperties, EvalAfterSubstitute) {
  int dim = GetParam();
  cm::random::Rng rng(17 + dim);
  for (int t = 0; t < 10; ++t) {
    RF p = cm::random::random_function(rng, dim);
    std::map<Coordinate, RF> s;
    std::map<Coordinate, Rational> point, composed;
    for (int v = 0; v < num_vars(dim); ++v) {
      Coordinate c = Coordinate::from_index(dim, v);
      s[c] = RF(cm::random::random_polynomial(rng, dim, 1, 2, false));
      point[c] = cm::random::small_rational(rng);
    }
    for (const auto& [c, f] : s) {
      try {
        composed[c] = eval_at(f, point);
      } catch (const DivisionByZeroAtPoint&) {
        GTEST_SKIP();
      }
    }
    try {
      EXPECT_EQ(eval_at(substitute(p, s), point), eval_at(p, composed));
    } catch (const std::domain_error&) {
    }
  }
}

TEST_P(SymbProperties, PrintParseRoundTrip) {
  int dim = GetParam();
  cm::random::Rng rng(19 + dim);
  for (int t = 0; t < 20; ++t) {
    RF p = cm::random::random_function(rng, dim);
    RF q = parse_rf(dim, p.str());
    EXPECT_TRUE(equal_rf(p, q)) << p.str();
    EXPECT_EQ(q.str(), p.str());
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, SymbProperties, ::testing::Values(1, 2, 3));
