#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

// 0*x^2 (+) 0*x (+) 1
TropicalPolynomial structural() { return poly("0 : 2\n0 : 1\n1 : 0\n"); }

}  // namespace

TEST(ExtRational, CanonicalFormAndInfinity) {
  auto half = parse_rational("2/4");
  ASSERT_TRUE(half);
  EXPECT_EQ(half->get_num(), 1);
  EXPECT_EQ(half->get_den(), 2);
  EXPECT_FALSE(parse_rational("3/-6"));
  auto neg = parse_rational("-3/6");
  ASSERT_TRUE(neg);
  EXPECT_EQ(*neg, make_rational(-1, 2));
  EXPECT_GT(neg->get_den(), 0);
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational(""));

  const ExtRational inf = ExtRational::infinity();
  EXPECT_TRUE((ExtRational(3) + inf).is_infinite());
  EXPECT_EQ(trop_min(ExtRational(7), inf), ExtRational(7));
  EXPECT_LT(ExtRational(1000000), inf);
  EXPECT_EQ(inf.str(), "inf");
  EXPECT_EQ(ExtRational::parse("inf"), inf);
  EXPECT_EQ(ExtRational::parse("-5/10")->value(), make_rational(-1, 2));
  EXPECT_THROW((void)inf.value(), InvalidArgument);
}

TEST(Polynomial, ConstructionValidates) {
  EXPECT_THROW(TropicalPolynomial(1, {}), InvalidArgument);
  EXPECT_THROW(TropicalPolynomial(0, {Monomial{{}, 0}}), InvalidArgument);
  EXPECT_THROW(TropicalPolynomial(2, {Monomial{{1}, 0}}), InvalidArgument);
  EXPECT_THROW(TropicalPolynomial(1, {Monomial{{1}, 0}, Monomial{{1}, 2}}), InvalidArgument);
  auto f = structural();
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_EQ(f.coefficient({2}), ExtRational(0));
  EXPECT_TRUE(f.coefficient({3}).is_infinite());
}

TEST(Eval, StructuralAtZeroTiesSquareAndLinear) {
  auto r = eval(structural(), pt({0}));
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.argmin, (std::vector<Exponent>{{1}, {2}}));
}

TEST(Eval, StructuralAtTwoPicksConstant) {
  auto r = eval(structural(), pt({2}));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.argmin, (std::vector<Exponent>{{0}}));
}

TEST(Eval, SingleTerm) {
  auto f = TropicalPolynomial::constant(3, 5);
  auto r = eval(f, pt({1, -2, make_rational(7, 3)}));
  EXPECT_EQ(r.value, 5);
  EXPECT_EQ(r.argmin.size(), 1u);
}

TEST(Eval, DimensionMismatchThrows) {
  EXPECT_THROW(eval(structural(), pt({0, 1})), InvalidArgument);
  EXPECT_THROW(is_member(structural(), pt({})), InvalidArgument);
}

TEST(Member, StructuralHypersurface) {
  auto f = structural();
  EXPECT_TRUE(is_member(f, pt({1})));
  EXPECT_TRUE(is_member(f, pt({0})));
  EXPECT_FALSE(is_member(f, pt({make_rational(1, 2)})));
  EXPECT_FALSE(is_member(TropicalPolynomial::monomial(1, 0, 3, 2), pt({0})));
}

TEST(TropMul, QuadricFromLinearFactors) {
  auto a = poly("0 : 1\n1 : 0\n");
  auto b = poly("0 : 1\n0 : 0\n");
  EXPECT_EQ(trop_mul(a, b), structural());
}

TEST(TropMul, ConstantZeroIsIdentity) {
  auto f = poly("1/2 : 2 1\n-3 : 0 4\n0 : 0 0\n");
  EXPECT_EQ(trop_mul(f, TropicalPolynomial::constant(2, 0)), f);
}

TEST(TropMul, StructuralCubic) {
  auto c = trop_mul(trop_mul(poly("0 : 1\n1 : 0\n"), poly("0 : 1\n0 : 0\n")), poly("0 : 1\n2 : 0\n"));
  EXPECT_EQ(c, poly("0 : 3\n0 : 2\n1 : 1\n3 : 0\n"));
  // hypersurface is {0,1,2} on a fine grid
  for (int k = -40; k <= 40; ++k) {
    Rational x(k, 8);
    EXPECT_EQ(is_member(c, pt({x})), x == 0 || x == 1 || x == 2) << x;
  }
}

TEST(TropAdd, Examples) {
  EXPECT_EQ(trop_add(poly("0 : 1\n"), poly("1 : 0\n")), poly("0 : 1\n1 : 0\n"));
  EXPECT_EQ(trop_add(poly("1 : 1\n"), poly("0 : 1\n")), poly("0 : 1\n"));
  EXPECT_EQ(trop_add(poly("0 : 1\n1 : 0\n"), poly("0 : 1\n0 : 0\n")), poly("0 : 1\n0 : 0\n"));
  EXPECT_THROW(trop_add(poly("0 : 1\n"), poly("0 : 1 0\n")), InvalidArgument);
  EXPECT_THROW(trop_mul(poly("0 : 1\n"), poly("0 : 1 0\n")), InvalidArgument);
}

TEST(Properties, ProductAddsValuesAndUnitesHypersurfaces) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    auto f = random_polynomial(rng, n, 3, uniform(rng, 1, 6));
    auto g = random_polynomial(rng, n, 3, uniform(rng, 1, 6));
    auto fg = trop_mul(f, g);
    for (int s = 0; s < 30; ++s) {
      auto x = random_point(rng, n);
      EXPECT_EQ(eval(fg, x).value, eval(f, x).value + eval(g, x).value);
      EXPECT_EQ(member_oracle(fg, x), member_oracle(f, x) || member_oracle(g, x));
      EXPECT_EQ(is_member(fg, x), member_oracle(fg, x));
    }
  }
}

TEST(Properties, ScalingShiftsValueOnly) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_polynomial(rng, 2, 3, 5);
    const Rational c = random_rational(rng);
    auto g = scale(f, c);
    for (int s = 0; s < 20; ++s) {
      auto x = random_point(rng, 2);
      auto rf = eval(f, x), rg = eval(g, x);
      EXPECT_EQ(rg.value, rf.value + c);
      EXPECT_EQ(rg.argmin, rf.argmin);
      EXPECT_EQ(is_member(g, x), is_member(f, x));
    }
  }
}

TEST(Properties, EvalIgnoresSupportOrder) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_polynomial(rng, 3, 2, 6);
    auto terms = f.terms();
    std::shuffle(terms.begin(), terms.end(), rng);
    TropicalPolynomial g(3, terms);
    auto x = random_point(rng, 3);
    EXPECT_EQ(eval(f, x).value, eval(g, x).value);
    EXPECT_EQ(eval(f, x).argmin, eval(g, x).argmin);
  }
}

TEST(Embed, AddsIgnoredCoordinates) {
  auto f = structural();
  auto g = embed(f, 3);
  EXPECT_EQ(g.dimension(), 3u);
  EXPECT_TRUE(is_member(g, pt({1, 5, -7})));
  EXPECT_FALSE(is_member(g, pt({make_rational(1, 2), 0, 0})));
}
