#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

Vector v(std::initializer_list<Rational> xs) { return Vector(xs); }

LinearSystem random_system(Rng& rng, std::size_t n, std::size_t eqs, std::size_t ineqs) {
  LinearSystem s(n);
  auto row = [&] {
    Vector r(n);
    for (auto& x : r) x = uniform(rng, -3, 3);
    return r;
  };
  for (std::size_t i = 0; i < eqs; ++i) s.add_equality(row(), uniform(rng, -4, 4));
  for (std::size_t i = 0; i < ineqs; ++i) s.add_inequality(row(), uniform(rng, -4, 4));
  return s;
}

/// 2x2 solve by Cramer's rule; nullopt when singular.
std::optional<Point> solve2(const Constraint& a, const Constraint& b) {
  const Rational det = a.coeffs[0] * b.coeffs[1] - a.coeffs[1] * b.coeffs[0];
  if (det == 0) return std::nullopt;
  return Point{(a.rhs * b.coeffs[1] - a.coeffs[1] * b.rhs) / det,
               (a.coeffs[0] * b.rhs - a.rhs * b.coeffs[0]) / det};
}

}  // namespace

TEST(Feasible, Examples) {
  LinearSystem a(1);
  a.add_equality(v({1}), 0);
  a.add_inequality(v({1}), 1);
  auto r = feasible(a);
  ASSERT_TRUE(r.is_feasible());
  EXPECT_EQ((*r.witness)[0], 0);

  LinearSystem b(1);
  b.add_equality(v({1}), 0);
  b.add_equality(v({1}), -1);
  EXPECT_EQ(feasible(b).status, LpStatus::infeasible);
  EXPECT_FALSE(feasible(b).witness);
}

TEST(Feasible, CellOfStructuralQuadricAtZero) {
  // pair (x^2, x) of 0*x^2 (+) 0*x (+) 1: 2x = x, 2x <= 1
  LinearSystem s(1);
  s.add_equality(v({1}), 0);
  s.add_inequality(v({2}), 1);
  auto r = feasible(s);
  ASSERT_TRUE(r.is_feasible());
  EXPECT_EQ((*r.witness)[0], 0);
}

TEST(Feasible, RejectsWrongLength) {
  LinearSystem s(2);
  EXPECT_THROW(s.add_equality(v({1}), 0), InvalidArgument);
  EXPECT_THROW(s.add_inequality(v({1, 2, 3}), 0), InvalidArgument);
}

TEST(MaximizeMargin, Examples) {
  LinearSystem a(1);
  a.add_inequality(v({1}), 1);
  const std::vector<std::size_t> first{0};
  auto r = maximize_margin(a, first);
  ASSERT_TRUE(r.is_feasible());
  EXPECT_EQ(*r.objective, 1);
  EXPECT_LE((*r.witness)[0], 0);

  LinearSystem b(1);
  b.add_inequality(v({1}), 0);
  b.add_inequality(v({-1}), 0);
  const std::vector<std::size_t> both{0, 1};
  auto q = maximize_margin(b, both);
  ASSERT_TRUE(q.is_feasible());
  EXPECT_EQ(*q.objective, 0);
}

TEST(MaximizeMargin, RayCellHasSlackInequality) {
  // pair (x1, x2) of 0*x1 (+) 0*x2 (+) 0: x1 = x2, x1 <= 0
  LinearSystem s(2);
  s.add_equality(v({1, -1}), 0);
  s.add_inequality(v({1, 0}), 0);
  const std::vector<std::size_t> first{0};
  auto r = maximize_margin(s, first);
  ASSERT_TRUE(r.is_feasible());
  EXPECT_GT(*r.objective, 0);
}

TEST(AffineDimension, Examples) {
  LinearSystem a(2);
  a.add_equality(v({1, -1}), 0);
  EXPECT_EQ(affine_dimension(a), 1);

  LinearSystem b(1);
  b.add_inequality(v({1}), -1);
  b.add_inequality(v({-1}), 0);
  EXPECT_EQ(affine_dimension(b), -1);

  LinearSystem ray(2);
  ray.add_equality(v({1, -1}), 0);
  ray.add_inequality(v({1, 0}), 0);
  EXPECT_EQ(affine_dimension(ray), 1);

  // implicit equality from two opposite inequalities
  LinearSystem flat(3);
  flat.add_inequality(v({1, 1, 0}), 2);
  flat.add_inequality(v({-1, -1, 0}), -2);
  EXPECT_EQ(affine_dimension(flat), 2);
}

TEST(AffineDimension, EachIndependentEqualityCutsOne) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = uniform(rng, 1, 5);
    LinearSystem s(n);
    EXPECT_EQ(affine_dimension(s), static_cast<int>(n));
    // unit-triangular rows are independent by construction
    for (std::size_t i = 0; i < n; ++i) {
      Vector row(n, Rational(0));
      row[i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) row[j] = uniform(rng, -2, 2);
      s.add_equality(row, uniform(rng, -3, 3));
      EXPECT_EQ(affine_dimension(s), static_cast<int>(n - i - 1));
    }
  }
}

TEST(Properties, WitnessesSatisfyExactlyAndMonotone) {
  Rng rng(22);
  int feasible_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(rng, 1, 4);
    auto s = random_system(rng, n, uniform(rng, 0, 2), uniform(rng, 0, 6));
    auto r = feasible(s);
    if (r.is_feasible()) {
      ++feasible_count;
      EXPECT_TRUE(s.satisfied_by(*r.witness));
      // dropping any constraint keeps feasibility
      for (std::size_t i = 0; i < s.inequalities.size(); ++i) {
        auto t = s;
        t.inequalities.erase(t.inequalities.begin() + static_cast<long>(i));
        EXPECT_TRUE(feasible(t).is_feasible());
      }
      auto hull = affine_hull(s);
      ASSERT_TRUE(hull);
      EXPECT_TRUE(s.satisfied_by(hull->interior));
      EXPECT_GE(hull->dimension, 0);
      EXPECT_LE(hull->dimension, static_cast<int>(n));
    } else {
      EXPECT_EQ(affine_dimension(s), -1);
    }
  }
  EXPECT_GT(feasible_count, 50);
}

TEST(Properties, MaximizeMatchesVertexEnumerationInPlane) {
  Rng rng(23);
  int bounded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_system(rng, 2, 0, uniform(rng, 3, 6));
    // box keeps the problem bounded
    s.add_inequality(v({1, 0}), 5);
    s.add_inequality(v({-1, 0}), 5);
    s.add_inequality(v({0, 1}), 5);
    s.add_inequality(v({0, -1}), 5);
    const Vector c{Rational(uniform(rng, -3, 3)), Rational(uniform(rng, -3, 3))};
    std::optional<Rational> best;
    const auto& ineq = s.inequalities;
    for (std::size_t i = 0; i < ineq.size(); ++i) {
      for (std::size_t j = i + 1; j < ineq.size(); ++j) {
        auto p = solve2(ineq[i], ineq[j]);
        if (!p || !s.satisfied_by(*p)) continue;
        Rational val = c[0] * (*p)[0] + c[1] * (*p)[1];
        if (!best || val > *best) best = val;
      }
    }
    auto r = maximize(s, c);
    EXPECT_EQ(r.is_feasible(), best.has_value());
    if (!best) continue;
    ++bounded;
    EXPECT_EQ(*r.objective, *best);
    EXPECT_TRUE(s.satisfied_by(*r.witness));
    EXPECT_EQ(c[0] * (*r.witness)[0] + c[1] * (*r.witness)[1], *best);
  }
  EXPECT_GT(bounded, 50);
}

TEST(Maximize, DetectsUnbounded) {
  LinearSystem s(2);
  s.add_equality(v({1, -1}), 0);
  s.add_inequality(v({1, 0}), 0);
  EXPECT_EQ(maximize(s, v({-1, 0})).status, LpStatus::unbounded);
  auto r = maximize(s, v({1, 0}));
  ASSERT_TRUE(r.is_feasible());
  EXPECT_EQ(*r.objective, 0);
}

TEST(Maximize, DegenerateDuplicatesAreFine) {
  LinearSystem s(2);
  for (int k = 0; k < 4; ++k) {
    s.add_inequality(v({1, 1}), 1);
    s.add_inequality(v({-1, 0}), 0);
    s.add_inequality(v({0, -1}), 0);
    s.add_equality(v({1, -1}), 0);
  }
  auto r = maximize(s, v({1, 1}));
  ASSERT_TRUE(r.is_feasible());
  EXPECT_EQ(*r.objective, 1);
  EXPECT_EQ((*r.witness)[0], make_rational(1, 2));
}
