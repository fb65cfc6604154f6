#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace netcap;

namespace {

Constraint row(std::vector<int> c, Sense s, Rational rhs) {
  Constraint r;
  for (int x : c) r.coeffs.push_back(x);
  r.sense = s;
  r.rhs = rhs;
  return r;
}

std::vector<Rational> rv(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.push_back(x);
  return out;
}

}  // namespace

TEST(Simplex, SmallMax) {
  LinearProgram lp;
  lp.objective = rv({3, 2});
  lp.rows = {row({1, 1}, Sense::le, 4), row({1, 3}, Sense::le, 6)};
  lp.upper = {Rational(3), std::nullopt};
  auto s = simplex_exact(lp);
  ASSERT_EQ(s.status, LpStatus::optimal);
  EXPECT_EQ(s.value, 11);
  EXPECT_EQ(s.x, rv({3, 1}));
  EXPECT_TRUE(certify(lp, s.x, s.duals).ok());
}

TEST(Simplex, InfeasibleAndUnbounded) {
  LinearProgram lp;
  lp.objective = rv({1});
  lp.rows = {row({1}, Sense::ge, 2), row({1}, Sense::le, 1)};
  EXPECT_EQ(simplex_exact(lp).status, LpStatus::infeasible);
  lp.rows = {row({1, -1}, Sense::le, 1)};
  lp.objective = rv({1, 0});
  EXPECT_EQ(simplex_exact(lp).status, LpStatus::unbounded);
}

TEST(Simplex, BealeCyclingExample) {
  // cycles under the textbook largest-coefficient rule
  LinearProgram lp;
  lp.objective = {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)};
  Constraint a, b, c;
  a.coeffs = {Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)};
  a.rhs = 0;
  b.coeffs = {Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)};
  b.rhs = 0;
  c.coeffs = rv({0, 0, 1, 0});
  c.rhs = 1;
  lp.rows = {a, b, c};
  auto s = simplex_exact(lp);
  ASSERT_EQ(s.status, LpStatus::optimal);
  EXPECT_EQ(s.value, Rational(1, 20));
  EXPECT_TRUE(certify(lp, s.x, s.duals).ok());
}

TEST(Simplex, EqualitiesAndRedundantRows) {
  LinearProgram lp;
  lp.maximize = false;
  lp.objective = rv({2, 3, 1});
  lp.rows = {row({1, 1, 1}, Sense::eq, 4), row({2, 2, 2}, Sense::eq, 8), row({1, 0, -1}, Sense::ge, -1),
             row({-1, -1, 0}, Sense::le, -2)};
  auto s = simplex_exact(lp);
  ASSERT_EQ(s.status, LpStatus::optimal);
  EXPECT_EQ(s.value, *oracle::lp_by_vertices(lp));
  EXPECT_TRUE(certify(lp, s.x, s.duals).ok());
}

TEST(Simplex, RandomAgainstVertexEnumeration) {
  std::mt19937 rng(17);
  int optimal = 0;
  for (int it = 0; it < 300; ++it) {
    LinearProgram lp;
    std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    lp.maximize = rng() % 2;
    for (std::size_t j = 0; j < n; ++j) lp.objective.push_back(int(rng() % 7) - 3);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<int> c;
      for (std::size_t j = 0; j < n; ++j) c.push_back(int(rng() % 7) - 3);
      Sense s = std::array<Sense, 3>{Sense::le, Sense::ge, Sense::eq}[rng() % 3];
      lp.rows.push_back(row(c, s, int(rng() % 9) - 2));
    }
    for (std::size_t j = 0; j < n; ++j) lp.upper.push_back(Rational(1 + rng() % 4));  // bounded
    auto s = simplex_exact(lp);
    auto ref = oracle::lp_by_vertices(lp);
    ASSERT_NE(s.status, LpStatus::unbounded);
    EXPECT_EQ(s.status == LpStatus::optimal, ref.has_value()) << dump_lp(lp);
    if (s.status == LpStatus::optimal && ref) {
      ++optimal;
      EXPECT_EQ(s.value, *ref) << dump_lp(lp);
      EXPECT_TRUE(certify(lp, s.x, s.duals).ok()) << dump_lp(lp);
    }
  }
  EXPECT_GT(optimal, 50);
}

TEST(Simplex, CoveringExample) {
  auto r = solve_covering({{1, 0}, {0, 1}, {1, 1}}, rv({3, 3, 7}), rv({1, 1}));
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(r.y, rv({1, 1, 0}));
  r = solve_covering({{1, 0}, {0, 1}, {1, 1}}, rv({3, 3, 5}), rv({1, 1}));
  EXPECT_EQ(r.value, 5);
  // box bounds follow the covered coordinates
  r = solve_covering({{1, 0}}, rv({1}), {Rational(5, 2), Rational(0)});
  EXPECT_EQ(r.lp.upper[0], Rational(3));
  EXPECT_EQ(r.value, Rational(5, 2));
}

TEST(Simplex, ParseRational) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Simplex, DumpIsReadable) {
  LinearProgram lp;
  lp.objective = rv({0, 1});
  lp.var_names = {"x", "lambda"};
  lp.rows = {row({1, -2}, Sense::ge, 0)};
  lp.rows[0].name = "demand_a";
  auto d = dump_lp(lp);
  EXPECT_NE(d.find("demand_a: x - 2 lambda >= 0"), std::string::npos) << d;
}
