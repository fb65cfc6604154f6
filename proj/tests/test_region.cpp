#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace netcap;

namespace {

using V = std::vector<std::vector<Rational>>;

V pts(std::initializer_list<std::pair<Rational, Rational>> xs) {
  V out;
  for (auto [a, b] : xs) out.push_back({a, b});
  return out;
}

V trace_vertices(const ParentPolytope& P) {
  auto tr = boundary_trace_2d([&](const Point2& d) {
    auto r = oracle_ray_exact(P, {d[0], d[1]});
    return Point2{r.point[0], r.point[1]};
  });
  V out;
  for (const auto& p : tr.vertices) out.push_back({p[0], p[1]});
  return out;
}

}  // namespace

TEST(Region, ButterflyRouteRay) {
  auto net = fixture_network("butterfly");
  auto r = oracle_ray_exact_route(net, {1, 1});
  EXPECT_EQ(r.lambda, Rational(1, 2));
  EXPECT_TRUE(r.certified);
  auto lp = build_route_ray_lp(route_parent(net), {1, 0});
  EXPECT_EQ(lp.rows.size(), 9u);
  EXPECT_EQ(simplex_exact(lp).value, 1);
  EXPECT_THROW(oracle_ray_exact_route(net, {0, 0}), Error);
  EXPECT_THROW(oracle_ray_exact_route(net, {-1, 1}), Error);
}

TEST(Region, InfeasibleRay) {
  ParentPolytope P;
  P.message_ids = {"a", "b"};
  P.edge_ids = {"e"};
  P.capacities = {1};
  P.variables = {{{0}, {1, 0}, "t"}};
  EXPECT_EQ(simplex_exact(build_ray_lp(P, {0, 1})).value, 0);
  EXPECT_THROW(oracle_ray_exact(P, {0, 1}), InfeasibleRay);
  EXPECT_EQ(oracle_ray_exact(P, {1, 0}).lambda, 1);
}

TEST(Region, ButterflyRoutingRegion) {
  auto P = route_parent(fixture_network("butterfly"));
  auto want = pts({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(vertex_enum_region(P).vertices, want);
  EXPECT_EQ(trace_vertices(P), want);
}

TEST(Region, ButterflyCodingRegion) {
  auto net = fixture_network("butterfly");
  auto P = lcode_parent(net, PrimeField(2));
  auto want = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(vertex_enum_region(P).vertices, want);
  EXPECT_EQ(trace_vertices(P), want);
  EXPECT_EQ(oracle_ray_exact_lcode(net, PrimeField(2), {1, 1}).lambda, 1);
}

TEST(Region, VariantsAgree) {
  for (auto name : {"butterfly_direct", "butterfly_dual_demand"}) {
    auto net = fixture_network(name);
    auto R = route_parent(net);
    EXPECT_EQ(vertex_enum_region(R).vertices, trace_vertices(R)) << name;
    auto C = lcode_parent(net, PrimeField(2));
    EXPECT_EQ(vertex_enum_region(C).vertices, trace_vertices(C)) << name;
  }
}

TEST(Region, RandomTwoMessageNetworksAgree) {
  std::mt19937 rng(53);
  int ran = 0;
  for (int it = 0; it < 40 && ran < 15; ++it) {
    auto net = oracle::random_network_retry(rng, 6, 9, 2, 2);
    auto R = route_parent(net);
    if (R.variables.size() > Caps{}.vertex_vars) continue;
    ++ran;
    EXPECT_EQ(vertex_enum_region(R).vertices, trace_vertices(R)) << serialize_network(net);
  }
  EXPECT_GE(ran, 10);
}

TEST(Region, ZeroCapacityParent) {
  ParentPolytope P;
  P.message_ids = {"a", "b"};
  P.edge_ids = {"e"};
  P.capacities = {0};
  P.variables = {{{0}, {1, 0}, "t"}, {{0}, {0, 1}, "u"}};
  EXPECT_EQ(vertex_enum_region(P).vertices, pts({{0, 0}}));
}

TEST(Region, ThreeMessages) {
  ParentPolytope P;
  P.message_ids = {"a", "b", "c"};
  P.edge_ids = {"e"};
  P.capacities = {1};
  P.variables = {{{0}, {1, 0, 0}, "x"}, {{0}, {0, 1, 0}, "y"}, {{0}, {0, 0, 1}, "z"}};
  auto v = vertex_enum_region(P).vertices;
  EXPECT_EQ(v.size(), 4u);
}

TEST(Region, ApproxRouteSandwich) {
  auto net = fixture_network("butterfly_direct");
  std::vector<Rational> q{1, 2};
  double opt = oracle_ray_exact_route(net, q).lambda.get_d();
  for (auto kind : {OracleKind::brute, OracleKind::paths}) {
    ApproxParams p;
    p.omega = 0.5;
    p.oracle = kind;
    auto r = oracle_ray_approx_route(net, q, p);
    EXPECT_LE(r.lambda, opt * (1 + 1e-9));
    EXPECT_GE(r.lambda * (1 + p.omega) * r.ratio, opt * (1 - 1e-9));
  }
}

TEST(Region, ApproxLCodeSandwich) {
  auto net = fixture_network("butterfly");
  for (std::vector<Rational> q : {std::vector<Rational>{1, 1}, std::vector<Rational>{2, 1}}) {
    double opt = oracle_ray_exact_lcode(net, PrimeField(2), q).lambda.get_d();
    ApproxParams p;
    p.omega = 0.5;
    auto r = oracle_ray_approx_lcode(net, PrimeField(2), q, p);
    EXPECT_LE(r.lambda, opt * (1 + 1e-9));
    EXPECT_GE(r.lambda * (1 + p.omega), opt * (1 - 1e-9));
  }
}

TEST(Region, TraceCallBound) {
  auto P = route_parent(fixture_network("butterfly_direct"));
  std::size_t calls = 0;
  auto tr = boundary_trace_2d([&](const Point2& d) {
    ++calls;
    auto r = oracle_ray_exact(P, {d[0], d[1]});
    return Point2{r.point[0], r.point[1]};
  });
  EXPECT_EQ(calls, tr.calls);
  EXPECT_LE(tr.calls, trace_call_bound(tr.vertices.size()));
}
