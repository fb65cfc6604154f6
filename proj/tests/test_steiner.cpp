#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace netcap;

namespace {

std::vector<std::string> names(const Network& net, const std::vector<int>& edges) {
  std::vector<std::string> out;
  for (int e : edges) out.push_back(net.edges[e].id);
  std::sort(out.begin(), out.end());
  return out;
}

// minimal connecting subsets by checking every subset
std::vector<std::vector<int>> trees_by_subsets(const Network& net, int s, const std::vector<int>& rcv) {
  std::vector<std::vector<int>> out;
  const std::size_t E = net.num_edges();
  for (std::uint32_t mask = 0; mask < (1u << E); ++mask) {
    std::vector<bool> m(E);
    for (std::size_t e = 0; e < E; ++e) m[e] = mask >> e & 1;
    if (!connects(net, s, rcv, m)) continue;
    bool minimal = true;
    for (std::size_t e = 0; e < E && minimal; ++e) {
      if (!m[e]) continue;
      m[e] = false;
      if (connects(net, s, rcv, m)) minimal = false;
      m[e] = true;
    }
    if (!minimal) continue;
    std::vector<int> t;
    for (std::size_t e = 0; e < E; ++e)
      if (m[e]) t.push_back(int(e));
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational single_message_opt(const Network& net, int msg) {
  ParentPolytope P = empty_parent(net);
  for (const auto& t : enumerate_trees(net, msg)) {
    ParentVariable v;
    v.edges = t.edges;
    v.weight.assign(net.num_messages(), 0);
    v.weight[msg] = 1;
    P.variables.push_back(v);
  }
  std::vector<Rational> q(net.num_messages(), 0);
  q[msg] = 1;
  return oracle_ray_exact(P, q).lambda;
}

}  // namespace

TEST(Steiner, ButterflyTrees) {
  auto net = fixture_network("butterfly");
  auto a = enumerate_trees(net, 0);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(names(net, a[0].edges), (std::vector<std::string>{"e1", "e3", "e5"}));
  auto b = enumerate_trees(net, 1);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(names(net, b[0].edges), (std::vector<std::string>{"e2", "e3", "e4"}));
}

TEST(Steiner, MinCostExamples) {
  auto net = fixture_network("butterfly");
  std::vector<std::int64_t> unit(7, 1);
  auto t = min_cost_tree_bruteforce(net, 0, {4, 5}, unit);
  ASSERT_TRUE(t.found);
  EXPECT_EQ(t.cost, 4);
  EXPECT_TRUE(connects(net, 0, {4, 5}, t.edges));

  std::vector<double> l(7, 1.0);
  l[*net.edge_index("e6")] = 10;
  auto p = min_cost_tree_shortestpaths(net, 0, {4}, l);
  EXPECT_EQ(names(net, p.edges), (std::vector<std::string>{"e1", "e3", "e4"}));
  EXPECT_EQ(p.cost, 3.0);
}

TEST(Steiner, EnumerationMatchesSubsets) {
  std::mt19937 rng(23);
  for (int it = 0; it < 120; ++it) {
    auto net = oracle::random_network_retry(rng, 6, 11, 1);
    const auto& m = net.messages[0];
    EXPECT_EQ(enumerate_trees(net, m.sources[0], m.receivers), trees_by_subsets(net, m.sources[0], m.receivers));
  }
}

TEST(Steiner, ShortestPathsWithinReceiverFactor) {
  std::mt19937 rng(29);
  for (int it = 0; it < 150; ++it) {
    auto net = oracle::random_network_retry(rng, 7, 12, 1);
    const auto& m = net.messages[0];
    std::vector<std::int64_t> l(net.num_edges());
    for (auto& x : l) x = rng() % 5;
    auto best = min_cost_tree_bruteforce(net, m.sources[0], m.receivers, l);
    auto sp = min_cost_tree_shortestpaths(net, m.sources[0], m.receivers, l);
    ASSERT_TRUE(best.found && sp.found);
    EXPECT_TRUE(connects(net, m.sources[0], m.receivers, sp.edges));
    EXPECT_EQ(prune_to_minimal(net, m.sources[0], m.receivers, sp.edges), sp.edges);
    EXPECT_LE(best.cost, sp.cost);
    EXPECT_LE(sp.cost, std::int64_t(m.receivers.size()) * best.cost);
  }
}

TEST(Steiner, TiesPickSmallestSet) {
  Network net;
  for (auto n : {"s", "x", "t"}) net.add_node(n);
  net.add_edge("p", 0, 2);
  net.add_edge("q", 0, 1);
  net.add_edge("r", 1, 2);
  net.add_edge("z", 0, 2);
  net.add_message("m", {0}, {2});
  auto t = min_cost_tree_bruteforce(net, 0, {2}, std::vector<int>{1, 0, 1, 1});
  EXPECT_EQ(t.edges, (std::vector<int>{0}));
}

TEST(Steiner, PackingBounds) {
  auto net = fixture_network("butterfly");
  BruteForceOracle o(net, 0);
  auto r = pack_trees(net, 0, 0.5, o, 1.0);
  EXPECT_LE(r.value, 1.0);
  EXPECT_GE(r.value * 1.5, 1.0);

  std::mt19937 rng(31);
  for (int it = 0; it < 25; ++it) {
    auto g = oracle::random_network_retry(rng, 6, 10, 1, 3);
    double opt = single_message_opt(g, 0).get_d();
    for (double w : {0.25, 0.5, 0.9}) {
      BruteForceOracle b(g, 0);
      double v = pack_trees(g, 0, w, b, 1.0).value;
      EXPECT_LE(v, opt * (1 + 1e-9));
      EXPECT_GE(v * (1 + w), opt * (1 - 1e-9));
    }
  }
}
