#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <queue>
#include <vector>

#include "netcap/caps.hpp"
#include "netcap/network.hpp"

namespace netcap {

struct SteinerTree {
  int message = -1;
  std::vector<int> edges;  // sorted edge indices
  bool operator==(const SteinerTree&) const = default;
};

inline bool connects(const Network& net, int source, const std::vector<int>& receivers, const std::vector<bool>& mask) {
  auto reach = reachable_from(net, {source}, &mask);
  return std::all_of(receivers.begin(), receivers.end(), [&](int r) { return reach[r]; });
}

inline bool connects(const Network& net, int source, const std::vector<int>& receivers, const std::vector<int>& edges) {
  std::vector<bool> mask(net.num_edges(), false);
  for (int e : edges) mask[e] = true;
  return connects(net, source, receivers, mask);
}

// Drops edges, highest index first, while the set still connects.
inline std::vector<int> prune_to_minimal(const Network& net, int source, const std::vector<int>& receivers, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<bool> mask(net.num_edges(), false);
  for (int e : edges) mask[e] = true;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    mask[*it] = false;
    if (!connects(net, source, receivers, mask)) mask[*it] = true;
  }
  std::vector<int> out;
  for (int e : edges)
    if (mask[e]) out.push_back(e);
  return out;
}

// Minimal edge sets joining `source` to all `receivers`. Each one is an
// arborescence with receiver leaves, so we build them by giving every tree
// node one parent edge, deepest node first.
inline std::vector<std::vector<int>> enumerate_trees(const Network& net, int source, const std::vector<int>& receivers,
                                                     const Caps& caps = {}) {
  auto topo = topo_sort(net);
  auto reach = reachable_from(net, {source});
  std::vector<std::vector<int>> in(net.num_nodes());
  std::size_t relevant = 0;
  for (std::size_t e = 0; e < net.num_edges(); ++e)
    if (reach[net.edges[e].tail]) in[net.edges[e].head].push_back(int(e)), ++relevant;
  check_cap("tree_edges", relevant, caps.tree_edges);

  std::vector<std::vector<int>> out;
  for (int r : receivers)
    if (!reach[r]) return out;

  std::vector<int> chosen;
  std::vector<bool> needed(net.num_nodes(), false);
  for (int r : receivers)
    if (r != source) needed[r] = true;

  std::function<void(int)> rec = [&](int from_pos) {
    int v = -1;
    for (int p = from_pos; p >= 0; --p)
      if (needed[topo.order[p]]) {
        v = topo.order[p];
        break;
      }
    if (v < 0) {
      auto t = chosen;
      std::sort(t.begin(), t.end());
      out.push_back(t);
      return;
    }
    needed[v] = false;
    for (int e : in[v]) {
      int u = net.edges[e].tail;
      // u sits earlier in the order, so it has no parent edge yet
      bool fresh = u != source && !needed[u];
      chosen.push_back(e);
      if (fresh) needed[u] = true;
      rec(topo.position[v] - 1);
      if (fresh) needed[u] = false;
      chosen.pop_back();
    }
    needed[v] = true;
  };
  rec(int(net.num_nodes()) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SteinerTree> enumerate_trees(const Network& net, int message, const Caps& caps = {}) {
  std::vector<SteinerTree> out;
  for (auto& t : enumerate_trees(net, single_source(net, message), net.messages[message].receivers, caps))
    out.push_back({message, std::move(t)});
  return out;
}

template <class Length>
struct TreeChoice {
  std::vector<int> edges;
  Length cost{};
  bool found = false;
};

template <class Length>
Length tree_cost(const std::vector<int>& edges, const std::vector<Length>& lengths) {
  Length c{};
  for (int e : edges) c += lengths[e];
  return c;
}

// Exhaustive; ties go to the lexicographically smallest edge set.
template <class Length>
TreeChoice<Length> min_cost_tree_bruteforce(const std::vector<std::vector<int>>& trees, const std::vector<Length>& lengths) {
  TreeChoice<Length> best;
  for (const auto& t : trees) {
    Length c = tree_cost(t, lengths);
    if (!best.found || c < best.cost) best = {t, c, true};
  }
  return best;
}

template <class Length>
TreeChoice<Length> min_cost_tree_bruteforce(const Network& net, int source, const std::vector<int>& receivers,
                                            const std::vector<Length>& lengths, const Caps& caps = {}) {
  return min_cost_tree_bruteforce(enumerate_trees(net, source, receivers, caps), lengths);
}

// Union of shortest source-receiver paths, pruned to a minimal set. Within
// a factor (number of receivers) of optimal.
template <class Length>
TreeChoice<Length> min_cost_tree_shortestpaths(const Network& net, int source, const std::vector<int>& receivers,
                                               const std::vector<Length>& lengths) {
  const std::size_t n = net.num_nodes();
  std::vector<Length> dist(n);
  std::vector<bool> done(n, false), seen(n, false);
  std::vector<int> pred(n, -1);
  seen[source] = true;
  dist[source] = Length{};
  std::vector<std::vector<int>> outs(n);
  for (std::size_t e = 0; e < net.num_edges(); ++e) outs[net.edges[e].tail].push_back(int(e));
  while (true) {
    int v = -1;
    for (std::size_t u = 0; u < n; ++u)
      if (seen[u] && !done[u] && (v < 0 || dist[u] < dist[v])) v = int(u);
    if (v < 0) break;
    done[v] = true;
    for (int e : outs[v]) {
      int w = net.edges[e].head;
      Length d = dist[v] + lengths[e];
      if (!seen[w] || d < dist[w]) {
        seen[w] = true;
        dist[w] = d;
        pred[w] = e;
      }
    }
  }
  TreeChoice<Length> out;
  std::vector<int> edges;
  for (int r : receivers) {
    if (!seen[r]) return out;
    for (int v = r; v != source; v = net.edges[pred[v]].tail) edges.push_back(pred[v]);
  }
  out.edges = prune_to_minimal(net, source, receivers, edges);
  out.cost = tree_cost(out.edges, lengths);
  out.found = true;
  return out;
}

// Floating-point oracle used inside the approximation loops.
class SteinerOracle {
 public:
  virtual ~SteinerOracle() = default;
  virtual TreeChoice<double> operator()(const std::vector<double>& lengths) const = 0;
  virtual double ratio() const = 0;
};

class BruteForceOracle : public SteinerOracle {
 public:
  BruteForceOracle(const Network& net, int message, const Caps& caps = {})
      : trees_(enumerate_trees(net, single_source(net, message), net.messages[message].receivers, caps)) {}
  TreeChoice<double> operator()(const std::vector<double>& l) const override { return min_cost_tree_bruteforce(trees_, l); }
  double ratio() const override { return 1.0; }
  const std::vector<std::vector<int>>& trees() const { return trees_; }

 private:
  std::vector<std::vector<int>> trees_;
};

class ShortestPathOracle : public SteinerOracle {
 public:
  ShortestPathOracle(const Network& net, int message)
      : net_(net), source_(single_source(net, message)), receivers_(net.messages[message].receivers) {}
  TreeChoice<double> operator()(const std::vector<double>& l) const override {
    return min_cost_tree_shortestpaths(net_, source_, receivers_, l);
  }
  double ratio() const override { return double(receivers_.size()); }

 private:
  const Network& net_;
  int source_;
  std::vector<int> receivers_;
};

enum class OracleKind { brute, paths };

inline std::unique_ptr<SteinerOracle> make_oracle(OracleKind k, const Network& net, int message, const Caps& caps = {}) {
  if (k == OracleKind::brute) return std::make_unique<BruteForceOracle>(net, message, caps);
  return std::make_unique<ShortestPathOracle>(net, message);
}

struct PackingResult {
  double value = 0;
  double raw_flow = 0;
  std::size_t iterations = 0;
  std::map<std::vector<int>, double> tree_flow;  // unscaled
};

// Multiplicative-weights packing of Steiner trees for one message.
inline PackingResult pack_trees(const Network& net, int message, double omega, const SteinerOracle& oracle, double A) {
  if (!(omega > 0 && omega < 1)) throw Error("omega must be in (0,1)");
  const double eta = 3 * omega / 16;
  const double L = double(net.num_edges());
  const double delta = (1 + eta) * std::pow((1 + eta) * L, -1 / eta);
  std::vector<double> l(net.num_edges(), delta);
  PackingResult out;
  while (true) {
    auto t = oracle(l);
    if (!t.found) throw InfeasibleRay("message '" + net.messages[message].id + "' has no Steiner tree");
    if (!(t.cost < A)) break;
    double d = std::numeric_limits<double>::infinity();
    for (int e : t.edges) d = std::min(d, double(net.edges[e].capacity));
    out.raw_flow += d;
    out.tree_flow[t.edges] += d;
    for (int e : t.edges) l[e] *= 1 + eta * d / double(net.edges[e].capacity);
    ++out.iterations;
  }
  out.value = out.raw_flow / (std::log((1 + eta) / delta) / std::log1p(eta));
  return out;
}

}  // namespace netcap
