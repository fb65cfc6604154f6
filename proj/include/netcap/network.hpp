#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "netcap/error.hpp"

namespace netcap {

struct Edge {
  std::string id;
  int tail = -1;
  int head = -1;
  std::int64_t capacity = 1;
  bool operator==(const Edge&) const = default;
};

struct Message {
  std::string id;
  std::vector<int> sources;
  std::vector<int> receivers;
  bool operator==(const Message&) const = default;
};

// Directed acyclic multigraph with messages. Nodes, edges and messages are
// referred to by dense indices; ids are only for documents and output.
struct Network {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  std::vector<Message> messages;
  int alphabet_size = 2;

  int add_node(std::string id) {
    nodes.push_back(std::move(id));
    return int(nodes.size()) - 1;
  }
  int add_edge(std::string id, int tail, int head, std::int64_t cap = 1) {
    edges.push_back({std::move(id), tail, head, cap});
    return int(edges.size()) - 1;
  }
  int add_message(std::string id, std::vector<int> src, std::vector<int> rcv) {
    messages.push_back({std::move(id), std::move(src), std::move(rcv)});
    return int(messages.size()) - 1;
  }

  std::size_t num_nodes() const { return nodes.size(); }
  std::size_t num_edges() const { return edges.size(); }
  std::size_t num_messages() const { return messages.size(); }

  std::optional<int> node_index(std::string_view id) const { return find(nodes, id); }
  std::optional<int> edge_index(std::string_view id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].id == id) return int(i);
    return std::nullopt;
  }
  std::optional<int> message_index(std::string_view id) const {
    for (std::size_t i = 0; i < messages.size(); ++i)
      if (messages[i].id == id) return int(i);
    return std::nullopt;
  }

  std::vector<int> in_edges(int v) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].head == v) r.push_back(int(i));
    return r;
  }
  std::vector<int> out_edges(int v) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].tail == v) r.push_back(int(i));
    return r;
  }
  // messages generated at / demanded by v, in message order
  std::vector<int> generated(int v) const {
    std::vector<int> r;
    for (std::size_t m = 0; m < messages.size(); ++m)
      if (std::count(messages[m].sources.begin(), messages[m].sources.end(), v)) r.push_back(int(m));
    return r;
  }
  std::vector<int> demanded(int v) const {
    std::vector<int> r;
    for (std::size_t m = 0; m < messages.size(); ++m)
      if (std::count(messages[m].receivers.begin(), messages[m].receivers.end(), v)) r.push_back(int(m));
    return r;
  }

  bool operator==(const Network&) const = default;

 private:
  static std::optional<int> find(const std::vector<std::string>& v, std::string_view id) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == id) return int(i);
    return std::nullopt;
  }
};

enum class Severity { error, warning };

struct Violation {
  Severity severity = Severity::error;
  std::string rule;
  std::string element;
  std::string detail;
};

struct TopoOrder {
  std::vector<int> order;                 // node indices
  std::vector<int> position;              // node -> position in order
  std::vector<std::vector<int>> cuts;     // cuts[i] = edges leaving the first i+1 nodes
  std::size_t phi = 0;                    // max cut size
};

// Kahn's algorithm, always taking the smallest ready node index, so the
// order is deterministic. Returns nullopt on a cycle.
inline std::optional<TopoOrder> try_topo_sort(const Network& net) {
  const std::size_t n = net.num_nodes();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& e : net.edges) {
    ++indeg[e.head];
    succ[e.tail].push_back(e.head);
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(int(v));
  TopoOrder t;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    t.order.push_back(v);
    for (int w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (t.order.size() != n) return std::nullopt;
  t.position.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) t.position[t.order[i]] = int(i);
  t.cuts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
      const auto& ed = net.edges[e];
      if (t.position[ed.tail] <= int(i) && t.position[ed.head] > int(i)) t.cuts[i].push_back(int(e));
    }
    t.phi = std::max(t.phi, t.cuts[i].size());
  }
  return t;
}

inline TopoOrder topo_sort(const Network& net) {
  auto t = try_topo_sort(net);
  if (!t) throw ValidationError("network has a directed cycle");
  return *t;
}

inline std::vector<bool> reachable_from(const Network& net, const std::vector<int>& starts,
                                        const std::vector<bool>* edge_mask = nullptr) {
  std::vector<bool> seen(net.num_nodes(), false);
  std::vector<int> stack;
  for (int s : starts)
    if (!seen[s]) seen[s] = true, stack.push_back(s);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
      if (edge_mask && !(*edge_mask)[e]) continue;
      const auto& ed = net.edges[e];
      if (ed.tail == v && !seen[ed.head]) seen[ed.head] = true, stack.push_back(ed.head);
    }
  }
  return seen;
}

inline std::vector<Violation> validate(const Network& net) {
  std::vector<Violation> out;
  auto err = [&](std::string rule, std::string el, std::string detail = {}) {
    out.push_back({Severity::error, std::move(rule), std::move(el), std::move(detail)});
  };
  if (net.alphabet_size < 2) err("alphabet too small", "alphabet_size", std::to_string(net.alphabet_size));

  auto dup = [&](const std::vector<std::string>& ids, const char* what) {
    std::set<std::string> seen;
    for (const auto& id : ids)
      if (!seen.insert(id).second) err("duplicate id", id, what);
  };
  dup(net.nodes, "node");
  std::vector<std::string> eids, mids;
  for (const auto& e : net.edges) eids.push_back(e.id);
  for (const auto& m : net.messages) mids.push_back(m.id);
  dup(eids, "edge");
  dup(mids, "message");

  const int n = int(net.num_nodes());
  bool endpoints_ok = true;
  for (const auto& e : net.edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      err("dangling endpoint", e.id);
      endpoints_ok = false;
      continue;
    }
    if (e.capacity <= 0) err("nonpositive capacity", e.id, std::to_string(e.capacity));
  }
  for (const auto& m : net.messages) {
    for (int v : m.sources)
      if (v < 0 || v >= n) err("dangling endpoint", m.id, "source"), endpoints_ok = false;
    for (int v : m.receivers)
      if (v < 0 || v >= n) err("dangling endpoint", m.id, "receiver"), endpoints_ok = false;
  }
  if (!endpoints_ok) return out;

  if (!try_topo_sort(net)) err("cycle", "network");

  for (const auto& m : net.messages) {
    if (m.sources.empty()) err("message with no source", m.id);
    if (m.receivers.empty()) err("message with no demand", m.id);
    for (int v : m.receivers)
      if (std::count(m.sources.begin(), m.sources.end(), v))
        err("generates and demands", m.id, net.nodes[v]);
    if (!m.sources.empty()) {
      auto reach = reachable_from(net, m.sources);
      for (int v : m.receivers)
        if (!reach[v]) err("unreachable demand", m.id, net.nodes[v]);
    }
  }

  for (int v = 0; v < n; ++v) {
    bool touched = false;
    for (const auto& e : net.edges) touched |= (e.tail == v || e.head == v);
    for (const auto& m : net.messages) {
      touched |= std::count(m.sources.begin(), m.sources.end(), v) > 0;
      touched |= std::count(m.receivers.begin(), m.receivers.end(), v) > 0;
    }
    if (!touched) out.push_back({Severity::warning, "isolated node", net.nodes[v], {}});
  }
  return out;
}

inline bool has_errors(const std::vector<Violation>& v) {
  return std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.severity == Severity::error; });
}

inline std::string describe(const std::vector<Violation>& vs) {
  std::string s;
  for (const auto& v : vs) {
    if (!s.empty()) s += "; ";
    s += (v.severity == Severity::error ? "" : "warning: ") + v.rule + " (" + v.element;
    if (!v.detail.empty()) s += ": " + v.detail;
    s += ")";
  }
  return s;
}

inline void require_valid(const Network& net) {
  auto vs = validate(net);
  if (has_errors(vs)) throw ValidationError("invalid network: " + describe(vs));
}

inline std::string fresh_id(const std::set<std::string>& taken, const std::string& base) {
  if (!taken.count(base)) return base;
  for (int k = 1;; ++k) {
    auto cand = base + "_" + std::to_string(k);
    if (!taken.count(cand)) return cand;
  }
}

// Replaces each multi-source message by a new source node feeding every
// original source with one edge of capacity (sum of capacities) + 1, which
// no cut in the original network can match.
inline Network add_super_sources(const Network& net) {
  Network out = net;
  std::int64_t total = 0;
  for (const auto& e : net.edges) total += e.capacity;
  std::set<std::string> node_ids(net.nodes.begin(), net.nodes.end());
  std::set<std::string> edge_ids;
  for (const auto& e : net.edges) edge_ids.insert(e.id);
  for (auto& m : out.messages) {
    if (m.sources.size() <= 1) continue;
    auto sid = fresh_id(node_ids, "s_" + m.id);
    node_ids.insert(sid);
    int s = out.add_node(sid);
    for (int v : m.sources) {
      auto eid = fresh_id(edge_ids, sid + "_" + net.nodes[v]);
      edge_ids.insert(eid);
      out.add_edge(eid, s, v, total + 1);
    }
    m.sources = {s};
  }
  return out;
}

inline int single_source(const Network& net, int message) {
  const auto& m = net.messages.at(message);
  if (m.sources.size() != 1)
    throw ValidationError("message '" + m.id + "' needs exactly one source here (apply add_super_sources)");
  return m.sources.front();
}

}  // namespace netcap
