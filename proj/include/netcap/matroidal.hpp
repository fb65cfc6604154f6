#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcap/matroid.hpp"
#include "netcap/network.hpp"

namespace netcap {

struct ScriptStep {
  enum class Kind { circuit, receiver, full_receiver };
  Kind kind = Kind::circuit;
  // circuit / receiver: elements[0] is x0. full_receiver: a base.
  std::vector<std::size_t> elements;
};

struct ConstructionScript {
  std::vector<std::size_t> base;
  std::vector<ScriptStep> steps;
};

// f on messages and edges, g on ground elements
struct NetworkMatroidMapping {
  std::vector<std::size_t> message_element;
  std::vector<std::size_t> edge_element;
  std::vector<std::optional<int>> node_of;
};

struct Construction {
  Network network;
  NetworkMatroidMapping mapping;
};

namespace detail {
inline std::string set_str(const RepresentableMatroid& m, const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + m.label(s[i]);
  return out + "}";
}
}  // namespace detail

inline Construction construct(const RepresentableMatroid& m, const ConstructionScript& script) {
  Construction out;
  auto& net = out.network;
  auto& map = out.mapping;
  net.alphabet_size = int(m.field().p());
  map.node_of.assign(m.ground_size(), std::nullopt);
  for (auto x : script.base)
    if (x >= m.ground_size()) throw ScriptError("element index out of range");

  auto sorted = [](std::vector<std::size_t> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  if (!m.is_base(sorted(script.base))) throw ScriptError("script base " + detail::set_str(m, script.base) + " is not a base");

  int node_count = 0, edge_count = 0;
  auto new_node = [&] { return net.add_node("n" + std::to_string(++node_count)); };
  auto new_edge = [&](int from, int to, std::size_t element) {
    net.add_edge("e" + std::to_string(++edge_count), from, to, 1);
    map.edge_element.push_back(element);
  };
  std::vector<int> message_at(m.ground_size(), -1);

  for (auto b : script.base) {
    int v = new_node();
    int msg = net.add_message(m.label(b), {v}, {});
    map.message_element.push_back(b);
    map.node_of[b] = v;
    message_at[b] = msg;
  }

  for (const auto& st : script.steps) {
    for (auto x : st.elements)
      if (x >= m.ground_size()) throw ScriptError("element index out of range");
    auto sset = sorted(st.elements);
    if (std::adjacent_find(sset.begin(), sset.end()) != sset.end()) throw ScriptError("repeated element in step");
    if (st.kind == ScriptStep::Kind::full_receiver) {
      if (!m.is_base(sset)) throw ScriptError("Step 4 set " + detail::set_str(m, st.elements) + " is not a base");
      for (auto x : st.elements)
        if (!map.node_of[x]) throw ScriptError("Step 4: g(" + m.label(x) + ") undefined");
      int y = new_node();
      for (auto x : st.elements) new_edge(*map.node_of[x], y, x);
      for (auto& msg : net.messages) msg.receivers.push_back(y);
      continue;
    }
    if (st.elements.size() < 2) throw ScriptError("step needs a circuit with at least two elements");
    if (!m.is_circuit(sset)) throw ScriptError("set " + detail::set_str(m, st.elements) + " is not a circuit");
    std::size_t x0 = st.elements[0];
    for (std::size_t i = 1; i < st.elements.size(); ++i)
      if (!map.node_of[st.elements[i]]) throw ScriptError("g(" + m.label(st.elements[i]) + ") undefined");
    if (st.kind == ScriptStep::Kind::circuit) {
      if (map.node_of[x0]) throw ScriptError("Step 2: g(" + m.label(x0) + ") already defined");
      int y = new_node();
      for (std::size_t i = 1; i < st.elements.size(); ++i) new_edge(*map.node_of[st.elements[i]], y, st.elements[i]);
      int n0 = new_node();
      new_edge(y, n0, x0);
      map.node_of[x0] = n0;
    } else {
      if (message_at[x0] < 0) throw ScriptError("Step 3: g(" + m.label(x0) + ") is not a source node");
      int y = new_node();
      for (std::size_t i = 1; i < st.elements.size(); ++i) new_edge(*map.node_of[st.elements[i]], y, st.elements[i]);
      net.messages[message_at[x0]].receivers.push_back(y);
    }
  }
  return out;
}

struct MappingViolation {
  int condition = 0;  // 1: f not injective on messages, 2: f(messages) dependent, 3: node rank
  int node = -1;
  std::size_t rank_in = 0, rank_all = 0;
  std::string detail;
};

struct MappingCheck {
  std::vector<MappingViolation> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

// All violated conditions; node violations in topological order.
inline MappingCheck verify_mapping(const Network& net, const RepresentableMatroid& m, const NetworkMatroidMapping& f) {
  MappingCheck out;
  if (f.message_element.size() != net.num_messages() || f.edge_element.size() != net.num_edges())
    throw Error("mapping size does not match network");
  for (auto x : f.message_element)
    if (x >= m.ground_size()) throw Error("mapping element out of range");
  for (auto x : f.edge_element)
    if (x >= m.ground_size()) throw Error("mapping element out of range");

  auto msgs = f.message_element;
  std::sort(msgs.begin(), msgs.end());
  if (std::adjacent_find(msgs.begin(), msgs.end()) != msgs.end())
    out.violations.push_back({1, -1, 0, 0, "two messages share an element"});
  else if (!m.independent(msgs))
    out.violations.push_back({2, -1, m.rank(msgs), msgs.size(), "message elements are dependent"});

  auto topo = topo_sort(net);
  for (int v : topo.order) {
    std::vector<std::size_t> in, all;
    for (int k : net.generated(v)) in.push_back(f.message_element[k]);
    for (int e : net.in_edges(v)) in.push_back(f.edge_element[e]);
    all = in;
    for (int k : net.demanded(v)) all.push_back(f.message_element[k]);
    for (int e : net.out_edges(v)) all.push_back(f.edge_element[e]);
    auto dedup = [](std::vector<std::size_t> s) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return s;
    };
    std::size_t ri = m.rank(dedup(in)), ra = m.rank(dedup(all));
    if (ri != ra) out.violations.push_back({3, v, ri, ra, "node " + net.nodes[v]});
  }
  return out;
}

// Global coding vectors over the messages in `served` (all when empty).
// Coordinates of unserved messages are always zero.
struct GlobalScalarCode {
  PrimeField field{2};
  std::vector<FVec> message_vectors;
  std::vector<FVec> edge_vectors;
  std::vector<bool> served;

  bool serves(std::size_t k) const { return served.empty() || served[k]; }
};

inline GlobalScalarCode derive_code(const Network& net, const RepresentableMatroid& m, const NetworkMatroidMapping& f) {
  auto chk = verify_mapping(net, m, f);
  if (!chk) throw Error("mapping is not a network-matroid mapping (condition " + std::to_string(chk.violations[0].condition) + ")");
  const auto& F = m.field();
  if (F.p() < std::uint32_t(net.alphabet_size))
    throw FieldError("matroid field GF(" + std::to_string(F.p()) + ") is smaller than the alphabet");

  // drop redundant rows
  auto red = rref(m.matrix());
  FieldMatrix A = red.reduced.top_rows(red.rank);
  const std::size_t r = red.rank, k = net.num_messages();

  // message columns first, then the lowest-index columns extending them to a basis
  std::vector<std::size_t> basis = f.message_element;
  for (std::size_t c = 0; c < m.ground_size() && basis.size() < r; ++c) {
    if (std::count(basis.begin(), basis.end(), c)) continue;
    auto trial = basis;
    trial.push_back(c);
    if (columns_independent(A, trial)) basis = trial;
  }

  // A' = B^{-1} A via rref of [B | A]
  FieldMatrix aug(F, r, r + A.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug.at(i, j) = A.at(i, basis[j]);
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, r + j) = A.at(i, j);
  }
  auto solved = rref(aug).reduced;

  auto coords = [&](std::size_t col) {
    FVec v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = solved.at(i, r + col);
    return v;
  };
  GlobalScalarCode code;
  code.field = F;
  for (std::size_t i = 0; i < k; ++i) code.message_vectors.push_back(coords(f.message_element[i]));
  for (std::size_t e = 0; e < net.num_edges(); ++e) code.edge_vectors.push_back(coords(f.edge_element[e]));
  return code;
}

// Inputs available at v: served messages generated at v, then in-edges.
inline std::vector<FVec> node_inputs(const Network& net, const GlobalScalarCode& code, int v) {
  std::vector<FVec> in;
  for (int k : net.generated(v))
    if (code.serves(k)) in.push_back(code.message_vectors[k]);
  for (int e : net.in_edges(v)) in.push_back(code.edge_vectors[e]);
  return in;
}

struct CodeViolation {
  int condition = 0;  // 1: message vectors, 2: edge not in span at tail, 3: demand not decodable, 4: simulation mismatch
  std::string element;
  std::string detail;
};

struct CodeCheck {
  std::vector<CodeViolation> violations;
  bool simulated = false;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

// Local coefficients recovered once per edge and per demand.
struct LocalCoding {
  std::vector<FVec> edge_coefficients;  // over node_inputs(tail)
  std::vector<std::vector<std::pair<int, FVec>>> decoders;  // per node: (message, coefficients over node_inputs)
};

inline std::optional<LocalCoding> local_coding(const Network& net, const GlobalScalarCode& code) {
  const auto& F = code.field;
  LocalCoding lc;
  lc.edge_coefficients.resize(net.num_edges());
  lc.decoders.resize(net.num_nodes());
  for (int v = 0; v < int(net.num_nodes()); ++v) {
    auto in = node_inputs(net, code, v);
    for (int e : net.out_edges(v)) {
      auto c = solve_combination(F, in, code.edge_vectors[e]);
      if (!c) return std::nullopt;
      lc.edge_coefficients[e] = *c;
    }
    for (int k : net.demanded(v)) {
      if (!code.serves(k)) continue;
      auto c = solve_combination(F, in, unit_vector(net.num_messages(), k));
      if (!c) return std::nullopt;
      lc.decoders[v].push_back({k, *c});
    }
  }
  return lc;
}

struct SimulationResult {
  std::vector<Elem> edge_symbols;
  std::vector<std::tuple<int, int, Elem>> decoded;  // (node, message, value)
};

inline SimulationResult simulate(const Network& net, const GlobalScalarCode& code, const std::vector<Elem>& assignment) {
  const auto& F = code.field;
  if (assignment.size() != net.num_messages()) throw Error("assignment must give one symbol per message");
  for (Elem a : assignment)
    if (a >= F.p()) throw Error("symbol outside the field");
  auto lc = local_coding(net, code);
  if (!lc) throw Error("code is not valid: some edge or demand is outside the span of its inputs");
  auto topo = topo_sort(net);
  SimulationResult out;
  out.edge_symbols.assign(net.num_edges(), 0);
  for (int v : topo.order) {
    std::vector<Elem> in;
    for (int k : net.generated(v))
      if (code.serves(k)) in.push_back(assignment[k]);
    for (int e : net.in_edges(v)) in.push_back(out.edge_symbols[e]);
    auto dot = [&](const FVec& c) {
      Elem s = 0;
      for (std::size_t i = 0; i < c.size(); ++i) s = F.add(s, F.mul(c[i], in[i]));
      return s;
    };
    for (int e : net.out_edges(v)) out.edge_symbols[e] = dot(lc->edge_coefficients[e]);
    for (const auto& [k, c] : lc->decoders[v]) out.decoded.emplace_back(v, k, dot(c));
  }
  return out;
}

inline std::size_t bounded_pow(std::size_t b, std::size_t e, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

inline CodeCheck check_code(const Network& net, const GlobalScalarCode& code, std::size_t sim_limit = 4096) {
  CodeCheck out;
  const auto& F = code.field;
  const std::size_t k = net.num_messages();
  if (code.message_vectors.size() != k || code.edge_vectors.size() != net.num_edges())
    throw Error("code size does not match network");
  for (std::size_t i = 0; i < k; ++i)
    if (code.serves(i) && code.message_vectors[i] != unit_vector(k, i))
      out.violations.push_back({1, net.messages[i].id, "message vector is not a standard basis vector"});
  for (std::size_t e = 0; e < net.num_edges(); ++e)
    for (std::size_t i = 0; i < k; ++i)
      if (!code.serves(i) && code.edge_vectors[e][i] != 0)
        out.violations.push_back({2, net.edges[e].id, "carries an unserved message"});
  for (int v = 0; v < int(net.num_nodes()); ++v) {
    auto in = node_inputs(net, code, v);
    for (int e : net.out_edges(v))
      if (!in_span(F, in, code.edge_vectors[e]))
        out.violations.push_back({2, net.edges[e].id, "not in the span of the inputs at " + net.nodes[v]});
    for (int m : net.demanded(v))
      if (code.serves(m) && !in_span(F, in, unit_vector(k, m)))
        out.violations.push_back({3, net.nodes[v], "cannot decode " + net.messages[m].id});
  }
  if (!out.ok()) return out;

  // exhaustive cross-check when small
  if (bounded_pow(F.p(), k, sim_limit) <= sim_limit) {
    out.simulated = true;
    std::vector<Elem> a(k, 0);
    while (true) {
      auto sim = simulate(net, code, a);
      for (std::size_t e = 0; e < net.num_edges(); ++e) {
        Elem expect = 0;
        for (std::size_t i = 0; i < k; ++i) expect = F.add(expect, F.mul(code.edge_vectors[e][i], a[i]));
        if (expect != sim.edge_symbols[e]) {
          out.violations.push_back({4, net.edges[e].id, "simulated symbol differs from coding vector"});
          return out;
        }
      }
      for (auto [v, m, val] : sim.decoded)
        if (val != a[m]) {
          out.violations.push_back({4, net.nodes[v], "decoded wrong value of " + net.messages[m].id});
          return out;
        }
      std::size_t i = 0;
      while (i < k && ++a[i] == F.p()) a[i++] = 0;
      if (i == k) break;
    }
  }
  return out;
}

}  // namespace netcap
