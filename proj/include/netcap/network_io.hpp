#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "netcap/network.hpp"

namespace netcap {

using json = nlohmann::ordered_json;

// "e2" < "e10": digit runs compare numerically
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit((unsigned char)a[i]) && std::isdigit((unsigned char)b[j])) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit((unsigned char)a[i2])) ++i2;
      while (j2 < b.size() && std::isdigit((unsigned char)b[j2])) ++j2;
      auto da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      da.erase(0, std::min(da.find_first_not_of('0'), da.size()));
      db.erase(0, std::min(db.find_first_not_of('0'), db.size()));
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = i2, j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i, ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

namespace detail {

inline std::size_t line_of(const std::string& text, std::size_t byte) {
  return 1 + std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n');
}

inline const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'", 0, where + "." + key);
  return j.at(key);
}

inline std::string need_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected string", 0, where);
  return j.get<std::string>();
}

inline std::int64_t need_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected integer", 0, where);
  return j.get<std::int64_t>();
}

}  // namespace detail

// Parses without semantic validation; ids must resolve.
inline Network parse_network_unchecked(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error at line ") + std::to_string(detail::line_of(text, e.byte)) + ": " +
                         e.what(),
                     detail::line_of(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("network document must be an object", 1);
  Network net;
  if (doc.contains("alphabet_size")) net.alphabet_size = int(detail::need_int(doc["alphabet_size"], "alphabet_size"));

  const auto& nodes = detail::need(doc, "nodes", "network");
  if (!nodes.is_array()) throw ParseError("nodes: expected array", 0, "nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    net.add_node(detail::need_string(nodes[i], "nodes[" + std::to_string(i) + "]"));

  auto node_ref = [&](const json& j, const std::string& where) {
    auto id = detail::need_string(j, where);
    auto v = net.node_index(id);
    if (!v) throw ParseError(where + ": unknown node '" + id + "'", 0, where);
    return *v;
  };

  const auto& edges = detail::need(doc, "edges", "network");
  if (!edges.is_array()) throw ParseError("edges: expected array", 0, "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string w = "edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    auto id = detail::need_string(detail::need(e, "id", w), w + ".id");
    int from = node_ref(detail::need(e, "from", w), w + ".from");
    int to = node_ref(detail::need(e, "to", w), w + ".to");
    std::int64_t cap = e.contains("capacity") ? detail::need_int(e["capacity"], w + ".capacity") : 1;
    net.add_edge(id, from, to, cap);
  }

  const auto& msgs = detail::need(doc, "messages", "network");
  if (!msgs.is_array()) throw ParseError("messages: expected array", 0, "messages");
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    std::string w = "messages[" + std::to_string(i) + "]";
    const auto& m = msgs[i];
    auto id = detail::need_string(detail::need(m, "id", w), w + ".id");
    std::vector<int> src, rcv;
    const auto& s = detail::need(m, "sources", w);
    const auto& r = detail::need(m, "receivers", w);
    if (!s.is_array()) throw ParseError(w + ".sources: expected array", 0, w + ".sources");
    if (!r.is_array()) throw ParseError(w + ".receivers: expected array", 0, w + ".receivers");
    for (std::size_t k = 0; k < s.size(); ++k) src.push_back(node_ref(s[k], w + ".sources[" + std::to_string(k) + "]"));
    for (std::size_t k = 0; k < r.size(); ++k) rcv.push_back(node_ref(r[k], w + ".receivers[" + std::to_string(k) + "]"));
    net.add_message(id, src, rcv);
  }
  return net;
}

inline Network parse_network(const std::string& text) {
  Network net = parse_network_unchecked(text);
  require_valid(net);
  return net;
}

// Sorted ids (natural order), sorted endpoint lists. Indices are remapped.
inline Network canonicalize(const Network& net) {
  auto by_id = [](const auto& ids) {
    std::vector<int> perm(ids.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return natural_less(ids[a], ids[b]); });
    return perm;
  };
  auto nperm = by_id(net.nodes);
  std::vector<int> nmap(net.num_nodes());
  Network out;
  out.alphabet_size = net.alphabet_size;
  for (int old : nperm) nmap[old] = out.add_node(net.nodes[old]);

  std::vector<std::string> eids, mids;
  for (const auto& e : net.edges) eids.push_back(e.id);
  for (const auto& m : net.messages) mids.push_back(m.id);
  for (int old : by_id(eids)) {
    const auto& e = net.edges[old];
    out.add_edge(e.id, nmap[e.tail], nmap[e.head], e.capacity);
  }
  for (int old : by_id(mids)) {
    const auto& m = net.messages[old];
    std::vector<int> s, r;
    for (int v : m.sources) s.push_back(nmap[v]);
    for (int v : m.receivers) r.push_back(nmap[v]);
    std::sort(s.begin(), s.end());
    std::sort(r.begin(), r.end());
    out.add_message(m.id, s, r);
  }
  return out;
}

inline json network_to_json(const Network& raw) {
  Network net = canonicalize(raw);
  json doc;
  doc["alphabet_size"] = net.alphabet_size;
  doc["nodes"] = json::array();
  for (const auto& n : net.nodes) doc["nodes"].push_back(n);
  doc["edges"] = json::array();
  for (const auto& e : net.edges)
    doc["edges"].push_back({{"id", e.id}, {"from", net.nodes[e.tail]}, {"to", net.nodes[e.head]}, {"capacity", e.capacity}});
  doc["messages"] = json::array();
  for (const auto& m : net.messages) {
    json s = json::array(), r = json::array();
    for (int v : m.sources) s.push_back(net.nodes[v]);
    for (int v : m.receivers) r.push_back(net.nodes[v]);
    doc["messages"].push_back({{"id", m.id}, {"sources", s}, {"receivers", r}});
  }
  return doc;
}

inline std::string serialize_network(const Network& net) { return network_to_json(net).dump(2) + "\n"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Network load_network(const std::string& path) { return parse_network(read_file(path)); }

}  // namespace netcap
