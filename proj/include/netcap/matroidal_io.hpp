#pragma once

#include <string>

#include "netcap/matroidal.hpp"
#include "netcap/network_io.hpp"

namespace netcap {

namespace detail {
inline std::string element_name(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(where + ": expected element label", 0, where);
}
inline std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected array", 0, where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element_name(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}
inline json parse_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error at line ") + std::to_string(line_of(text, e.byte)), line_of(text, e.byte));
  }
}
}  // namespace detail

// {"field":p, "rows":[[..]]} | {"field":p, "uniform":[c,d]} | {"field":p, "graphic":[[u,v],..]}, optional "labels"
inline RepresentableMatroid matroid_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("matroid document must be an object");
  std::uint32_t p = doc.contains("field") ? std::uint32_t(detail::need_int(doc["field"], "field")) : 2;
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = detail::string_list(doc["labels"], "labels");
  if (doc.contains("rows")) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : doc["rows"]) {
      std::vector<std::int64_t> row;
      for (const auto& x : r) row.push_back(detail::need_int(x, "rows"));
      rows.push_back(row);
    }
    return RepresentableMatroid(FieldMatrix(PrimeField(p), rows), labels);
  }
  if (doc.contains("uniform")) {
    const auto& u = doc["uniform"];
    if (!u.is_array() || u.size() != 2) throw ParseError("uniform: expected [c, d]", 0, "uniform");
    return uniform_matroid(std::size_t(detail::need_int(u[0], "uniform")), std::size_t(detail::need_int(u[1], "uniform")), p,
                           labels);
  }
  if (doc.contains("graphic")) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc["graphic"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graphic: expected [u, v] pairs", 0, "graphic");
      edges.emplace_back(detail::element_name(e[0], "graphic"), detail::element_name(e[1], "graphic"));
    }
    return graphic_matroid(edges, p, labels);
  }
  throw ParseError("matroid document needs one of rows, uniform, graphic");
}

inline RepresentableMatroid parse_matroid(const std::string& text) { return matroid_from_json(detail::parse_doc(text)); }

inline json matroid_to_json(const RepresentableMatroid& m) {
  json doc;
  doc["field"] = m.field().p();
  doc["labels"] = m.labels();
  doc["rows"] = m.matrix().to_rows();
  return doc;
}

inline std::size_t resolve_element(const RepresentableMatroid& m, const std::string& name) {
  auto e = m.element(name);
  if (!e) throw ScriptError("unknown matroid element '" + name + "'");
  return *e;
}

// {"base":[..], "steps":[{"circuit":[x0,..]}, {"receiver":[x0,..]}, {"full_receiver":[..]}]}
inline ConstructionScript parse_script(const std::string& text, const RepresentableMatroid& m) {
  auto doc = detail::parse_doc(text);
  ConstructionScript s;
  for (const auto& n : detail::string_list(detail::need(doc, "base", "script"), "base")) s.base.push_back(resolve_element(m, n));
  const auto& steps = detail::need(doc, "steps", "script");
  if (!steps.is_array()) throw ParseError("steps: expected array", 0, "steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string w = "steps[" + std::to_string(i) + "]";
    const auto& st = steps[i];
    if (!st.is_object() || st.size() != 1) throw ParseError(w + ": expected a single-key object", 0, w);
    ScriptStep step;
    auto key = st.begin().key();
    if (key == "circuit") step.kind = ScriptStep::Kind::circuit;
    else if (key == "receiver") step.kind = ScriptStep::Kind::receiver;
    else if (key == "full_receiver") step.kind = ScriptStep::Kind::full_receiver;
    else throw ParseError(w + ": unknown step kind '" + key + "'", 0, w);
    for (const auto& n : detail::string_list(st.begin().value(), w + "." + key)) step.elements.push_back(resolve_element(m, n));
    s.steps.push_back(step);
  }
  return s;
}

inline json mapping_to_json(const Network& net, const RepresentableMatroid& m, const NetworkMatroidMapping& f) {
  json doc;
  doc["messages"] = json::object();
  for (std::size_t i = 0; i < net.num_messages(); ++i) doc["messages"][net.messages[i].id] = m.label(f.message_element[i]);
  doc["edges"] = json::object();
  for (std::size_t e = 0; e < net.num_edges(); ++e) doc["edges"][net.edges[e].id] = m.label(f.edge_element[e]);
  return doc;
}

inline NetworkMatroidMapping parse_mapping(const std::string& text, const Network& net, const RepresentableMatroid& m) {
  auto doc = detail::parse_doc(text);
  NetworkMatroidMapping f;
  const auto& msgs = detail::need(doc, "messages", "mapping");
  const auto& edges = detail::need(doc, "edges", "mapping");
  for (const auto& msg : net.messages) {
    if (!msgs.contains(msg.id)) throw ParseError("mapping: no element for message '" + msg.id + "'", 0, "messages");
    f.message_element.push_back(resolve_element(m, detail::element_name(msgs[msg.id], "messages." + msg.id)));
  }
  for (const auto& e : net.edges) {
    if (!edges.contains(e.id)) throw ParseError("mapping: no element for edge '" + e.id + "'", 0, "edges");
    f.edge_element.push_back(resolve_element(m, detail::element_name(edges[e.id], "edges." + e.id)));
  }
  return f;
}

inline json code_to_json(const Network& net, const GlobalScalarCode& code) {
  json doc;
  doc["field"] = code.field.p();
  doc["messages"] = json::array();
  for (std::size_t i = 0; i < net.num_messages(); ++i)
    if (code.serves(i)) doc["messages"].push_back(net.messages[i].id);
  doc["edges"] = json::object();
  for (std::size_t e = 0; e < net.num_edges(); ++e) doc["edges"][net.edges[e].id] = code.edge_vectors[e];
  return doc;
}

inline GlobalScalarCode parse_code(const std::string& text, const Network& net) {
  auto doc = detail::parse_doc(text);
  GlobalScalarCode code;
  code.field = PrimeField(std::uint32_t(detail::need_int(detail::need(doc, "field", "code"), "field")));
  const std::size_t k = net.num_messages();
  if (doc.contains("messages")) {
    code.served.assign(k, false);
    for (const auto& id : detail::string_list(doc["messages"], "messages")) {
      auto i = net.message_index(id);
      if (!i) throw ParseError("code: unknown message '" + id + "'", 0, "messages");
      code.served[*i] = true;
    }
  }
  for (std::size_t i = 0; i < k; ++i) code.message_vectors.push_back(unit_vector(k, i));
  const auto& edges = detail::need(doc, "edges", "code");
  for (const auto& e : net.edges) {
    if (!edges.contains(e.id)) throw ParseError("code: no vector for edge '" + e.id + "'", 0, "edges");
    FVec v;
    for (const auto& x : edges[e.id]) v.push_back(code.field.reduce(detail::need_int(x, "edges." + e.id)));
    if (v.size() != k) throw ParseError("code: vector of edge '" + e.id + "' has wrong length", 0, "edges." + e.id);
    code.edge_vectors.push_back(v);
  }
  return code;
}

}  // namespace netcap
