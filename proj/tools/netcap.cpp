// netcap: command line front end for the netcap headers.
//
// Machine output (JSON) goes to stdout, a short summary to stderr.
// Exit codes: 0 ok, 1 check failed, 2 usage, 3 input/validation, 4 cap.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "netcap/netcap.hpp"

using namespace netcap;

namespace {

struct Usage : Error {
  using Error::Error;
};

std::vector<Rational> parse_q(const std::string& s) {
  std::vector<Rational> q;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      q.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw Usage("--q: bad component '" + tok + "'");
    }
  }
  return q;
}

json rational_pair(const std::vector<Rational>& v) {
  json exact = json::array(), dec = json::array();
  for (const auto& x : v) exact.push_back(to_string(x)), dec.push_back(x.get_d());
  return json{{"exact", exact}, {"decimal", dec}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

void emit(const json& doc, const std::string& out) {
  auto text = doc.dump(2) + "\n";
  if (out.empty()) std::cout << text;
  else write_file(out, text);
}

std::string join_q(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

OracleKind oracle_kind(const std::string& s) { return s == "paths" ? OracleKind::paths : OracleKind::brute; }

// ---- region / ray ------------------------------------------------------

struct RegionArgs {
  std::string kind;
  std::string network = "butterfly";
  std::string method = "exact";
  double omega = 0.5;
  std::uint32_t field = 2;
  std::string oracle = "brute";
  double snap = 0.05;
  std::size_t max_calls = 1000;
  std::string out, csv, plot;
};

std::string vertices_csv(const RegionDescription& r) {
  std::string s;
  for (std::size_t i = 0; i < r.messages.size(); ++i) s += (i ? "," : "") + r.messages[i];
  for (std::size_t i = 0; i < r.messages.size(); ++i) s += "," + r.messages[i] + "_decimal";
  s += "\n";
  for (const auto& v : r.vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    for (const auto& x : v) {
      std::ostringstream o;
      o.precision(12);
      o << x.get_d();
      s += "," + o.str();
    }
    s += "\n";
  }
  return s;
}

std::string plot_data(const RegionDescription& r) {
  std::ostringstream o;
  o.precision(12);
  o << "# " << (r.messages.size() > 0 ? r.messages[0] : "") << " " << (r.messages.size() > 1 ? r.messages[1] : "") << "\n";
  if (r.vertices.empty() || r.vertices[0].size() != 2) return o.str();
  for (const auto& v : r.vertices) o << v[0].get_d() << " " << v[1].get_d() << "\n";
  o << r.vertices[0][0].get_d() << " " << r.vertices[0][1].get_d() << "\n";  // close the polygon
  return o.str();
}

int cmd_region(const RegionArgs& a, const Caps& caps) {
  auto net = load_network(resolve_data("networks", a.network));
  PrimeField F(a.field);
  const bool route = a.kind == "route";
  auto parent = [&] { return route ? route_parent(net, caps) : lcode_parent(net, F, caps); };
  RegionDescription r;
  const std::size_t k = net.num_messages();
  if (a.method == "vertex" || (a.method == "exact" && k != 2)) {
    r = vertex_enum_region(parent(), caps);
  } else if (a.method == "exact") {
    auto P = parent();
    TraceOptions opt;
    opt.max_calls = a.max_calls;
    auto tr = boundary_trace_2d(
        [&](const Point2& d) {
          auto x = oracle_ray_exact(P, {d[0], d[1]});
          return Point2{x.point[0], x.point[1]};
        },
        opt);
    r.method = "trace";
    r.vertices.clear();
    for (const auto& p : tr.vertices) r.vertices.push_back({p[0], p[1]});
    r.oracle_calls = tr.calls;
    r.partial = tr.partial;
  } else if (a.method == "approx") {
    if (k != 2) throw Usage("--method approx needs exactly two messages");
    ApproxParams prm;
    prm.omega = a.omega;
    prm.oracle = oracle_kind(a.oracle);
    prm.caps = caps;
    TraceOptions opt;
    opt.max_calls = a.max_calls;
    const double tol = a.snap;
    opt.same = [tol](const Point2& x, const Point2& y) {
      return std::abs(Rational(x[0] - y[0]).get_d()) <= tol && std::abs(Rational(x[1] - y[1]).get_d()) <= tol;
    };
    double ratio = 1;
    auto tr = boundary_trace_2d(
        [&](const Point2& d) {
          auto x = route ? oracle_ray_approx_route(net, {d[0], d[1]}, prm) : oracle_ray_approx_lcode(net, F, {d[0], d[1]}, prm);
          ratio = x.ratio;
          return Point2{to_rational(x.point[0]), to_rational(x.point[1])};
        },
        opt);
    r.method = "trace";
    r.exact = false;
    r.omega = a.omega;
    r.ratio = ratio;
    for (const auto& p : tr.vertices) r.vertices.push_back({p[0], p[1]});
    r.oracle_calls = tr.calls;
    r.partial = tr.partial;
  } else {
    throw Usage("--method must be exact, approx or vertex");
  }
  r.messages.clear();
  for (const auto& m : net.messages) r.messages.push_back(m.id);

  json doc;
  doc["region"] = a.kind;
  if (!route) doc["field"] = a.field;
  doc["messages"] = r.messages;
  doc["method"] = r.method;
  doc["exact"] = r.exact;
  if (!r.exact) {
    doc["omega"] = r.omega;
    doc["ratio"] = r.ratio;
    doc["oracle"] = a.oracle;
  }
  doc["oracle_calls"] = r.oracle_calls;
  doc["partial"] = r.partial;
  doc["vertices"] = json::array();
  for (const auto& v : r.vertices) doc["vertices"].push_back(rational_pair(v));
  emit(doc, a.out);
  if (!a.csv.empty()) write_file(a.csv, vertices_csv(r));
  if (!a.plot.empty()) write_file(a.plot, plot_data(r));

  std::cerr << a.kind << " region, " << r.vertices.size() << " vertices:";
  for (const auto& v : r.vertices) {
    if (r.exact) {
      std::cerr << " (" << join_q(v) << ")";
      continue;
    }
    std::cerr << " (";
    for (std::size_t i = 0; i < v.size(); ++i) std::cerr << (i ? "," : "") << v[i].get_d();
    std::cerr << ")";
  }
  std::cerr << (r.partial ? " [partial]" : "") << "\n";
  return 0;
}

struct RayArgs {
  std::string kind;
  std::string network = "butterfly";
  std::string q;
  std::string method = "exact";
  double omega = 0.5;
  std::uint32_t field = 2;
  std::string oracle = "brute";
  bool dump = false;
};

int cmd_ray(const RayArgs& a, const Caps& caps) {
  auto q = parse_q(a.q);
  try {
    check_ray(q);
  } catch (const Error& e) {
    throw Usage(std::string("--q: ") + e.what());
  }
  auto net = load_network(resolve_data("networks", a.network));
  if (q.size() != net.num_messages())
    throw Usage("--q has " + std::to_string(q.size()) + " components, network has " + std::to_string(net.num_messages()) +
                " messages");
  PrimeField F(a.field);
  const bool route = a.kind == "route";
  json doc;
  doc["ray"] = a.kind;
  doc["q"] = rational_pair(q);
  if (a.method == "exact") {
    auto P = route ? route_parent(net, caps) : lcode_parent(net, F, caps);
    if (a.dump) std::cerr << dump_lp(build_ray_lp(P, q));
    auto r = oracle_ray_exact(P, q);
    doc["lambda"] = to_string(r.lambda);
    doc["point"] = rational_pair(r.point);
    doc["certified"] = r.certified;
    doc["pivots"] = r.solution.pivots;
    emit(doc, "");
    std::cerr << "lambda = " << to_string(r.lambda) << ", point (" << join_q(r.point) << ")"
              << (r.certified ? ", certified" : ", NOT certified") << "\n";
    return r.certified ? 0 : 1;
  }
  if (a.method != "approx") throw Usage("--method must be exact or approx");
  ApproxParams prm;
  prm.omega = a.omega;
  prm.oracle = oracle_kind(a.oracle);
  prm.caps = caps;
  auto r = route ? oracle_ray_approx_route(net, q, prm) : oracle_ray_approx_lcode(net, F, q, prm);
  doc["lambda"] = r.lambda;
  doc["point"] = r.point;
  doc["exact"] = false;
  doc["omega"] = r.omega;
  doc["ratio"] = r.ratio;
  doc["phases"] = r.phases;
  doc["steps"] = r.steps;
  emit(doc, "");
  std::cerr << "lambda ~ " << r.lambda << " (within factor " << (1 + r.omega) * r.ratio << ")\n";
  return 0;
}

// ---- matroid / code ----------------------------------------------------

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

// whitespace separated tokens per line, '#' starts a comment
std::vector<std::vector<std::string>> read_table(const std::string& path) {
  std::stringstream in(read_file(path));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::stringstream ls(line);
    std::vector<std::string> row;
    std::string t;
    while (ls >> t) row.push_back(t);
    if (!row.empty()) rows.push_back(row);
  }
  return rows;
}

struct MatroidArgs {
  std::string uniform, graphic, matrix, matroid, labels, script, mapping_out, out;
  std::uint32_t field = 2;
};

RepresentableMatroid load_matroid(const MatroidArgs& a) {
  auto labels = a.labels.empty() ? std::vector<std::string>{} : split_list(a.labels);
  int given = !a.uniform.empty() + !a.graphic.empty() + !a.matrix.empty() + !a.matroid.empty();
  if (given != 1) throw Usage("give exactly one of --uniform, --graphic, --matrix, --matroid");
  if (!a.matroid.empty()) return parse_matroid(read_file(resolve_data("matroids", a.matroid)));
  if (!a.uniform.empty()) {
    auto cd = split_list(a.uniform);
    if (cd.size() != 2) throw Usage("--uniform expects c,d");
    return uniform_matroid(std::stoul(cd[0]), std::stoul(cd[1]), a.field, labels);
  }
  if (!a.graphic.empty()) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& r : read_table(a.graphic)) {
      if (r.size() != 2) throw ParseError("edge list: expected 'u v' per line");
      edges.emplace_back(r[0], r[1]);
    }
    return graphic_matroid(edges, a.field, labels);
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : read_table(a.matrix)) {
    std::vector<std::int64_t> row;
    for (const auto& t : r) row.push_back(std::stoll(t));
    rows.push_back(row);
  }
  return RepresentableMatroid(FieldMatrix(PrimeField(a.field), rows), labels);
}

int cmd_construct(const MatroidArgs& a) {
  if (a.script.empty()) throw Usage("--script is required");
  auto m = load_matroid(a);
  auto c = construct(m, parse_script(read_file(resolve_data("scripts", a.script)), m));
  if (!a.out.empty()) write_file(a.out, serialize_network(c.network));
  else std::cout << serialize_network(c.network);
  if (!a.mapping_out.empty()) write_file(a.mapping_out, mapping_to_json(c.network, m, c.mapping).dump(2) + "\n");
  std::cerr << "constructed " << c.network.num_nodes() << " nodes, " << c.network.num_edges() << " edges, "
            << c.network.num_messages() << " messages\n";
  return 0;
}

struct CodeArgs {
  MatroidArgs m;
  std::string network, mapping, code, assign, out;
};

json code_violations(const CodeCheck& chk) {
  json v = json::array();
  for (const auto& x : chk.violations) v.push_back({{"condition", x.condition}, {"element", x.element}, {"detail", x.detail}});
  return v;
}

int cmd_derive(const CodeArgs& a) {
  auto net = load_network(resolve_data("networks", a.network));
  auto m = load_matroid(a.m);
  auto f = parse_mapping(read_file(a.mapping), net, m);
  auto vm = verify_mapping(net, m, f);
  if (!vm.ok()) {
    json v = json::array();
    for (const auto& x : vm.violations)
      v.push_back({{"condition", x.condition}, {"node", x.node >= 0 ? net.nodes[x.node] : ""}, {"detail", x.detail}});
    std::cout << json{{"mapping_violations", v}}.dump(2) << "\n";
    std::cerr << "mapping is not matroidal (" << vm.violations.size() << " violations)\n";
    return 1;
  }
  auto code = derive_code(net, m, f);
  emit(code_to_json(net, code), a.out);
  auto chk = check_code(net, code);
  std::cerr << "derived code over GF(" << code.field.p() << "), check " << (chk ? "passed" : "FAILED")
            << (chk.simulated ? " (simulated)" : "") << "\n";
  return chk ? 0 : 1;
}

int cmd_check(const CodeArgs& a) {
  auto net = load_network(resolve_data("networks", a.network));
  auto code = parse_code(read_file(a.code), net);
  auto chk = check_code(net, code);
  std::cout << json{{"ok", chk.ok()}, {"simulated", chk.simulated}, {"violations", code_violations(chk)}}.dump(2) << "\n";
  if (chk) std::cerr << "code ok\n";
  for (const auto& x : chk.violations) std::cerr << "condition " << x.condition << " at " << x.element << ": " << x.detail << "\n";
  return chk ? 0 : 1;
}

int cmd_simulate(const CodeArgs& a) {
  auto net = load_network(resolve_data("networks", a.network));
  auto code = parse_code(read_file(a.code), net);
  std::vector<Elem> x(net.num_messages(), 0);
  std::vector<bool> set(net.num_messages(), false);
  for (const auto& kv : split_list(a.assign)) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Usage("--assign expects id=value pairs");
    auto i = net.message_index(kv.substr(0, eq));
    if (!i) throw Usage("--assign: unknown message '" + kv.substr(0, eq) + "'");
    x[*i] = code.field.reduce(std::stoll(kv.substr(eq + 1)));
    set[*i] = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i)
    if (!set[i] && code.serves(i)) throw Usage("--assign: no value for message '" + net.messages[i].id + "'");
  auto sim = simulate(net, code, x);
  json doc;
  doc["edges"] = json::object();
  for (std::size_t e = 0; e < net.num_edges(); ++e) doc["edges"][net.edges[e].id] = sim.edge_symbols[e];
  doc["decoded"] = json::array();
  bool ok = true;
  for (const auto& [v, k, val] : sim.decoded) {
    bool good = val == x[k];
    ok &= good;
    doc["decoded"].push_back({{"node", net.nodes[v]}, {"message", net.messages[k].id}, {"value", val}, {"correct", good}});
  }
  doc["ok"] = ok;
  std::cout << doc.dump(2) << "\n";
  std::cerr << sim.decoded.size() << " demands decoded, " << (ok ? "all correct" : "MISMATCH") << "\n";
  return ok ? 0 : 1;
}

// ---- steiner -----------------------------------------------------------

struct SteinerArgs {
  std::string network = "butterfly", message, lengths, oracle = "brute";
  double omega = 0.5;
};

std::vector<double> load_lengths(const Network& net, const std::string& path) {
  std::vector<double> l(net.num_edges(), 1.0);
  if (path.empty()) return l;
  for (const auto& r : read_table(path)) {
    if (r.size() != 2) throw ParseError("lengths: expected 'edge value' per line");
    auto e = net.edge_index(r[0]);
    if (!e) throw ParseError("lengths: unknown edge '" + r[0] + "'");
    l[*e] = std::stod(r[1]);
  }
  return l;
}

int message_arg(const Network& net, const std::string& id) {
  if (id.empty()) {
    if (net.num_messages() == 1) return 0;
    throw Usage("--message is required");
  }
  auto i = net.message_index(id);
  if (!i) throw Usage("unknown message '" + id + "'");
  return int(*i);
}

json edge_ids(const Network& net, const std::vector<int>& es) {
  json a = json::array();
  for (int e : es) a.push_back(net.edges[e].id);
  return a;
}

int cmd_mincost(const SteinerArgs& a, const Caps& caps) {
  auto net = load_network(resolve_data("networks", a.network));
  int k = message_arg(net, a.message);
  auto l = load_lengths(net, a.lengths);
  auto o = make_oracle(oracle_kind(a.oracle), net, k, caps);
  auto t = (*o)(l);
  if (!t.found) {
    std::cout << json{{"message", net.messages[k].id}, {"found", false}}.dump(2) << "\n";
    std::cerr << "no Steiner tree\n";
    return 1;
  }
  std::cout << json{{"message", net.messages[k].id}, {"found", true}, {"edges", edge_ids(net, t.edges)}, {"cost", t.cost},
                    {"ratio", o->ratio()}}
                   .dump(2)
            << "\n";
  std::cerr << "tree of cost " << t.cost << "\n";
  return 0;
}

int cmd_pack(const SteinerArgs& a, const Caps& caps) {
  auto net = load_network(resolve_data("networks", a.network));
  int k = message_arg(net, a.message);
  auto o = make_oracle(oracle_kind(a.oracle), net, k, caps);
  auto r = pack_trees(net, k, a.omega, *o, o->ratio());
  json trees = json::array();
  const double scale = r.raw_flow > 0 ? r.value / r.raw_flow : 0;
  for (const auto& [t, x] : r.tree_flow) trees.push_back({{"edges", edge_ids(net, t)}, {"flow", x * scale}});
  std::cout << json{{"message", net.messages[k].id}, {"value", r.value}, {"omega", a.omega}, {"ratio", o->ratio()},
                    {"iterations", r.iterations}, {"trees", trees}}
                   .dump(2)
            << "\n";
  std::cerr << "packed " << r.value << " units in " << r.iterations << " iterations\n";
  return 0;
}

int cmd_validate(const std::string& path) {
  auto net = parse_network_unchecked(read_file(resolve_data("networks", path)));
  auto vs = validate(net);
  json v = json::array();
  for (const auto& x : vs)
    v.push_back({{"severity", x.severity == Severity::error ? "error" : "warning"}, {"rule", x.rule}, {"element", x.element},
                 {"detail", x.detail}});
  std::cout << json{{"ok", !has_errors(vs)}, {"violations", v}}.dump(2) << "\n";
  if (!vs.empty()) std::cerr << describe(vs) << "\n";
  return has_errors(vs) ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network capacity regions, matroidal networks and Steiner packing"};
  app.require_subcommand(1);

  auto add_kind = [](CLI::App* c, std::string& kind) {
    c->add_option("kind", kind, "route or lcode")->required()->check(CLI::IsMember({"route", "lcode"}));
  };

  RegionArgs ra;
  auto* region = app.add_subcommand("region", "compute a capacity region");
  add_kind(region, ra.kind);
  region->add_option("--network", ra.network, "network file or fixture name")->capture_default_str();
  region->add_option("--method", ra.method, "exact, approx or vertex")->capture_default_str();
  region->add_option("--omega", ra.omega, "approximation parameter")->capture_default_str();
  region->add_option("--field", ra.field, "prime field for lcode")->capture_default_str();
  region->add_option("--oracle", ra.oracle, "Steiner oracle for approx")->check(CLI::IsMember({"brute", "paths"}));
  region->add_option("--snap", ra.snap, "point equality tolerance for approx traces")->capture_default_str();
  region->add_option("--max-calls", ra.max_calls, "ray oracle call budget")->capture_default_str();
  region->add_option("--json", ra.out, "write the document here instead of stdout");
  region->add_option("--out", ra.csv, "vertices CSV");
  region->add_option("--plot-data", ra.plot, "gnuplot polygon");

  RayArgs ya;
  auto* ray = app.add_subcommand("ray", "intersect one ray with the region boundary");
  add_kind(ray, ya.kind);
  ray->add_option("--network", ya.network)->capture_default_str();
  ray->add_option("--q", ya.q, "direction, e.g. 1,1/2")->required();
  ray->add_option("--method", ya.method)->capture_default_str();
  ray->add_option("--omega", ya.omega)->capture_default_str();
  ray->add_option("--field", ya.field)->capture_default_str();
  ray->add_option("--oracle", ya.oracle)->check(CLI::IsMember({"brute", "paths"}));
  ray->add_flag("--dump-lp", ya.dump, "print the ray LP to stderr");

  auto matroid_opts = [](CLI::App* c, MatroidArgs& m) {
    c->add_option("--uniform", m.uniform, "c,d");
    c->add_option("--graphic", m.graphic, "edge list file");
    c->add_option("--matrix", m.matrix, "matrix file, one row per line");
    c->add_option("--matroid", m.matroid, "matroid document or fixture name");
    c->add_option("--field", m.field)->capture_default_str();
    c->add_option("--labels", m.labels, "element labels, comma separated");
  };

  MatroidArgs ma;
  auto* matroid = app.add_subcommand("matroid", "matroid tools");
  matroid->require_subcommand(1);
  auto* construct_cmd = matroid->add_subcommand("construct", "build a network from a matroid and a script");
  matroid_opts(construct_cmd, ma);
  construct_cmd->add_option("--script", ma.script, "script document or fixture name")->required();
  construct_cmd->add_option("--out", ma.out, "network output file");
  construct_cmd->add_option("--mapping-out", ma.mapping_out, "write the network-matroid mapping here");

  CodeArgs ca;
  auto* code = app.add_subcommand("code", "scalar linear codes");
  code->require_subcommand(1);
  auto* derive = code->add_subcommand("derive", "derive a code from a matroidal mapping");
  matroid_opts(derive, ca.m);
  derive->add_option("--network", ca.network)->required();
  derive->add_option("--mapping", ca.mapping)->required();
  derive->add_option("--out", ca.out, "code output file");
  auto* check = code->add_subcommand("check", "check a code against a network");
  check->add_option("--network", ca.network)->required();
  check->add_option("--code", ca.code)->required();
  auto* sim = code->add_subcommand("simulate", "run a code on one message assignment");
  sim->add_option("--network", ca.network)->required();
  sim->add_option("--code", ca.code)->required();
  sim->add_option("--assign", ca.assign, "a=1,b=0")->required();

  SteinerArgs sa;
  auto* steiner = app.add_subcommand("steiner", "Steiner trees");
  steiner->require_subcommand(1);
  auto* mincost = steiner->add_subcommand("mincost", "minimum cost Steiner tree");
  auto* pack = steiner->add_subcommand("pack", "fractional Steiner tree packing");
  for (auto* c : {mincost, pack}) {
    c->add_option("--network", sa.network)->capture_default_str();
    c->add_option("--message", sa.message);
    c->add_option("--oracle", sa.oracle)->check(CLI::IsMember({"brute", "paths"}))->capture_default_str();
  }
  mincost->add_option("--lengths", sa.lengths, "file with 'edge length' lines; default all 1");
  pack->add_option("--omega", sa.omega)->capture_default_str();

  std::string vpath;
  auto* val = app.add_subcommand("validate", "validate a network document");
  val->add_option("--network", vpath)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Caps caps = Caps::from_env();
    if (region->parsed()) return cmd_region(ra, caps);
    if (ray->parsed()) return cmd_ray(ya, caps);
    if (construct_cmd->parsed()) return cmd_construct(ma);
    if (derive->parsed()) return cmd_derive(ca);
    if (check->parsed()) return cmd_check(ca);
    if (sim->parsed()) return cmd_simulate(ca);
    if (mincost->parsed()) return cmd_mincost(sa, caps);
    if (pack->parsed()) return cmd_pack(sa, caps);
    if (val->parsed()) return cmd_validate(vpath);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what();
    if (!e.field.empty()) std::cerr << " [" << e.field << "]";
    std::cerr << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
