// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace netcap;

namespace {

using Clock = std::chrono::steady_clock;
using Pts = std::vector<std::vector<Rational>>;

int failures = 0;
std::set<int> failed;

void report(int id, bool ok, double secs, double limit, const std::string& what) {
  bool in_time = secs < limit;
  if (!(ok && in_time)) ++failures, failed.insert(id);
  std::printf("%s  %d  %-58s %7.3fs (limit %gs)%s\n", ok && in_time ? "PASS" : "FAIL", id, what.c_str(), secs, limit,
              in_time ? "" : " too slow");
  std::fflush(stdout);
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Pts pts(std::initializer_list<std::pair<int, int>> xs) {
  Pts out;
  for (auto [a, b] : xs) out.push_back({Rational(a), Rational(b)});
  return out;
}

Pts traced(const ParentPolytope& P, std::size_t* calls = nullptr) {
  auto tr = boundary_trace_2d([&](const Point2& d) {
    auto r = oracle_ray_exact(P, {d[0], d[1]});
    return Point2{r.point[0], r.point[1]};
  });
  if (calls) *calls = tr.calls;
  Pts out;
  for (const auto& p : tr.vertices) out.push_back({p[0], p[1]});
  return out;
}

// max t with t*q in conv(V); a different LP from the ray LP (vertex form)
Rational lambda_from_vertices(const Pts& V, const std::vector<Rational>& q) {
  LinearProgram lp;
  const std::size_t n = V.size();
  lp.objective.assign(n + 1, 0);
  lp.objective[n] = 1;
  for (std::size_t c = 0; c <= q.size(); ++c) {
    Constraint row;
    row.sense = Sense::eq;
    row.coeffs.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) row.coeffs[i] = c < q.size() ? V[i][c] : Rational(1);
    if (c < q.size()) row.coeffs[n] = -q[c];
    row.rhs = c < q.size() ? 0 : 1;
    lp.rows.push_back(row);
  }
  return *oracle::lp_by_vertices(lp);
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

// every assignment of message symbols decodes correctly at every demand
bool exhaustive_simulation(const Network& net, const GlobalScalarCode& code) {
  const std::size_t k = net.num_messages();
  std::vector<Elem> x(k, 0);
  while (true) {
    auto sim = simulate(net, code, x);
    std::size_t want = 0;
    for (int v = 0; v < int(net.num_nodes()); ++v) want += net.demanded(v).size();
    if (sim.decoded.size() != want) return false;
    for (const auto& [v, m, val] : sim.decoded)
      if (val != x[m]) return false;
    std::size_t i = 0;
    while (i < k && ++x[i] == code.field.p()) x[i++] = 0;
    if (i == k) return true;
  }
}

void criterion1() {
  auto t0 = Clock::now();
  auto P = route_parent(fixture_network("butterfly"));
  auto want = pts({{0, 0}, {1, 0}, {0, 1}});
  bool ok = vertex_enum_region(P).vertices == want && traced(P) == want;
  report(1, ok, since(t0), 1, "butterfly routing region = triangle (vertex enum, trace)");
}

void criterion2() {
  auto t0 = Clock::now();
  auto net = fixture_network("butterfly");
  auto C = lcode_parent(net, PrimeField(2));
  auto want = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  bool ok = vertex_enum_region(C).vertices == want && traced(C) == want;
  // coding gain: (1,1) is outside the routing region
  ok = ok && oracle_ray_exact_route(net, {1, 1}).lambda < 1 && oracle_ray_exact_lcode(net, PrimeField(2), {1, 1}).lambda == 1;
  report(2, ok, since(t0), 1, "butterfly GF(2) coding region = unit square, > routing");
}

void criterion3() {
  auto t0 = Clock::now();
  const std::vector<std::vector<Rational>> rays = {
      {1, 1}, {1, 0}, {0, 1}, {2, 1}, {Rational(1, 3), 1}, {3, 5}, {Rational(7, 2), Rational(1, 9)}, {1, 4}};
  int good = 0, total = 0;
  for (auto name : {"butterfly", "butterfly_direct", "butterfly_dual_demand"}) {
    auto net = fixture_network(name);
    for (bool route : {true, false}) {
      auto P = route ? route_parent(net) : lcode_parent(net, PrimeField(2));
      auto V = vertex_enum_region(P).vertices;
      for (const auto& q : rays) {
        ++total;
        auto r = oracle_ray_exact(P, q);
        auto c = certify(r.lp, r.solution.x, r.solution.duals);
        if (r.certified && c.ok() && r.lambda == lambda_from_vertices(V, q)) ++good;
      }
    }
  }
  report(3, good == total, since(t0), 10,
         "exact ray oracle certified + matches vertex form (" + std::to_string(good) + "/" + std::to_string(total) + ")");
}

void criterion4() {
  auto t0 = Clock::now();
  std::mt19937 rng(2024);
  int good = 0, total = 0;
  double worst = 0;
  for (int it = 0; it < 20; ++it) {
    auto g = oracle::random_network_retry(rng, 6, 10, 1, 3);
    double opt = single_message_opt(g, 0).get_d();
    for (double w : {0.25, 0.5, 0.9})
      for (auto kind : {OracleKind::brute, OracleKind::paths}) {
        auto o = make_oracle(kind, g, 0);
        double v = pack_trees(g, 0, w, *o, o->ratio()).value;
        ++total;
        bool ok = v <= opt * (1 + 1e-9) && opt <= (1 + w) * o->ratio() * v * (1 + 1e-9);
        good += ok;
        worst = std::max(worst, v / opt);
      }
  }
  int rgood = 0, rtotal = 0;
  for (int it = 0; it < 20; ++it) {
    auto g = oracle::random_network_retry(rng, 6, 10, 2, 2);
    std::vector<Rational> q{Rational(int(rng() % 4) + 1), Rational(int(rng() % 4) + 1)};
    double opt = oracle_ray_exact_route(g, q).lambda.get_d();
    for (double w : {0.25, 0.5, 0.9})
      for (auto kind : {OracleKind::brute, OracleKind::paths}) {
        ApproxParams p;
        p.omega = w;
        p.oracle = kind;
        auto r = oracle_ray_approx_route(g, q, p);
        ++rtotal;
        rgood += r.lambda <= opt * (1 + 1e-9) && opt <= (1 + w) * r.ratio * r.lambda * (1 + 1e-9);
      }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "v <= OPT <= (1+w)A v: packing %d/%d (max v/OPT %.4f), ray %d/%d", good, total, worst, rgood,
                rtotal);
  report(4, good == total && rgood == rtotal, since(t0), 60, buf);
}

void criterion5() {
  auto t0 = Clock::now();
  std::mt19937 rng(77);
  int good = 0, total = 0;
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField F(p);
    for (int it = 0; it < 60; ++it) {
      auto net = oracle::random_network_retry(rng, 5, 6, p == 2 ? 3 : 2);
      std::vector<std::int64_t> l(net.num_edges());
      for (auto& x : l) x = rng() % 4;
      auto dp = min_cost_slinear(net, F, l);
      auto bf = oracle::brute_min_cost(net, F, l, {});
      ++total;
      good += bool(dp) == bool(bf) && (!dp || dp->cost == *bf);
    }
  }
  auto bfly = fixture_network("butterfly");
  auto c = min_cost_slinear(bfly, PrimeField(2), std::vector<std::int64_t>(7, 1));
  bool ok = good == total && c && c->cost == 7;
  report(5, ok, since(t0), 60,
         "DP = brute force on |E|<=6 GF(2),GF(3) (" + std::to_string(good) + "/" + std::to_string(total) + "), butterfly 7");
}

void criterion6() {
  auto t0 = Clock::now();
  int good = 0;
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"u23", "butterfly_u23"}, {"u24", "u24"}, {"graph_g", "graph_g"}, {"fano", "fano"}};
  for (auto [mat, script] : cases) {
    auto m = fixture_matroid(mat);
    auto c = construct(m, fixture_script(script, m));
    if (!verify_mapping(c.network, m, c.mapping).ok()) continue;
    auto code = derive_code(c.network, m, c.mapping);
    good += check_code(c.network, code).ok() && exhaustive_simulation(c.network, code);
  }
  report(6, good == 4, since(t0), 60, "matroid round trip U23, U24/GF3, graph G, Fano (" + std::to_string(good) + "/4)");
}

void criterion7() {
  auto t0 = Clock::now();
  auto m = fixture_matroid("fano");
  auto c = construct(m, fixture_script("fano", m));
  auto code = derive_code(c.network, m, c.mapping);
  bool gf2 = check_code(c.network, code).ok();
  std::vector<std::int64_t> unit(c.network.num_edges(), 1);
  bool dp3 = bool(min_cost_slinear(c.network, PrimeField(3), unit));
  bool bf3 = oracle::brute_solvable(c.network, PrimeField(3));
  report(7, gf2 && dp3 == bf3 && !dp3, since(t0), 60,
         std::string("Fano network: GF(2) solvable, GF(3) DP=") + (dp3 ? "yes" : "no") + " brute=" + (bf3 ? "yes" : "no"));
}

void criterion8() {
  auto t0 = Clock::now();
  bool ineq = true;
  for (double A : {1.0, 2.0, 10.0})
    for (int i = 1; i <= 200; ++i) {
      double w = i / 201.0;
      double e1 = 3 * w / 16;
      double e2 = w / (9 * A);
      ineq &= std::pow(1 - e1, -2) <= 1 + w;
      ineq &= std::pow(1 - e2 * A, -3) <= 1 + w;
    }
  bool calls_ok = true;
  std::string detail;
  auto m = fixture_matroid("u23");
  auto built = construct(m, fixture_script("butterfly_u23", m)).network;
  std::vector<std::pair<std::string, Network>> nets = {{"butterfly", fixture_network("butterfly")},
                                                       {"direct", fixture_network("butterfly_direct")},
                                                       {"dual", fixture_network("butterfly_dual_demand")},
                                                       {"constructed", built}};
  for (const auto& [name, net] : nets)
    for (bool route : {true, false}) {
      std::size_t calls = 0;
      auto V = traced(route ? route_parent(net) : lcode_parent(net, PrimeField(2)), &calls);
      calls_ok &= calls <= trace_call_bound(V.size());
      detail += " " + std::to_string(calls) + "/" + std::to_string(trace_call_bound(V.size()));
    }
  report(8, ineq && calls_ok, since(t0), 60, "eta inequalities on grids; trace calls" + detail);
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t s = 0; s < (1u << d); ++s) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < d; ++i)
      if (s >> i & 1) v.push_back(i);
    out.push_back(v);
  }
  return out;
}

bool is_forest(const std::vector<std::pair<std::string, std::string>>& edges, const std::vector<std::size_t>& s) {
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    if (!parent.count(x) || parent[x] == x) return parent[x] = x;
    return parent[x] = find(parent[x]);
  };
  for (auto i : s) {
    auto a = find(edges[i].first), b = find(edges[i].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

void criterion9() {
  auto t0 = Clock::now();
  int good = 0, total = 0;
  for (auto name : {"u23", "u24"}) {
    ++total;
    good += oracle::matroid_axioms_hold(fixture_matroid(name));
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::size_t d = 1; d <= 6; ++d)
      for (std::size_t c = 0; c <= d; ++c) {
        if (c >= 2 && c < d && p + 1 < d) continue;  // no representation over this field
        auto m = uniform_matroid(c, d, p);
        ++total;
        bool ok = oracle::matroid_axioms_hold(m);
        for (const auto& s : all_subsets(d)) ok &= m.independent(s) == (s.size() <= c);
        good += ok;
      }
  const std::vector<std::vector<std::pair<std::string, std::string>>> graphs = {
      {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}},
      {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "a"}},
      {{"x", "y"}, {"x", "y"}, {"y", "z"}, {"z", "z"}}};
  for (const auto& g : graphs)
    for (std::uint32_t p : {2u, 3u}) {
      auto m = graphic_matroid(g, p);
      ++total;
      bool ok = oracle::matroid_axioms_hold(m);
      for (const auto& s : all_subsets(g.size())) ok &= m.independent(s) == is_forest(g, s);
      good += ok;
    }
  // constructed networks' matroids are the inputs; check the 7-element ones too
  for (auto name : {"fano", "graph_g"}) {
    ++total;
    good += oracle::matroid_axioms_hold(fixture_matroid(name));
  }
  report(9, good == total, since(t0), 60, "matroid axioms + characterizations (" + std::to_string(good) + "/" + std::to_string(total) + ")");
}

}  // namespace

// --expect-fail 4,7 : criteria known not to hold; the exit status is 0
// only when exactly these fail, so a fix or a new failure both show up.
int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--expect-fail") {
      std::stringstream ss(argv[i + 1]);
      std::string tok;
      while (std::getline(ss, tok, ',')) expected.insert(std::stoi(tok));
    }
  auto t0 = Clock::now();
  for (auto f : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8, criterion9}) {
    try {
      f();
    } catch (const std::exception& e) {
      ++failures;
      failed.insert(0);
      std::printf("FAIL  exception: %s\n", e.what());
    }
  }
  double total = since(t0);
  bool fast = total < 300;
  if (!fast) ++failures, failed.insert(0);
  std::printf("%s  all criteria in %.2fs (limit 300s)\n", fast ? "PASS" : "FAIL", total);
  std::printf("%d of 9 criteria failed", int(failed.size() - failed.count(0)));
  if (!expected.empty()) {
    std::printf("; expected to fail:");
    for (int id : expected) std::printf(" %d", id);
  }
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
