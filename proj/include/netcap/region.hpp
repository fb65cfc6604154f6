#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "netcap/ray_lp.hpp"
#include "netcap/slinear.hpp"
#include "netcap/steiner.hpp"

namespace netcap {

// ---- parent polytopes -------------------------------------------------

// Trees live in the network with super sources added; the extra edges are
// uncapacitated in effect and never bind.
inline ParentPolytope route_parent(const Network& net, const Caps& caps = {}) {
  Network red = add_super_sources(net);
  ParentPolytope P = empty_parent(red);
  for (std::size_t m = 0; m < red.num_messages(); ++m) {
    auto trees = enumerate_trees(red, int(m), caps);
    for (std::size_t t = 0; t < trees.size(); ++t) {
      ParentVariable v;
      v.edges = trees[t].edges;
      v.weight.assign(red.num_messages(), 0);
      v.weight[m] = 1;
      v.label = "T_" + red.messages[m].id + "_" + std::to_string(t + 1);
      P.variables.push_back(v);
    }
  }
  return P;
}

inline ParentPolytope lcode_parent(const Network& net, const PrimeField& F, const Caps& caps = {}) {
  ParentPolytope P = empty_parent(net);
  std::size_t i = 0;
  for (const auto& ps : enumerate_partial_solutions(net, F, caps)) {
    ParentVariable v;
    v.edges = ps.edges;
    v.weight = ps.w;
    std::string w;
    for (int b : ps.w) w += char('0' + b);
    v.label = "W_" + w + "_" + std::to_string(++i);
    P.variables.push_back(v);
  }
  return P;
}

// ---- exact ray oracle -------------------------------------------------

inline void check_ray(const std::vector<Rational>& q) {
  bool nonzero = false;
  for (const auto& x : q) {
    if (x < 0) throw Error("ray coordinates must be nonnegative");
    if (x > 0) nonzero = true;
  }
  if (!nonzero) throw Error("ray must be nonzero");
}

struct RayResult {
  Rational lambda;
  std::vector<Rational> point;
  LinearProgram lp;
  LpSolution solution;
  bool certified = false;
};

inline RayResult oracle_ray_exact(const ParentPolytope& P, const std::vector<Rational>& q) {
  check_ray(q);
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] == 0) continue;
    bool any = false;
    for (const auto& v : P.variables) any |= v.weight[j] != 0;
    if (!any) throw InfeasibleRay("message '" + P.message_ids[j] + "' cannot be delivered, but the ray needs it");
  }
  RayResult r;
  r.lp = build_ray_lp(P, q);
  r.solution = simplex_exact(r.lp);
  if (r.solution.status != LpStatus::optimal) throw Error(std::string("ray LP not optimal: ") + to_string(r.solution.status));
  r.lambda = r.solution.value;
  for (const auto& x : q) r.point.push_back(r.lambda * x);
  r.certified = certify(r.lp, r.solution.x, r.solution.duals).ok();
  return r;
}

inline RayResult oracle_ray_exact_route(const Network& net, const std::vector<Rational>& q, const Caps& caps = {}) {
  return oracle_ray_exact(route_parent(net, caps), q);
}

inline RayResult oracle_ray_exact_lcode(const Network& net, const PrimeField& F, const std::vector<Rational>& q,
                                        const Caps& caps = {}) {
  return oracle_ray_exact(lcode_parent(net, F, caps), q);
}

// ---- approximate ray oracles ------------------------------------------

struct ApproxParams {
  double omega = 0.5;
  OracleKind oracle = OracleKind::brute;
  double ratio = 0;  // A (route) or B (lcode); 0 = take it from the oracle
  double pack_omega = 0;  // omega for the tree packing step; 0 = same as omega
  Caps caps;
};

struct ApproxRayResult {
  double lambda = 0;
  std::vector<double> point;
  double omega = 0;
  double ratio = 1;
  std::size_t phases = 0;
  std::size_t steps = 0;
  std::size_t restarts = 0;
};

namespace detail {

inline std::vector<double> to_doubles(const std::vector<Rational>& q) {
  std::vector<double> out;
  for (const auto& x : q) out.push_back(x.get_d());
  return out;
}

// initial scaling from single-message tree packings
inline double initial_scale(const Network& red, const std::vector<double>& q, double omega, OracleKind kind, const Caps& caps) {
  double z = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] <= 0) continue;
    auto oracle = make_oracle(kind, red, int(j), caps);
    double zj = pack_trees(red, int(j), omega, *oracle, oracle->ratio()).value;
    z = std::min(z, zj / q[j]);
  }
  return double(q.size()) / z;
}

}  // namespace detail

inline ApproxRayResult oracle_ray_approx_route(const Network& net, const std::vector<Rational>& qr, const ApproxParams& prm = {}) {
  check_ray(qr);
  if (!(prm.omega > 0 && prm.omega < 1)) throw Error("omega must be in (0,1)");
  Network red = add_super_sources(net);
  const std::size_t k = red.num_messages(), E = red.num_edges();
  std::vector<std::unique_ptr<SteinerOracle>> oracles;
  double A = 1;
  for (std::size_t j = 0; j < k; ++j) {
    oracles.push_back(make_oracle(prm.oracle, red, int(j), prm.caps));
    A = std::max(A, oracles.back()->ratio());
    if (qr[j] > 0 && !(*oracles.back())(std::vector<double>(E, 1.0)).found)
      throw InfeasibleRay("message '" + red.messages[j].id + "' cannot be delivered, but the ray needs it");
  }
  if (prm.ratio > 0) A = prm.ratio;
  auto q = detail::to_doubles(qr);

  ApproxRayResult out;
  out.omega = prm.omega;
  out.ratio = A;
  double sf = detail::initial_scale(red, q, prm.pack_omega > 0 ? prm.pack_omega : prm.omega, prm.oracle, prm.caps);
  std::vector<double> qs(k);
  for (std::size_t j = 0; j < k; ++j) qs[j] = sf * q[j];

  const double eta = prm.omega / (9 * A);
  const double ea = eta * A;
  const double delta = std::pow(double(E) / (1 - ea), -1 / ea);
  const double log_base = std::log1p(eta);
  const std::size_t N = 2 * std::size_t(std::ceil(std::log(double(E) / (1 - ea)) / log_base / ea));
  const double denom = std::log(1 / delta) / log_base;

  while (true) {
    std::size_t t = 0;
    std::vector<double> l(E);
    for (std::size_t e = 0; e < E; ++e) l[e] = delta / double(red.edges[e].capacity);
    for (std::size_t phase = 0; phase < N; ++phase) {
      ++out.phases;
      for (std::size_t j = 0; j < k; ++j) {
        double gamma = qs[j];
        while (gamma > 0) {
          auto tree = (*oracles[j])(l);
          double d = gamma;
          for (int e : tree.edges) d = std::min(d, double(red.edges[e].capacity));
          gamma -= d;
          for (int e : tree.edges) l[e] *= 1 + eta * d / double(red.edges[e].capacity);
          ++out.steps;
          double D = 0;
          for (std::size_t e = 0; e < E; ++e) D += l[e] * double(red.edges[e].capacity);
          if (D >= 1) {
            out.lambda = sf * double(t) / denom;
            for (double x : q) out.point.push_back(out.lambda * x);
            return out;
          }
        }
      }
      ++t;
    }
    sf *= 2;
    for (auto& x : qs) x *= 2;
    ++out.restarts;
  }
}

inline ApproxRayResult oracle_ray_approx_lcode(const Network& net, const PrimeField& F, const std::vector<Rational>& qr,
                                               const ApproxParams& prm = {}) {
  check_ray(qr);
  if (!(prm.omega > 0 && prm.omega < 1)) throw Error("omega must be in (0,1)");
  const std::size_t k = net.num_messages(), E = net.num_edges();
  auto wvs = weight_vectors(net, F, prm.caps);
  std::vector<std::vector<int>> weights;
  for (const auto& w : wvs) weights.push_back(w.w);
  for (std::size_t j = 0; j < k; ++j) {
    if (qr[j] == 0) continue;
    bool any = false;
    for (const auto& w : weights) any |= w[j] != 0;
    if (!any) throw InfeasibleRay("message '" + net.messages[j].id + "' cannot be delivered, but the ray needs it");
  }
  const double B = prm.ratio > 0 ? prm.ratio : 1.0;
  auto q = detail::to_doubles(qr);

  ApproxRayResult out;
  out.omega = prm.omega;
  out.ratio = B;
  Network red = add_super_sources(net);
  double sf = detail::initial_scale(red, q, prm.pack_omega > 0 ? prm.pack_omega : prm.omega, OracleKind::brute, prm.caps);
  std::vector<double> qs(k);
  for (std::size_t j = 0; j < k; ++j) qs[j] = sf * q[j];

  const double eta = prm.omega / (9 * B);
  const double eb = eta * B;
  const double delta = std::pow(double(E) / (1 - eb), -1 / eb);
  const double log_base = std::log1p(eta);
  const std::size_t N = 2 * std::size_t(std::ceil(std::log(double(E) / (1 - eb)) / log_base / eb));
  const double denom = std::log(1 / delta) / log_base;

  while (true) {
    std::size_t t = 0;
    std::vector<double> l(E);
    for (std::size_t e = 0; e < E; ++e) l[e] = delta / double(net.edges[e].capacity);
    std::vector<Rational> qrat;
    for (double x : qs) qrat.push_back(Rational(x));
    for (std::size_t phase = 0; phase < N; ++phase) {
      ++out.phases;
      double gamma = 1;
      while (gamma > 0) {
        std::vector<Rational> U;
        std::vector<std::vector<int>> active;
        for (const auto& w : weights) {
          SLinearOptions opt;
          opt.messages.assign(w.begin(), w.end());
          opt.caps = prm.caps;
          auto sol = min_cost_slinear(net, F, l, opt);
          U.push_back(Rational(sol->cost));
          active.push_back(sol->active_edges);
        }
        auto cov = solve_covering(weights, U, qrat);
        if (cov.status != LpStatus::optimal) throw Error("covering LP has no solution");
        std::vector<double> W(E, 0);
        for (std::size_t i = 0; i < weights.size(); ++i)
          for (int e : active[i]) W[e] += cov.y[i].get_d();
        // route gamma * W, cut back by the worst overload
        double s = 1;
        for (std::size_t e = 0; e < E; ++e) s = std::max(s, gamma * W[e] / double(net.edges[e].capacity));
        double routed = gamma / s;
        gamma = s > 1 ? gamma - gamma / s : 0;
        ++out.steps;
        double D = 0;
        for (std::size_t e = 0; e < E; ++e) {
          l[e] *= 1 + eta * routed * W[e] / double(net.edges[e].capacity);
          D += l[e] * double(net.edges[e].capacity);
        }
        if (D > 1) {
          out.lambda = sf * double(t) / denom;
          for (double x : q) out.point.push_back(out.lambda * x);
          return out;
        }
      }
      ++t;
    }
    sf *= 2;
    for (auto& x : qs) x *= 2;
    ++out.restarts;
  }
}

// ---- regions ----------------------------------------------------------

struct RegionDescription {
  std::vector<std::string> messages;
  std::vector<std::vector<Rational>> vertices;
  bool exact = true;
  double omega = 0;
  double ratio = 1;
  std::size_t oracle_calls = 0;
  bool partial = false;
  std::string method;
};

using Point2 = std::array<Rational, 2>;

namespace detail {

inline Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counterclockwise from the lowest-leftmost point, collinear points dropped.
inline std::vector<Point2> hull_2d(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace detail

inline std::vector<Rational> psi(const ParentPolytope& P, const std::vector<Rational>& x) {
  std::vector<Rational> r(P.num_messages(), 0);
  for (std::size_t v = 0; v < P.variables.size(); ++v)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (P.variables[v].weight[j]) r[j] += x[v];
  return r;
}

// Vertices of {x >= 0, loads <= capacity} by brute force over tight sets.
inline std::vector<std::vector<Rational>> parent_vertices(const ParentPolytope& P, const Caps& caps = {}) {
  const std::size_t n = P.variables.size();
  check_cap("vertex_vars", n, caps.vertex_vars);
  // rows: used edges, then x_v >= 0
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t e = 0; e < P.edge_ids.size(); ++e) {
    std::vector<Rational> r(n, 0);
    bool used = false;
    for (std::size_t v = 0; v < n; ++v)
      for (int u : P.variables[v].edges)
        if (u == int(e)) r[v] += 1, used = true;
    if (!used) continue;
    rows.push_back(r);
    rhs.push_back(P.capacities[e]);
  }
  const std::size_t m = rows.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> r(n, 0);
    r[v] = -1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Rational>> out;
  if (n == 0) return {{}};
  for_each_combination(rows.size(), n, [&](const std::vector<std::size_t>& tight) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (auto i : tight) a.push_back(rows[i]), b.push_back(rhs[i]);
    std::vector<Rational> x;
    if (!detail::solve_square(a, b, x)) return;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Rational s = 0;
      for (std::size_t v = 0; v < n; ++v) s += rows[i][v] * x[v];
      if (s > rhs[i]) return;
    }
    if (seen.insert(x).second) out.push_back(x);
  });
  (void)m;
  return out;
}

// Extreme points of a finite set: p is kept unless it is a convex
// combination of the others (checked with an exact LP).
inline std::vector<std::vector<Rational>> extreme_points(std::vector<std::vector<Rational>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    LinearProgram lp;
    std::size_t n = pts.size() - 1;
    lp.objective.assign(n, 0);
    std::size_t d = pts[i].size();
    for (std::size_t c = 0; c <= d; ++c) {
      Constraint row;
      row.sense = Sense::eq;
      row.coeffs.resize(n);
      std::size_t v = 0;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        row.coeffs[v++] = c < d ? pts[j][c] : Rational(1);
      }
      row.rhs = c < d ? pts[i][c] : Rational(1);
      lp.rows.push_back(row);
    }
    if (n == 0 || simplex_exact(lp).status == LpStatus::infeasible) out.push_back(pts[i]);
  }
  return out;
}

// Vertices of the region: images of parent vertices, then their hull.
// Two messages: counterclockwise from the origin. Otherwise sorted.
inline RegionDescription vertex_enum_region(const ParentPolytope& P, const Caps& caps = {}) {
  RegionDescription out;
  out.messages = P.message_ids;
  out.method = "vertex";
  std::vector<std::vector<Rational>> img;
  for (const auto& x : parent_vertices(P, caps)) img.push_back(psi(P, x));
  const std::size_t k = P.num_messages();
  if (k == 2) {
    std::vector<Point2> pts;
    for (const auto& p : img) pts.push_back({p[0], p[1]});
    for (const auto& p : detail::hull_2d(pts)) out.vertices.push_back({p[0], p[1]});
  } else if (k == 1) {
    Rational hi = 0;
    for (const auto& p : img) hi = std::max(hi, p[0]);
    out.vertices.push_back({Rational(0)});
    if (hi > 0) out.vertices.push_back({hi});
  } else {
    out.vertices = extreme_points(img);
  }
  return out;
}

struct TraceOptions {
  // equality test for returned points; nullptr = exact
  std::function<bool(const Point2&, const Point2&)> same;
  std::size_t max_calls = 1000;
};

struct TraceResult {
  std::vector<Point2> boundary;  // computed list, sentinels removed, origin first
  std::vector<Point2> vertices;  // boundary without collinear points
  std::size_t calls = 0;
  bool partial = false;
};

// Boundary of a down-closed convex planar region from a ray oracle
// returning the boundary point in a given direction.
inline TraceResult boundary_trace_2d(const std::function<Point2(const Point2&)>& ray, const TraceOptions& opt = {}) {
  auto same = opt.same ? opt.same : [](const Point2& a, const Point2& b) { return a == b; };
  TraceResult out;
  const Point2 origin{Rational(0), Rational(0)};
  Point2 ax = ray({Rational(1), Rational(0)});
  Point2 ay = ray({Rational(0), Rational(1)});
  out.calls = 2;
  const Rational x1 = ax[0], y2 = ay[1];
  if (x1 == 0 || y2 == 0) {
    out.boundary = {origin};
    if (x1 > 0) out.boundary.push_back({x1, Rational(0)});
    if (y2 > 0) out.boundary.push_back({Rational(0), y2});
    out.vertices = out.boundary;
    return out;
  }
  std::vector<Point2> L{{x1, Rational(-1)}, {x1, Rational(0)}, {Rational(0), y2}, {Rational(-1), y2}};
  std::size_t cur = 0;
  while (cur + 3 < L.size()) {
    const Point2 p1 = L[cur], p2 = L[cur + 1], p3 = L[cur + 2], p4 = L[cur + 3];
    // intersect line(p1,p2) with line(p3,p4)
    Rational d1x = p2[0] - p1[0], d1y = p2[1] - p1[1], d2x = p4[0] - p3[0], d2y = p4[1] - p3[1];
    Rational den = d1x * d2y - d1y * d2x;
    if (den == 0) {
      ++cur;
      continue;
    }
    Rational s = ((p3[0] - p1[0]) * d2y - (p3[1] - p1[1]) * d2x) / den;
    Point2 p{p1[0] + s * d1x, p1[1] + s * d1y};
    if (p[0] < 0 || p[1] < 0 || (p[0] == 0 && p[1] == 0)) {
      ++cur;
      continue;
    }
    if (out.calls >= opt.max_calls) {
      out.partial = true;
      break;
    }
    Point2 r = ray(p);
    ++out.calls;
    if (!same(r, p2) && !same(r, p3)) L.insert(L.begin() + cur + 2, r);
    else ++cur;
  }
  out.boundary.push_back(origin);
  for (std::size_t i = 1; i + 1 < L.size(); ++i)
    if (!same(L[i], out.boundary.back())) out.boundary.push_back(L[i]);
  // drop points lying on the segment between their neighbours
  const auto& b = out.boundary;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Point2& prev = b[(i + b.size() - 1) % b.size()];
    const Point2& next = b[(i + 1) % b.size()];
    if (b.size() > 2 && detail::cross(prev, b[i], next) == 0) continue;
    out.vertices.push_back(b[i]);
  }
  return out;
}

inline std::size_t trace_call_bound(std::size_t vertices) {
  // a polygon has as many edges as vertices
  return 3 * (vertices + vertices) + 4;
}

}  // namespace netcap
