#pragma once

#include <string>
#include <vector>

#include "netcap/network.hpp"
#include "netcap/simplex.hpp"

namespace netcap {

// One column per Steiner tree (routing) or per partial solution (coding):
// the edges it occupies and the messages it delivers.
struct ParentVariable {
  std::vector<int> edges;
  std::vector<int> weight;
  std::string label;
};

struct ParentPolytope {
  std::vector<std::string> message_ids;
  std::vector<std::string> edge_ids;
  std::vector<Rational> capacities;
  std::vector<ParentVariable> variables;

  std::size_t num_messages() const { return message_ids.size(); }
};

inline ParentPolytope empty_parent(const Network& net) {
  ParentPolytope p;
  for (const auto& m : net.messages) p.message_ids.push_back(m.id);
  for (const auto& e : net.edges) {
    p.edge_ids.push_back(e.id);
    p.capacities.push_back(Rational(static_cast<long>(e.capacity)));
  }
  return p;
}

// maximize lambda s.t. edge loads <= capacity, delivered(j) >= lambda q_j
inline LinearProgram build_ray_lp(const ParentPolytope& P, const std::vector<Rational>& q) {
  if (q.size() != P.num_messages()) throw Error("ray needs one coordinate per message");
  const std::size_t nv = P.variables.size();
  LinearProgram lp;
  lp.objective.assign(nv + 1, 0);
  lp.objective[nv] = 1;
  for (const auto& v : P.variables) lp.var_names.push_back(v.label);
  lp.var_names.push_back("lambda");
  for (std::size_t e = 0; e < P.edge_ids.size(); ++e) {
    Constraint c;
    c.coeffs.assign(nv + 1, 0);
    for (std::size_t j = 0; j < nv; ++j)
      for (int u : P.variables[j].edges)
        if (u == int(e)) c.coeffs[j] += 1;
    c.rhs = P.capacities[e];
    c.name = "cap_" + P.edge_ids[e];
    lp.rows.push_back(c);
  }
  for (std::size_t m = 0; m < P.num_messages(); ++m) {
    Constraint c;
    c.coeffs.assign(nv + 1, 0);
    for (std::size_t j = 0; j < nv; ++j) c.coeffs[j] = P.variables[j].weight[m];
    c.coeffs[nv] = -q[m];
    c.sense = Sense::ge;
    c.rhs = 0;
    c.name = "demand_" + P.message_ids[m];
    lp.rows.push_back(c);
  }
  return lp;
}

inline LinearProgram build_route_ray_lp(const ParentPolytope& P, const std::vector<Rational>& q) { return build_ray_lp(P, q); }
inline LinearProgram build_lcode_ray_lp(const ParentPolytope& P, const std::vector<Rational>& q) { return build_ray_lp(P, q); }

inline Rational ceil_of(const Rational& x) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(c);
}

struct CoveringResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> y;
  LinearProgram lp;
};

// min sum U_i y_i s.t. sum_i w_i[j] y_i >= q_j, 0 <= y_i <= max{ceil(q_j) : w_i[j] = 1}
inline CoveringResult solve_covering(const std::vector<std::vector<int>>& weights, const std::vector<Rational>& costs,
                                     const std::vector<Rational>& q) {
  const std::size_t n = weights.size();
  if (costs.size() != n) throw Error("one cost per weight vector required");
  CoveringResult out;
  auto& lp = out.lp;
  lp.maximize = false;
  lp.objective = costs;
  lp.upper.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational u = 0;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (weights[i][j] && ceil_of(q[j]) > u) u = ceil_of(q[j]);
    lp.upper[i] = u;
    lp.var_names.push_back("y" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    Constraint c;
    c.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.coeffs[i] = weights[i][j];
    c.sense = Sense::ge;
    c.rhs = q[j];
    c.name = "cover_" + std::to_string(j + 1);
    lp.rows.push_back(c);
  }
  auto sol = simplex_exact(lp);
  out.status = sol.status;
  if (sol.status == LpStatus::optimal) {
    out.value = sol.value;
    out.y = sol.x;
  }
  return out;
}

}  // namespace netcap
