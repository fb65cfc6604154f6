#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "netcap/error.hpp"

namespace netcap {

using Rational = mpq_class;

inline Rational to_rational(double x) { return Rational(x); }

inline Rational parse_rational(const std::string& s) {
  Rational r;
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (r.set_str(s, 10) != 0) throw Error("not a rational number: '" + s + "'");
  } else {
    // decimal literal, read exactly
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string den = "1" + std::string(s.size() - dot - 1, '0');
    if (r.set_str(digits + "/" + den, 10) != 0) throw Error("not a rational number: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

enum class Sense { le, ge, eq };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::le;
  Rational rhs;
  std::string name;
};

// optimize objective . x subject to rows, 0 <= x <= upper (when given)
struct LinearProgram {
  bool maximize = true;
  std::vector<Rational> objective;
  std::vector<Constraint> rows;
  std::vector<std::optional<Rational>> upper;
  std::vector<std::string> var_names;

  std::size_t num_vars() const { return objective.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    default: return "unbounded";
  }
}

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
  std::vector<Rational> duals;  // one per row of with_bound_rows(lp)
  std::size_t pivots = 0;
};

// upper bounds as explicit rows, appended after the original rows
inline LinearProgram with_bound_rows(const LinearProgram& lp) {
  LinearProgram out = lp;
  out.upper.assign(lp.num_vars(), std::nullopt);
  for (std::size_t j = 0; j < lp.upper.size(); ++j) {
    if (!lp.upper[j]) continue;
    Constraint c;
    c.coeffs.assign(lp.num_vars(), 0);
    c.coeffs[j] = 1;
    c.rhs = *lp.upper[j];
    c.name = "ub_" + (j < lp.var_names.size() ? lp.var_names[j] : std::to_string(j));
    out.rows.push_back(c);
  }
  return out;
}

namespace detail {

// Dense tableau, Bland's rule throughout. Columns: structural, then one
// slack/surplus per inequality row, then one artificial per row that needs it.
class Tableau {
 public:
  std::vector<std::vector<Rational>> t;  // m rows of (ncols + 1), last entry rhs
  std::vector<std::size_t> basis;
  std::vector<Rational> obj;  // reduced cost row, length ncols + 1
  std::size_t ncols = 0;
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    ++pivots;
    Rational inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (std::size_t k = 0; k <= ncols; ++k)
        if (t[r][k] != 0) t[i][k] -= f * t[r][k];
    }
    if (obj[c] != 0) {
      Rational f = obj[c];
      for (std::size_t k = 0; k <= ncols; ++k)
        if (t[r][k] != 0) obj[k] -= f * t[r][k];
    }
    basis[r] = c;
  }

  // obj holds c_j - z_j for a maximization; returns false when unbounded
  bool run(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (allowed[j] && obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter == ncols) return true;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][ncols] / t[i][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }

  void set_objective(const std::vector<Rational>& c) {
    obj.assign(ncols + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) obj[j] = c[j];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Rational& cb = basis[i] < c.size() ? c[basis[i]] : Rational(0);
      if (cb == 0) continue;
      for (std::size_t k = 0; k <= ncols; ++k) obj[k] -= cb * t[i][k];
    }
  }
};

// solves M^T y = b for square M (rows given as vectors), exact
inline std::vector<Rational> solve_transposed(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[i][j];
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error("singular basis while recovering duals");
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = a[i][n] / a[i][i];
  return y;
}

}  // namespace detail

inline LpSolution simplex_exact(const LinearProgram& input) {
  LinearProgram lp = with_bound_rows(input);
  const std::size_t n = lp.num_vars(), m = lp.rows.size();
  for (const auto& r : lp.rows)
    if (r.coeffs.size() != n) throw Error("constraint width does not match objective");

  // sign-normalize so every rhs is nonnegative
  std::vector<std::vector<Rational>> A(m);
  std::vector<Rational> b(m);
  std::vector<Sense> sense(m);
  std::vector<bool> flipped(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    A[i] = lp.rows[i].coeffs;
    b[i] = lp.rows[i].rhs;
    sense[i] = lp.rows[i].sense;
    if (b[i] < 0) {
      flipped[i] = true;
      for (auto& x : A[i]) x = -x;
      b[i] = -b[i];
      if (sense[i] == Sense::le) sense[i] = Sense::ge;
      else if (sense[i] == Sense::ge) sense[i] = Sense::le;
    }
  }

  std::size_t nslack = 0, nart = 0;
  for (auto s : sense) {
    if (s != Sense::eq) ++nslack;
    if (s != Sense::le) ++nart;
  }
  detail::Tableau tab;
  tab.ncols = n + nslack + nart;
  tab.t.assign(m, std::vector<Rational>(tab.ncols + 1));
  tab.basis.assign(m, 0);
  std::vector<bool> is_art(tab.ncols, false);
  std::vector<std::vector<Rational>> colmat(tab.ncols, std::vector<Rational>(m));  // normalized columns
  std::vector<std::size_t> row_id(m), art_of_row(m, 0);
  std::size_t sk = n, ak = n + nslack;
  for (std::size_t i = 0; i < m; ++i) {
    row_id[i] = i;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = A[i][j];
    tab.t[i][tab.ncols] = b[i];
    if (sense[i] == Sense::le) {
      tab.t[i][sk] = 1;
      tab.basis[i] = sk++;
    } else {
      if (sense[i] == Sense::ge) tab.t[i][sk++] = -1;
      tab.t[i][ak] = 1;
      is_art[ak] = true;
      art_of_row[i] = ak;
      tab.basis[i] = ak++;
    }
    for (std::size_t j = 0; j < tab.ncols; ++j) colmat[j][i] = tab.t[i][j];
  }

  LpSolution sol;
  // phase 1: maximize -sum(artificials)
  if (nart) {
    std::vector<Rational> c1(tab.ncols, 0);
    for (std::size_t j = 0; j < tab.ncols; ++j)
      if (is_art[j]) c1[j] = -1;
    tab.set_objective(c1);
    std::vector<bool> all(tab.ncols, true);
    tab.run(all);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (is_art[tab.basis[i]]) infeas += tab.t[i][tab.ncols];
    if (infeas > 0) {
      sol.status = LpStatus::infeasible;
      sol.pivots = tab.pivots;
      return sol;
    }
    // drive zero-level artificials out; rows with nothing to pivot on are redundant
    for (std::size_t i = 0; i < tab.t.size();) {
      if (!is_art[tab.basis[i]]) {
        ++i;
        continue;
      }
      std::size_t c = tab.ncols;
      for (std::size_t j = 0; j < tab.ncols; ++j)
        if (!is_art[j] && tab.t[i][j] != 0) {
          c = j;
          break;
        }
      if (c == tab.ncols) {
        tab.t.erase(tab.t.begin() + i);
        tab.basis.erase(tab.basis.begin() + i);
        row_id.erase(row_id.begin() + i);
        continue;
      }
      tab.pivot(i, c);
      ++i;
    }
  }

  std::vector<Rational> c2(tab.ncols, 0);
  for (std::size_t j = 0; j < n; ++j) c2[j] = lp.maximize ? lp.objective[j] : Rational(-lp.objective[j]);
  tab.set_objective(c2);
  std::vector<bool> allowed(tab.ncols, true);
  for (std::size_t j = 0; j < tab.ncols; ++j)
    if (is_art[j]) allowed[j] = false;
  bool bounded = tab.run(allowed);
  sol.pivots = tab.pivots;
  if (!bounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }
  sol.status = LpStatus::optimal;
  sol.x.assign(n, 0);
  std::vector<Rational> xs(tab.ncols, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i) xs[tab.basis[i]] = tab.t[i][tab.ncols];
  for (std::size_t j = 0; j < n; ++j) sol.x[j] = xs[j];
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];

  // duals of the normalized max problem: B^T y = c_B. Redundant rows that
  // were dropped get their artificial back in the basis, which pins y_i = 0.
  std::vector<std::size_t> basis = tab.basis;
  std::vector<bool> kept(m, false);
  for (auto r : row_id) kept[r] = true;
  for (std::size_t i = 0; i < m; ++i)
    if (!kept[i]) basis.push_back(art_of_row[i]);
  std::vector<std::vector<Rational>> cols(m);
  std::vector<Rational> cb(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    cols[i] = colmat[basis[i]];
    cb[i] = basis[i] < n ? c2[basis[i]] : Rational(0);
  }
  auto y = detail::solve_transposed(cols, cb);
  sol.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational v = flipped[i] ? Rational(-y[i]) : y[i];
    sol.duals[i] = lp.maximize ? v : Rational(-v);
  }
  return sol;
}

struct Certificate {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool zero_gap = false;
  bool ok() const { return primal_feasible && dual_feasible && zero_gap; }
};

// Independent of the solver: checks x against the rows, y against the dual
// constraints, and equality of the two objective values.
inline Certificate certify(const LinearProgram& input, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  LinearProgram lp = with_bound_rows(input);
  const std::size_t n = lp.num_vars(), m = lp.rows.size();
  Certificate c;
  if (x.size() != n || y.size() != m) return c;
  c.primal_feasible = true;
  for (const auto& v : x)
    if (v < 0) c.primal_feasible = false;
  for (const auto& r : lp.rows) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += r.coeffs[j] * x[j];
    if ((r.sense == Sense::le && s > r.rhs) || (r.sense == Sense::ge && s < r.rhs) || (r.sense == Sense::eq && s != r.rhs))
      c.primal_feasible = false;
  }
  // max c.x, rows (<=: y>=0, >=: y<=0, =: free), A^T y >= c
  // min c.x, rows (>=: y>=0, <=: y<=0, =: free), A^T y <= c
  c.dual_feasible = true;
  for (std::size_t i = 0; i < m; ++i) {
    auto s = lp.rows[i].sense;
    bool pos = lp.maximize ? s == Sense::le : s == Sense::ge;
    bool neg = lp.maximize ? s == Sense::ge : s == Sense::le;
    if (pos && y[i] < 0) c.dual_feasible = false;
    if (neg && y[i] > 0) c.dual_feasible = false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += lp.rows[i].coeffs[j] * y[i];
    if (lp.maximize ? s < lp.objective[j] : s > lp.objective[j]) c.dual_feasible = false;
  }
  Rational px = 0, dy = 0;
  for (std::size_t j = 0; j < n; ++j) px += lp.objective[j] * x[j];
  for (std::size_t i = 0; i < m; ++i) dy += lp.rows[i].rhs * y[i];
  c.zero_gap = px == dy;
  return c;
}

inline std::string dump_lp(const LinearProgram& lp) {
  std::ostringstream os;
  auto name = [&](std::size_t j) { return j < lp.var_names.size() ? lp.var_names[j] : "x" + std::to_string(j); };
  auto term_list = [&](const std::vector<Rational>& c) {
    std::string s;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      bool neg = c[j] < 0;
      Rational a = neg ? Rational(-c[j]) : c[j];
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (a != 1) s += a.get_str() + " ";
      s += name(j);
    }
    return s.empty() ? std::string("0") : s;
  };
  os << (lp.maximize ? "maximize" : "minimize") << "\n  " << term_list(lp.objective) << "\nsubject to\n";
  for (const auto& r : lp.rows) {
    os << "  ";
    if (!r.name.empty()) os << r.name << ": ";
    os << term_list(r.coeffs) << (r.sense == Sense::le ? " <= " : r.sense == Sense::ge ? " >= " : " = ") << r.rhs.get_str()
       << "\n";
  }
  os << "bounds\n";
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    os << "  0 <= " << name(j);
    if (j < lp.upper.size() && lp.upper[j]) os << " <= " << lp.upper[j]->get_str();
    os << "\n";
  }
  return os.str();
}

}  // namespace netcap
