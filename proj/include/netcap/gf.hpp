#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcap/error.hpp"

namespace netcap {

using Elem = std::uint32_t;
using FVec = std::vector<Elem>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 2) : p_(p) {
    if (p < 2 || p > 65536 || !is_prime(p)) throw FieldError("not a supported prime field order: " + std::to_string(p));
  }
  std::uint32_t p() const { return p_; }

  Elem reduce(std::int64_t x) const {
    std::int64_t r = x % std::int64_t(p_);
    return Elem(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const { return Elem((std::uint64_t(a) + b) % p_); }
  Elem sub(Elem a, Elem b) const { return Elem((std::uint64_t(a) + p_ - b) % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return Elem(std::uint64_t(a) * b % p_); }
  Elem inv(Elem a) const {
    if (a % p_ == 0) throw FieldError("inverse of zero");
    std::int64_t t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr) {
      std::int64_t q = r / nr;
      t -= q * nt, std::swap(t, nt);
      r -= q * nr, std::swap(r, nr);
    }
    return reduce(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  FieldMatrix(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& rows) : f_(f), rows_(rows.size()) {
    cols_ = rows.empty() ? 0 : rows[0].size();
    a_.assign(rows_ * cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (rows[r].size() != cols_) throw Error("ragged matrix literal");
      for (std::size_t c = 0; c < cols_; ++c) at(r, c) = f_.reduce(rows[r][c]);
    }
  }
  // matrix whose columns are the given vectors (all of length `dim`)
  static FieldMatrix from_columns(const PrimeField& f, std::size_t dim, const std::vector<FVec>& cols) {
    FieldMatrix m(f, dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = cols[c][r];
    return m;
  }

  const PrimeField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  FVec column(std::size_t c) const {
    FVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }
  FieldMatrix select_columns(std::span<const std::size_t> cs) const {
    FieldMatrix m(f_, rows_, cs.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cs.size(); ++k) m.at(r, k) = at(r, cs[k]);
    return m;
  }
  FieldMatrix top_rows(std::size_t k) const {
    FieldMatrix m(f_, k, cols_);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    return m;
  }
  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
    return out;
  }

  bool operator==(const FieldMatrix&) const = default;

 private:
  PrimeField f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

struct Rref {
  FieldMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline Rref rref(FieldMatrix m) {
  const auto& f = m.field();
  Rref out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(piv, k), m.at(row, k));
    Elem s = f.inv(m.at(row, c));
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(row, k) = f.mul(m.at(row, k), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, c) == 0) continue;
      Elem factor = m.at(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m.at(r, k) = f.sub(m.at(r, k), f.mul(factor, m.at(row, k)));
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

inline bool columns_independent(const FieldMatrix& m, std::span<const std::size_t> cols) {
  return rank(m.select_columns(cols)) == cols.size();
}

inline std::size_t rank_of(const PrimeField& f, std::size_t dim, const std::vector<FVec>& vecs) {
  if (vecs.empty()) return 0;
  return rank(FieldMatrix::from_columns(f, dim, vecs));
}

// coefficients c with sum_j c_j * gens[j] == target, or nullopt
inline std::optional<FVec> solve_combination(const PrimeField& f, const std::vector<FVec>& gens, const FVec& target) {
  const std::size_t dim = target.size();
  FieldMatrix aug(f, dim, gens.size() + 1);
  for (std::size_t c = 0; c < gens.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) aug.at(r, c) = gens[c][r];
  for (std::size_t r = 0; r < dim; ++r) aug.at(r, gens.size()) = target[r];
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == gens.size()) return std::nullopt;
  FVec coef(gens.size(), 0);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) coef[red.pivots[i]] = red.reduced.at(i, gens.size());
  return coef;
}

inline bool in_span(const PrimeField& f, const std::vector<FVec>& gens, const FVec& target) {
  std::size_t dim = target.size();
  auto with = gens;
  with.push_back(target);
  return rank_of(f, dim, gens) == rank_of(f, dim, with);
}

inline FVec unit_vector(std::size_t dim, std::size_t k) {
  FVec v(dim, 0);
  v[k] = 1;
  return v;
}

inline bool is_zero(const FVec& v) {
  for (Elem x : v)
    if (x) return false;
  return true;
}

}  // namespace netcap
