#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcap/caps.hpp"
#include "netcap/gf.hpp"

namespace netcap {

using ElementSet = std::vector<std::size_t>;  // sorted column indices

// Column matroid of a matrix over GF(p). Labels name the ground elements for
// scripts and output; they default to "1".."d".
class RepresentableMatroid {
 public:
  RepresentableMatroid() = default;
  explicit RepresentableMatroid(FieldMatrix m, std::vector<std::string> labels = {})
      : m_(std::move(m)), labels_(std::move(labels)) {
    if (labels_.empty())
      for (std::size_t i = 0; i < m_.cols(); ++i) labels_.push_back(std::to_string(i + 1));
    if (labels_.size() != m_.cols()) throw Error("label count does not match column count");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[i] == labels_[j]) throw Error("duplicate element label '" + labels_[i] + "'");
  }

  const FieldMatrix& matrix() const { return m_; }
  const PrimeField& field() const { return m_.field(); }
  std::size_t ground_size() const { return m_.cols(); }
  std::size_t dim() const { return m_.rows(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t e) const { return labels_.at(e); }

  std::optional<std::size_t> element(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  std::size_t rank(std::span<const std::size_t> subset) const {
    if (subset.empty()) return 0;
    return netcap::rank(m_.select_columns(subset));
  }
  std::size_t rank() const { return netcap::rank(m_); }
  bool independent(std::span<const std::size_t> subset) const { return rank(subset) == subset.size(); }
  bool is_base(std::span<const std::size_t> subset) const {
    return independent(subset) && subset.size() == rank();
  }
  bool is_circuit(std::span<const std::size_t> subset) const {
    if (subset.empty() || independent(subset)) return false;
    for (std::size_t skip = 0; skip < subset.size(); ++skip) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < subset.size(); ++i)
        if (i != skip) s.push_back(subset[i]);
      if (!independent(s)) return false;
    }
    return true;
  }

 private:
  FieldMatrix m_;
  std::vector<std::string> labels_;
};

// k-subsets of {0..n-1} in lexicographic order
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& fn) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(c));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline std::vector<ElementSet> enumerate_bases(const RepresentableMatroid& m, const Caps& caps = {}) {
  check_cap("ground", m.ground_size(), caps.ground);
  std::vector<ElementSet> out;
  std::size_t r = m.rank();
  for_each_combination(m.ground_size(), r, [&](const ElementSet& s) {
    if (m.independent(s)) out.push_back(s);
  });
  return out;
}

// by size, then lexicographic
inline std::vector<ElementSet> enumerate_circuits(const RepresentableMatroid& m, const Caps& caps = {}) {
  check_cap("ground", m.ground_size(), caps.ground);
  std::vector<ElementSet> out;
  for (std::size_t k = 1; k <= std::min(m.ground_size(), m.rank() + 1); ++k)
    for_each_combination(m.ground_size(), k, [&](const ElementSet& s) {
      if (m.is_circuit(s)) out.push_back(s);
    });
  return out;
}

// Points of the rational normal curve: column 0 is the point at infinity
// (1,0,..,0), then (t^{c-1},..,t,1) for t = 0,1,2,... Any c of them are
// independent, and there are p+1 of them.
inline RepresentableMatroid uniform_matroid(std::size_t c, std::size_t d, std::uint32_t p,
                                            std::vector<std::string> labels = {}) {
  PrimeField f(p);
  if (c > d) throw FieldError("U(c,d) needs c <= d");
  if (c >= 2 && c < d && std::uint64_t(p) + 1 < d)
    throw FieldError("U(" + std::to_string(c) + "," + std::to_string(d) + ") is not representable by this construction over GF(" +
                     std::to_string(p) + "); needs p >= d-1");
  FieldMatrix m(f, c, d);
  if (c == d) {
    for (std::size_t i = 0; i < c; ++i) m.at(i, i) = 1;
  } else if (c == 1) {
    for (std::size_t j = 0; j < d; ++j) m.at(0, j) = 1;
  } else if (c >= 2) {
    m.at(0, 0) = 1;
    for (std::size_t j = 1; j < d; ++j) {
      Elem t = Elem(j - 1), pw = 1;
      for (std::size_t r = c; r-- > 0;) {
        m.at(r, j) = pw;
        pw = f.mul(pw, t);
      }
    }
  }
  return RepresentableMatroid(m, std::move(labels));
}

// Signed incidence matrix: one row per vertex, column (u,v) has +1 at u and -1 at v.
inline RepresentableMatroid graphic_matroid(const std::vector<std::pair<std::string, std::string>>& edges, std::uint32_t p,
                                            std::vector<std::string> labels = {}) {
  PrimeField f(p);
  std::map<std::string, std::size_t> vid;
  std::vector<std::string> order;
  for (const auto& [u, v] : edges)
    for (const auto* x : {&u, &v})
      if (!vid.count(*x)) vid[*x] = order.size(), order.push_back(*x);
  FieldMatrix m(f, order.size(), edges.size());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    std::size_t u = vid[edges[j].first], v = vid[edges[j].second];
    if (u == v) continue;  // loop: zero column
    m.at(u, j) = f.add(m.at(u, j), 1);
    m.at(v, j) = f.sub(m.at(v, j), 1);
  }
  return RepresentableMatroid(m, std::move(labels));
}

inline RepresentableMatroid fano_matroid() {
  PrimeField f(2);
  return RepresentableMatroid(FieldMatrix(f, {{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}}));
}

}  // namespace netcap
