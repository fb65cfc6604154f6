#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "netcap/caps.hpp"
#include "netcap/matroid.hpp"
#include "netcap/matroidal.hpp"
#include "netcap/network.hpp"

namespace netcap {

struct SLinearOptions {
  std::vector<bool> messages;       // messages that must be served; empty = all
  std::vector<bool> allowed_edges;  // edges allowed to carry a nonzero vector; empty = all
  bool witness = true;
  Caps caps;
};

template <class Cost>
struct SLinearSolution {
  GlobalScalarCode code;
  Cost cost{};
  std::vector<int> active_edges;  // edges with a nonzero vector
};

namespace detail {

// Coding vectors packed as base-p integers, coordinate k is digit k.
class VecCodec {
 public:
  VecCodec(const PrimeField& f, std::size_t dim) : f_(f), dim_(dim) {
    std::uint64_t lim = 1;
    pow_.push_back(1);
    for (std::size_t k = 0; k < dim; ++k) {
      if (lim > (std::uint64_t(1) << 62) / f.p()) throw CapExceeded("messages", "coding vectors do not fit in 62 bits");
      lim *= f.p();
      pow_.push_back(lim);
    }
  }
  std::uint64_t encode(const FVec& v) const {
    std::uint64_t x = 0;
    for (std::size_t k = 0; k < dim_; ++k) x += std::uint64_t(v[k]) * pow_[k];
    return x;
  }
  FVec decode(std::uint64_t x) const {
    FVec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = Elem(x % f_.p()), x /= f_.p();
    return v;
  }
  std::uint64_t unit(std::size_t k) const { return pow_[k]; }
  std::size_t dim() const { return dim_; }
  const PrimeField& field() const { return f_; }

 private:
  PrimeField f_;
  std::size_t dim_;
  std::vector<std::uint64_t> pow_;
};

// Zero, then the projective representatives (first nonzero coordinate 1) of
// the span, ascending. Scaling a vector changes neither spans nor costs.
class SpanCache {
 public:
  explicit SpanCache(const VecCodec& c) : c_(c) {}

  const std::vector<std::uint64_t>& candidates(std::vector<std::uint64_t> inputs) {
    std::sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
    if (!inputs.empty() && inputs.front() == 0) inputs.erase(inputs.begin());
    auto it = cache_.find(inputs);
    if (it != cache_.end()) return it->second;
    const auto& F = c_.field();
    std::vector<FVec> basis;
    if (!inputs.empty()) {
      std::vector<FVec> gens;
      for (auto x : inputs) gens.push_back(c_.decode(x));
      // rows of the rref of the generator matrix (as rows) span the same space
      FieldMatrix m(F, gens.size(), c_.dim());
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < c_.dim(); ++k) m.at(i, k) = gens[i][k];
      auto r = rref(m);
      for (std::size_t i = 0; i < r.rank; ++i) {
        FVec row(c_.dim());
        for (std::size_t k = 0; k < c_.dim(); ++k) row[k] = r.reduced.at(i, k);
        basis.push_back(row);
      }
    }
    // rref rows have leading 1s, so combinations whose first nonzero
    // coefficient is 1 are exactly the normalized vectors
    std::vector<std::uint64_t> out{0};
    std::vector<Elem> coef(basis.size(), 0);
    for (std::size_t lead = 0; lead < basis.size(); ++lead) {
      std::fill(coef.begin(), coef.end(), 0);
      coef[lead] = 1;
      while (true) {
        FVec v(c_.dim(), 0);
        for (std::size_t i = lead; i < basis.size(); ++i)
          if (coef[i])
            for (std::size_t k = 0; k < c_.dim(); ++k) v[k] = F.add(v[k], F.mul(coef[i], basis[i][k]));
        out.push_back(c_.encode(v));
        std::size_t i = lead + 1;
        while (i < basis.size() && ++coef[i] == F.p()) coef[i++] = 0;
        if (i >= basis.size()) break;
      }
    }
    std::sort(out.begin(), out.end());
    return cache_.emplace(inputs, std::move(out)).first->second;
  }

 private:
  const VecCodec& c_;
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> cache_;
};

}  // namespace detail

// Minimum total length of edges carrying nonzero vectors over all scalar
// linear codes serving the chosen messages. Forward DP over topological
// prefixes; a state is the assignment on the current cut.
template <class Cost>
std::optional<SLinearSolution<Cost>> min_cost_slinear(const Network& net, const PrimeField& F, const std::vector<Cost>& lengths,
                                                      const SLinearOptions& opt = {}) {
  const std::size_t k = net.num_messages();
  check_cap("messages", k, opt.caps.messages);
  if (lengths.size() != net.num_edges()) throw Error("one length per edge required");
  auto active = [&](int m) { return opt.messages.empty() || opt.messages[m]; };
  auto allowed = [&](int e) { return opt.allowed_edges.empty() || opt.allowed_edges[e]; };

  detail::VecCodec codec(F, k);
  detail::SpanCache spans(codec);
  auto topo = topo_sort(net);
  const std::size_t n = net.num_nodes();

  struct Entry {
    std::vector<std::uint64_t> key;
    Cost cost;
    std::size_t parent;
    std::vector<std::uint64_t> outs;
  };
  std::vector<std::vector<Entry>> levels;
  std::vector<Entry> prev{{{}, Cost{}, 0, {}}};
  std::vector<int> prev_cut;

  std::vector<std::vector<int>> in_of(n), out_of(n);
  for (std::size_t e = 0; e < net.num_edges(); ++e) {
    in_of[net.edges[e].head].push_back(int(e));
    out_of[net.edges[e].tail].push_back(int(e));
  }

  for (std::size_t i = 0; i < n; ++i) {
    int x = topo.order[i];
    const auto& cut = topo.cuts[i];
    // where each new cut edge comes from: >=0 slot in prev key, <0 -(out slot)-1
    std::vector<int> src(cut.size());
    for (std::size_t c = 0; c < cut.size(); ++c) {
      auto it = std::find(prev_cut.begin(), prev_cut.end(), cut[c]);
      if (it != prev_cut.end()) src[c] = int(it - prev_cut.begin());
      else src[c] = -int(std::find(out_of[x].begin(), out_of[x].end(), cut[c]) - out_of[x].begin()) - 1;
    }
    std::vector<int> in_slot;
    for (int e : in_of[x]) in_slot.push_back(int(std::find(prev_cut.begin(), prev_cut.end(), e) - prev_cut.begin()));
    std::vector<std::uint64_t> own;
    for (int m : net.generated(x))
      if (active(m)) own.push_back(codec.unit(m));
    std::vector<std::uint64_t> need;
    for (int m : net.demanded(x))
      if (active(m)) need.push_back(codec.unit(m));
    const auto& outs = out_of[x];

    std::map<std::vector<std::uint64_t>, std::size_t> index;
    std::vector<Entry> cur;
    for (std::size_t s = 0; s < prev.size(); ++s) {
      const auto& st = prev[s];
      auto inputs = own;
      for (int slot : in_slot) inputs.push_back(st.key[slot]);
      const auto& cand = spans.candidates(inputs);
      bool ok = true;
      for (auto u : need) ok &= std::binary_search(cand.begin(), cand.end(), u);
      if (!ok) continue;

      std::vector<std::size_t> pick(outs.size(), 0);
      std::vector<std::size_t> limit(outs.size());
      for (std::size_t o = 0; o < outs.size(); ++o) limit[o] = allowed(outs[o]) ? cand.size() : 1;
      while (true) {
        std::vector<std::uint64_t> chosen(outs.size());
        Cost cost = st.cost;
        for (std::size_t o = 0; o < outs.size(); ++o) {
          chosen[o] = cand[pick[o]];
          if (chosen[o]) cost += lengths[outs[o]];
        }
        std::vector<std::uint64_t> key(cut.size());
        for (std::size_t c = 0; c < cut.size(); ++c) key[c] = src[c] >= 0 ? st.key[src[c]] : chosen[-src[c] - 1];
        auto it = index.find(key);
        if (it == index.end()) {
          index.emplace(key, cur.size());
          cur.push_back({std::move(key), cost, s, std::move(chosen)});
          if (cur.size() > opt.caps.dp_states)
            throw CapExceeded("dp_states", "DP level exceeds " + std::to_string(opt.caps.dp_states) + " states");
        } else if (cost < cur[it->second].cost) {
          cur[it->second].cost = cost;
          cur[it->second].parent = s;
          cur[it->second].outs = std::move(chosen);
        }
        std::size_t o = 0;
        while (o < outs.size() && ++pick[o] == limit[o]) pick[o++] = 0;
        if (o == outs.size()) break;
      }
    }
    // keep states ordered by key so ties resolve the same way every run
    std::vector<Entry> sorted;
    sorted.reserve(cur.size());
    for (auto& [key, idx] : index) sorted.push_back(std::move(cur[idx]));
    if (opt.witness) levels.push_back(prev);
    prev = std::move(sorted);
    prev_cut = cut;
    if (prev.empty()) return std::nullopt;
  }

  SLinearSolution<Cost> sol;
  sol.cost = prev.front().cost;
  if (!opt.witness) return sol;
  levels.push_back(prev);
  auto& code = sol.code;
  code.field = F;
  for (std::size_t m = 0; m < k; ++m) code.message_vectors.push_back(unit_vector(k, m));
  code.edge_vectors.assign(net.num_edges(), FVec(k, 0));
  if (!opt.messages.empty()) code.served = opt.messages;
  std::size_t idx = 0;
  for (std::size_t i = n; i-- > 0;) {
    const auto& e = levels[i + 1][idx];
    int x = topo.order[i];
    for (std::size_t o = 0; o < out_of[x].size(); ++o) code.edge_vectors[out_of[x][o]] = codec.decode(e.outs[o]);
    idx = e.parent;
  }
  for (std::size_t e = 0; e < net.num_edges(); ++e)
    if (!is_zero(code.edge_vectors[e])) sol.active_edges.push_back(int(e));
  return sol;
}

inline std::vector<bool> mask_to_flags(std::uint64_t mask, std::size_t k) {
  std::vector<bool> f(k);
  for (std::size_t i = 0; i < k; ++i) f[i] = (mask >> i) & 1;
  return f;
}

inline std::vector<int> mask_to_weight(std::uint64_t mask, std::size_t k) {
  std::vector<int> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = int((mask >> i) & 1);
  return w;
}

struct WeightVector {
  std::vector<int> w;
  GlobalScalarCode witness;
};

// Nonzero 0/1 vectors w for which some scalar linear code serves exactly
// the messages with w_i = 1. Order: bit i of the counter is message i.
inline std::vector<WeightVector> weight_vectors(const Network& net, const PrimeField& F, const Caps& caps = {}) {
  const std::size_t k = net.num_messages();
  check_cap("messages", k, std::min<std::size_t>(caps.messages, 20));
  std::vector<WeightVector> out;
  std::vector<std::int64_t> unit(net.num_edges(), 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
    SLinearOptions opt;
    opt.messages = mask_to_flags(mask, k);
    opt.caps = caps;
    auto sol = min_cost_slinear(net, F, unit, opt);
    if (sol) out.push_back({mask_to_weight(mask, k), sol->code});
  }
  return out;
}

struct PartialSolution {
  std::vector<int> w;
  std::vector<int> edges;  // minimal active edge set
  GlobalScalarCode code;
};

// For every solvable weight vector, every minimal set of edges that some
// partial solution needs. Sets are tried by increasing size, so a feasible
// set with no smaller feasible subset found so far is minimal.
inline std::vector<PartialSolution> enumerate_partial_solutions(const Network& net, const PrimeField& F, const Caps& caps = {}) {
  check_cap("partial_edges", net.num_edges(), caps.partial_edges);
  std::vector<PartialSolution> out;
  std::vector<std::int64_t> unit(net.num_edges(), 1);
  for (const auto& wv : weight_vectors(net, F, caps)) {
    std::vector<std::uint64_t> found;
    std::vector<bool> flags(wv.w.begin(), wv.w.end());
    for (std::size_t size = 0; size <= net.num_edges(); ++size) {
      for_each_combination(net.num_edges(), size, [&](const std::vector<std::size_t>& s) {
        std::uint64_t m = 0;
        for (auto e : s) m |= std::uint64_t(1) << e;
        for (auto f : found)
          if ((f & m) == f) return;
        SLinearOptions opt;
        opt.messages = flags;
        opt.allowed_edges.assign(net.num_edges(), false);
        for (auto e : s) opt.allowed_edges[e] = true;
        opt.caps = caps;
        auto sol = min_cost_slinear(net, F, unit, opt);
        if (!sol) return;
        found.push_back(m);
        out.push_back({wv.w, std::vector<int>(s.begin(), s.end()), sol->code});
      });
    }
  }
  return out;
}

}  // namespace netcap
