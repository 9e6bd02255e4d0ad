#include "tdc/gamma.hpp"

#include <stdexcept>

#include "bb_solver.hpp"

namespace tdc {

namespace {

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

DominationResult infeasible_result(int n) {
  DominationResult r;
  r.witness = VertexSet(n);
  return r;
}

}  // namespace

bool is_total_dominating_set(const Graph& g, const VertexSet& s) {
  if (s.universe_size() != g.order())
    throw std::invalid_argument("is_total_dominating_set: universe mismatch");
  for (int v = 0; v < g.order(); ++v) {
    auto row = g.row(v);
    auto words = s.words();
    bool hit = false;
    for (size_t k = 0; k < row.size(); ++k)
      if (row[k] & words[k]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

DominationResult total_domination_number(const Graph& g) {
  int n = g.order();
  if (n == 0 || has_isolated_vertex(g)) return infeasible_result(n);
  DominationResult r;
  r.witness = VertexSet(n);
  if (g.packed()) {
    std::uint64_t adj[64];
    for (int v = 0; v < n; ++v) adj[v] = g.row64(v);
    detail::PackedBB bb;
    bb.load(adj, n);
    std::uint64_t w = 0;
    r.value = bb.solve(n, &w);
    for (std::uint64_t m = w; m; m &= m - 1) r.witness.add(std::countr_zero(m));
  } else {
    std::vector<detail::WideBB::Mask> adj(n);
    for (int v = 0; v < n; ++v) {
      auto row = g.row(v);
      adj[v].assign(row.begin(), row.end());
    }
    detail::WideBB bb;
    bb.load(std::move(adj), n);
    detail::WideBB::Mask w;
    r.value = bb.solve(n, &w);
    for (size_t k = 0; k < w.size(); ++k)
      for (std::uint64_t m = w[k]; m; m &= m - 1) r.witness.add(int(k) * 64 + std::countr_zero(m));
  }
  return r;
}

DominationResult brute_force_gamma_t(const Graph& g) {
  int n = g.order();
  if (n > 20) throw std::invalid_argument("brute_force_gamma_t: order above 20");
  if (n == 0 || has_isolated_vertex(g)) return infeasible_result(n);
  std::uint64_t adj[20];
  for (int v = 0; v < n; ++v) adj[v] = g.row64(v);
  auto dominates_all = [&](std::uint64_t set) {
    for (int v = 0; v < n; ++v)
      if (!(adj[v] & set)) return false;
    return true;
  };
  for (int k = 2; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::uint64_t set = 0;
      for (int i : idx) set |= std::uint64_t{1} << i;
      if (dominates_all(set)) {
        DominationResult r;
        r.value = k;
        r.witness = VertexSet(n);
        for (int i : idx) r.witness.add(i);
        return r;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return infeasible_result(n);  // unreachable: V itself dominates when no vertex is isolated
}

}  // namespace tdc
