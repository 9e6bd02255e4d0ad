#include "tdc/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "tdc/graph6.hpp"

namespace tdc {

namespace {

// Individualization-refinement search for the lex-least adjacency code.
// Orderings are grown by splitting the first non-singleton cell of the
// refined partition; automorphisms discovered at equal-code leaves prune
// sibling branches that only permute an orbit.
class CanonSearch {
public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {
    adj_.resize(n_);
    for (int v = 0; v < n_; ++v) adj_[v] = g.row64(v);
  }

  std::string run() {
    if (n_ == 0) return to_graph6(g_);
    std::vector<std::uint64_t> cells{n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1};
    dfs(cells);
    Graph h(n_);
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i)
        if (best_code_[size_t(j) * (j - 1) / 2 + i] == '1') h.add_edge(i, j);
    return to_graph6(h);
  }

private:
  static constexpr long kLeafLimit = 5'000'000;

  void refine(std::vector<std::uint64_t>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t si = 0; si < cells.size() && !changed; ++si) {
        std::uint64_t splitter = cells[si];
        for (size_t ci = 0; ci < cells.size(); ++ci) {
          std::uint64_t cell = cells[ci];
          if (std::popcount(cell) < 2) continue;
          // bucket members by neighbor count into the splitter
          int counts[64];
          int distinct_lo = 64, distinct_hi = 0;
          for (std::uint64_t m = cell; m; m &= m - 1) {
            int v = std::countr_zero(m);
            counts[v] = std::popcount(adj_[v] & splitter);
            distinct_lo = std::min(distinct_lo, counts[v]);
            distinct_hi = std::max(distinct_hi, counts[v]);
          }
          if (distinct_lo == distinct_hi) continue;
          std::vector<std::uint64_t> sub;
          for (int c = distinct_lo; c <= distinct_hi; ++c) {
            std::uint64_t part = 0;
            for (std::uint64_t m = cell; m; m &= m - 1) {
              int v = std::countr_zero(m);
              if (counts[v] == c) part |= std::uint64_t{1} << v;
            }
            if (part) sub.push_back(part);
          }
          cells.erase(cells.begin() + long(ci));
          cells.insert(cells.begin() + long(ci), sub.begin(), sub.end());
          changed = true;
          break;
        }
      }
    }
  }

  // Code over the ordering prefix: column-order upper-triangle bits as '0'/'1'.
  std::string prefix_code(const std::vector<int>& order) const {
    std::string code;
    code.reserve(order.size() * (order.size() - 1) / 2);
    for (size_t j = 1; j < order.size(); ++j)
      for (size_t i = 0; i < j; ++i)
        code.push_back((adj_[order[i]] >> order[j]) & 1 ? '1' : '0');
    return code;
  }

  void dfs(std::vector<std::uint64_t> cells) {
    refine(cells);
    std::vector<int> order;
    size_t k = 0;
    while (k < cells.size() && std::popcount(cells[k]) == 1) order.push_back(std::countr_zero(cells[k++]));
    std::string partial = prefix_code(order);
    if (have_best_ && partial.compare(0, partial.size(), best_code_, 0, partial.size()) > 0) return;

    if (k == cells.size()) {  // discrete partition: complete ordering
      if (++leaves_ > kLeafLimit) throw std::runtime_error("canonical_form: search limit exceeded");
      if (!have_best_ || partial < best_code_) {
        best_code_ = partial;
        best_order_ = order;
        have_best_ = true;
      } else if (partial == best_code_) {
        std::vector<int> pi(n_);
        for (int p = 0; p < n_; ++p) pi[best_order_[p]] = order[p];
        if (autos_.size() < 64) autos_.push_back(std::move(pi));
      }
      return;
    }

    std::uint64_t target = cells[k];
    std::uint64_t tried = 0;
    for (std::uint64_t m = target; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (tried && in_orbit_of_tried(v, tried, cells)) continue;
      std::vector<std::uint64_t> child = cells;
      child[k] = std::uint64_t{1} << v;
      child.insert(child.begin() + long(k) + 1, target & ~(std::uint64_t{1} << v));
      dfs(std::move(child));
      tried |= std::uint64_t{1} << v;
    }
  }

  // True when some stored automorphism product maps a tried vertex to v while
  // preserving every cell of the current partition setwise.
  bool in_orbit_of_tried(int v, std::uint64_t tried, const std::vector<std::uint64_t>& cells) {
    std::vector<int> uf(n_);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (const auto& pi : autos_) {
      bool ok = true;
      for (std::uint64_t cell : cells) {
        std::uint64_t image = 0;
        for (std::uint64_t m = cell; m; m &= m - 1) image |= std::uint64_t{1} << pi[std::countr_zero(m)];
        if (image != cell) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(pi[x]);
        if (a != b) uf[a] = b;
      }
    }
    int rv = find(v);
    for (std::uint64_t m = tried; m; m &= m - 1)
      if (find(std::countr_zero(m)) == rv) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> adj_;
  std::string best_code_;
  std::vector<int> best_order_;
  bool have_best_ = false;
  std::vector<std::vector<int>> autos_;
  long leaves_ = 0;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > 64) throw std::invalid_argument("canonical_form: order above 64 unsupported");
  return CanonSearch(g).run();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace tdc
