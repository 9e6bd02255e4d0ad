#pragma once
// bb_solver.hpp - internal branch-and-bound kernels for total domination.
//
// Branching rule: take the undominated vertex with the fewest remaining
// candidate dominators (lowest id on ties) and branch on which of its
// neighbors enters the set; neighbors already branched over at the same node
// are forbidden further down, so the subtrees partition the solution space.
// The incumbent is seeded by a greedy max-coverage pass and nodes are cut
// when |partial| + ceil(undominated / max_degree) cannot beat it.

#include <bit>
#include <cstdint>
#include <vector>

namespace tdc::detail {

// Fast path for graphs on at most 64 vertices; one word per neighbor mask.
// Caller must ensure n >= 1 and that no vertex is isolated.
class PackedBB {
public:
  void load(const std::uint64_t* adj, int n) {
    load(adj, n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  // Restrict the instance to the vertices of `active`: rows outside it are
  // dropped and rows inside are masked to it. Used for vertex deletions
  // without relabeling.
  void load(const std::uint64_t* adj, int n, std::uint64_t active) {
    n_ = n;
    full_ = active;
    maxdeg_ = 1;
    for (int v = 0; v < n; ++v) {
      adj_[v] = ((active >> v) & 1) ? adj[v] & active : 0;
      maxdeg_ = std::max(maxdeg_, std::popcount(adj_[v]));
    }
  }

  // Exact total domination number when it is <= cap, else cap + 1.
  // witness_out is filled only when the returned value is <= cap.
  int solve(int cap, std::uint64_t* witness_out = nullptr) {
    best_ = cap + 1;
    best_set_ = 0;
    std::uint64_t greedy_set = 0, dominated = 0;
    int greedy_size = 0;
    while (dominated != full_) {
      int pick = -1, cover = 0;
      for (int v = 0; v < n_; ++v) {
        int c = std::popcount(adj_[v] & ~dominated);
        if (c > cover) {
          cover = c;
          pick = v;
        }
      }
      if (pick < 0) {  // some vertex cannot be dominated at all
        greedy_size = best_;
        break;
      }
      greedy_set |= std::uint64_t{1} << pick;
      dominated |= adj_[pick];
      ++greedy_size;
    }
    if (greedy_size < best_) {
      best_ = greedy_size;
      best_set_ = greedy_set;
    }
    dfs(0, 0, 0, 0);
    if (witness_out && best_ <= cap) *witness_out = best_set_;
    return best_;
  }

private:
  void dfs(std::uint64_t chosen, std::uint64_t dominated, std::uint64_t forbidden, int size) {
    if (dominated == full_) {
      if (size < best_) {
        best_ = size;
        best_set_ = chosen;
      }
      return;
    }
    std::uint64_t und = full_ & ~dominated;
    if (size + (std::popcount(und) + maxdeg_ - 1) / maxdeg_ >= best_) return;
    int pick = -1, fewest = 65;
    for (std::uint64_t m = und; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int c = std::popcount(adj_[v] & ~forbidden);
      if (c == 0) return;  // v can no longer be dominated
      if (c < fewest) {
        fewest = c;
        pick = v;
      }
    }
    std::uint64_t cands = adj_[pick] & ~forbidden;
    for (std::uint64_t m = cands; m; m &= m - 1) {
      int c = std::countr_zero(m);
      dfs(chosen | (std::uint64_t{1} << c), dominated | adj_[c], forbidden, size + 1);
      forbidden |= std::uint64_t{1} << c;
    }
  }

  int n_ = 0;
  int maxdeg_ = 1;
  std::uint64_t full_ = 0;
  std::uint64_t adj_[64];
  std::uint64_t best_set_ = 0;
  int best_ = 0;
};

// Same algorithm over multi-word masks, for orders above 64. Cold path; the
// mask copies allocate and that is fine here.
class WideBB {
public:
  using Mask = std::vector<std::uint64_t>;

  void load(std::vector<Mask> adj, int n) {
    adj_ = std::move(adj);
    n_ = n;
    words_ = int(adj_.empty() ? 0 : adj_[0].size());
    full_.assign(words_, ~std::uint64_t{0});
    if (n % 64 != 0) full_[n / 64] = (std::uint64_t{1} << (n % 64)) - 1;
    for (int k = n / 64 + 1; k < words_; ++k) full_[k] = 0;
    maxdeg_ = 1;
    for (const auto& row : adj_) maxdeg_ = std::max(maxdeg_, popcount(row));
  }

  int solve(int cap, Mask* witness_out = nullptr) {
    best_ = cap + 1;
    best_set_.assign(words_, 0);
    Mask greedy_set(words_, 0), dominated(words_, 0);
    int greedy_size = 0;
    while (dominated != full_) {
      int pick = -1, cover = 0;
      for (int v = 0; v < n_; ++v) {
        int c = uncovered(adj_[v], dominated);
        if (c > cover) {
          cover = c;
          pick = v;
        }
      }
      if (pick < 0) {
        greedy_size = best_;
        break;
      }
      set_bit(greedy_set, pick);
      or_into(dominated, adj_[pick]);
      ++greedy_size;
    }
    if (greedy_size < best_) {
      best_ = greedy_size;
      best_set_ = greedy_set;
    }
    Mask zero(words_, 0);
    dfs(zero, zero, zero, 0);
    if (witness_out && best_ <= cap) *witness_out = best_set_;
    return best_;
  }

private:
  static int popcount(const Mask& m) {
    int c = 0;
    for (auto w : m) c += std::popcount(w);
    return c;
  }
  static void set_bit(Mask& m, int v) { m[v >> 6] |= std::uint64_t{1} << (v & 63); }
  static void or_into(Mask& m, const Mask& o) {
    for (size_t i = 0; i < m.size(); ++i) m[i] |= o[i];
  }
  static int uncovered(const Mask& row, const Mask& dominated) {
    int c = 0;
    for (size_t i = 0; i < row.size(); ++i) c += std::popcount(row[i] & ~dominated[i]);
    return c;
  }

  void dfs(const Mask& chosen, const Mask& dominated, Mask forbidden, int size) {
    if (dominated == full_) {
      if (size < best_) {
        best_ = size;
        best_set_ = chosen;
      }
      return;
    }
    int undom = 0;
    for (int k = 0; k < words_; ++k) undom += std::popcount(full_[k] & ~dominated[k]);
    if (size + (undom + maxdeg_ - 1) / maxdeg_ >= best_) return;
    int pick = -1, fewest = n_ + 1;
    for (int v = 0; v < n_; ++v) {
      if ((dominated[v >> 6] >> (v & 63)) & 1) continue;
      int c = uncovered(adj_[v], forbidden);
      if (c == 0) return;
      if (c < fewest) {
        fewest = c;
        pick = v;
      }
    }
    for (int k = 0; k < words_; ++k) {
      for (std::uint64_t m = adj_[pick][k] & ~forbidden[k]; m; m &= m - 1) {
        int c = k * 64 + std::countr_zero(m);
        Mask next_chosen = chosen, next_dominated = dominated;
        set_bit(next_chosen, c);
        or_into(next_dominated, adj_[c]);
        dfs(next_chosen, next_dominated, forbidden, size + 1);
        forbidden[c >> 6] |= std::uint64_t{1} << (c & 63);
      }
    }
  }

  std::vector<Mask> adj_;
  Mask full_, best_set_;
  int n_ = 0, words_ = 0, maxdeg_ = 1, best_ = 0;
};

}  // namespace tdc::detail
