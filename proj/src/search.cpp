#include "tdc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "bb_solver.hpp"
#include "tdc/canonical.hpp"

namespace tdc {

namespace {

struct Slot {
  int p, q;
};

// Candidate tests over packed rows. Callers guarantee n <= 64.

bool degrees_ok(const std::uint64_t* adj, int n, int delta) {
  for (int v = 0; v < n; ++v) {
    int d = std::popcount(adj[v]);
    if (d < 2 || d > delta) return false;
  }
  return true;
}

bool packed_connected(const std::uint64_t* adj, int n) {
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t comp = 1, prev = 0;
  while (comp != prev) {
    prev = comp;
    std::uint64_t acc = comp;
    for (std::uint64_t m = comp; m; m &= m - 1) acc |= adj[std::countr_zero(m)];
    comp = acc;
  }
  return comp == full;
}

// Nonadjacent u, v with N(u) inside N(v). Only called once min degree >= 2
// held, so there are no support vertices to exempt.
bool packed_lemma2_witness(const std::uint64_t* adj, int n) {
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || ((adj[u] >> v) & 1)) continue;
      if (!(adj[u] & ~adj[v])) return true;
    }
  return false;
}

// gamma_t(G) == m and every single-vertex deletion admits a total dominating
// set smaller than m. With min degree >= 2 no deletion isolates a vertex, so
// this is exactly m-gamma_t-criticality.
bool is_m_critical_packed(const std::uint64_t* adj, int n, int m, detail::PackedBB& bb) {
  bb.load(adj, n);
  if (bb.solve(m) != m) return false;
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int x = 0; x < n; ++x) {
    bb.load(adj, n, full & ~(std::uint64_t{1} << x));
    if (bb.solve(m - 1) > m - 1) return false;
  }
  return true;
}

Graph rows_to_graph(const std::uint64_t* adj, int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((adj[a] >> b) & 1) g.add_edge(a, b);
  return g;
}

// Isomorphism-class accumulator; keeps the first representative seen.
struct FoundSet {
  std::vector<std::string> forms;
  std::vector<Graph> graphs;

  void add(const Graph& g) {
    std::string c = canonical_form(g);
    for (const auto& f : forms)
      if (f == c) return;
    forms.push_back(std::move(c));
    graphs.push_back(g);
  }

  void merge_into(SearchOutcome& out, std::vector<std::string>& out_forms) {
    for (size_t i = 0; i < forms.size(); ++i) {
      bool dup = false;
      for (const auto& f : out_forms)
        if (f == forms[i]) dup = true;
      if (dup) continue;
      out_forms.push_back(forms[i]);
      out.found.push_back(graphs[i]);
    }
  }
};

void sort_by_form(SearchOutcome& out, std::vector<std::string>& forms) {
  std::vector<size_t> idx(forms.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return forms[a] < forms[b]; });
  std::vector<Graph> sorted;
  sorted.reserve(idx.size());
  for (size_t i : idx) sorted.push_back(out.found[i]);
  out.found = std::move(sorted);
}

// Positive block sizes summing to delta, lexicographic, quotiented by the
// skeleton symmetries: the two blocks of an outside pair may swap, and whole
// pairs may permute, so each pair is kept sorted and the pair list kept
// lexicographically nondecreasing.
std::vector<std::vector<int>> block_compositions(int m, int delta) {
  int len = m == 4 ? 2 : m - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len);
  auto admissible = [&]() {
    for (int i = 0; i + 1 < len; i += 2)
      if (cur[i] > cur[i + 1]) return false;
    for (int i = 2; i + 1 < len; i += 2) {
      if (cur[i - 2] > cur[i]) return false;
      if (cur[i - 2] == cur[i] && cur[i - 1] > cur[i + 1]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == len) {
      if (left == 0 && admissible()) out.push_back(cur);
      return;
    }
    for (int take = 1; take <= left - (len - pos - 1); ++take) {
      cur[pos] = take;
      self(self, pos + 1, left - take);
    }
  };
  if (len <= delta) rec(rec, 0, delta);
  return out;
}

// Forced adjacency for one composition: hub 0 over N(v) = 1..delta, blocks
// consecutive, each wired to its outside anchor, outside path or pair edges.
std::vector<std::uint64_t> make_skeleton(int m, int delta, const std::vector<int>& blocks) {
  int n = m + delta;
  std::vector<std::uint64_t> adj(n, 0);
  auto add = [&](int a, int b) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  };
  for (int x = 1; x <= delta; ++x) add(0, x);
  int start = 1;
  if (m == 4) {
    int u1 = delta + 1, u2 = delta + 2, u3 = delta + 3;
    add(u1, u2);
    add(u2, u3);
    for (int anchor : {u1, u3}) {
      int size = blocks[anchor == u1 ? 0 : 1];
      for (int k = 0; k < size; ++k) add(anchor, start + k);
      start += size;
    }
  } else {
    for (int i = 0; i < (m - 1) / 2; ++i) {
      int u = delta + 2 * i + 1, w = delta + 2 * i + 2;
      add(u, w);
      for (int k = 0; k < blocks[2 * i]; ++k) add(u, start + k);
      start += blocks[2 * i];
      for (int k = 0; k < blocks[2 * i + 1]; ++k) add(w, start + k);
      start += blocks[2 * i + 1];
    }
  }
  return adj;
}

struct Shard {
  size_t comp;
  std::uint64_t lo, hi;
};

struct ShardResult {
  FoundSet found;
  long nodes = 0;
  bool aborted = false;
};

template <class Body>
SearchOutcome run_sharded(SearchOutcome out, const std::vector<Shard>& shards,
                          const SearchOptions& opts, Body&& body) {
  std::vector<ShardResult> results(shards.size());
  std::atomic<size_t> next{0};
  std::atomic<long> used{0};
  auto worker = [&] {
    detail::PackedBB bb;
    for (;;) {
      size_t id = next.fetch_add(1);
      if (id >= shards.size()) return;
      body(shards[id], results[id], bb, used);
    }
  };
  int nthreads = std::max(1, opts.workers);
  nthreads = int(std::min<size_t>(nthreads, shards.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<std::string> forms;
  for (auto& r : results) {
    out.nodes_explored += r.nodes;
    if (r.aborted) out.exhausted = false;
    r.found.merge_into(out, forms);
  }
  sort_by_form(out, forms);
  return out;
}

std::vector<Shard> make_shards(size_t comps, std::uint64_t space, int workers) {
  std::uint64_t chunks = std::max(1, workers * 4);
  std::uint64_t step = std::max<std::uint64_t>(1, space / chunks);
  std::vector<Shard> shards;
  for (size_t c = 0; c < comps; ++c)
    for (std::uint64_t lo = 0; lo < space; lo += step)
      shards.push_back({c, lo, std::min(lo + step, space)});
  return shards;
}

}  // namespace

SearchOutcome structured_search(int m, int delta, const SearchOptions& opts) {
  if (!(m == 4 || (m >= 3 && m % 2 == 1)))
    throw std::invalid_argument("structured_search: m must be 4 or odd >= 3");
  if (delta < 2) throw std::invalid_argument("structured_search: delta must be >= 2");
  if (m + delta > opts.order_cap)
    throw std::invalid_argument("structured_search: order " + std::to_string(m + delta) +
                                " above cap " + std::to_string(opts.order_cap));

  SearchOutcome out;
  out.m = m;
  out.delta = delta;
  int n = m + delta;

  auto comps = block_compositions(m, delta);
  std::vector<Slot> slots;
  for (int q = 2; q <= delta; ++q)
    for (int p = 1; p < q; ++p) slots.push_back({p, q});
  std::uint64_t space = std::uint64_t{1} << slots.size();

  std::vector<std::uint64_t> skeletons;  // comps.size() x n rows
  for (const auto& blocks : comps) {
    auto sk = make_skeleton(m, delta, blocks);
    skeletons.insert(skeletons.end(), sk.begin(), sk.end());
  }

  auto body = [&](const Shard& sh, ShardResult& res, detail::PackedBB& bb,
                  std::atomic<long>& used) {
    const std::uint64_t* skel = skeletons.data() + sh.comp * size_t(n);
    std::uint64_t adj[64];
    for (std::uint64_t mask = sh.lo; mask < sh.hi; ++mask) {
      if (opts.budget && used.fetch_add(1) >= *opts.budget) {
        res.aborted = true;
        return;
      }
      ++res.nodes;
      std::copy(skel, skel + n, adj);
      for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
        const Slot& sl = slots[std::countr_zero(bits)];
        adj[sl.p] |= std::uint64_t{1} << sl.q;
        adj[sl.q] |= std::uint64_t{1} << sl.p;
      }
      if (!degrees_ok(adj, n, delta)) continue;
      if (opts.prune && (!packed_connected(adj, n) || packed_lemma2_witness(adj, n))) continue;
      if (!is_m_critical_packed(adj, n, m, bb)) continue;
      res.found.add(rows_to_graph(adj, n));
    }
  };
  return run_sharded(std::move(out), make_shards(comps.size(), space, opts.workers), opts, body);
}

SearchOutcome exhaustive_search_all_graphs(int n, int m, const SearchOptions& opts) {
  if (n < 0 || n > 8)
    throw std::invalid_argument("exhaustive_search_all_graphs: n must be between 0 and 8");
  SearchOutcome out;
  out.m = m;
  out.delta = n - m;
  int dtarget = n - m;
  if (m < 2 || dtarget < 2) return out;  // min degree 2 forces max degree 2 and gamma_t 2

  std::vector<Slot> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  std::uint64_t space = std::uint64_t{1} << edges.size();

  auto body = [&](const Shard& sh, ShardResult& res, detail::PackedBB& bb,
                  std::atomic<long>& used) {
    std::uint64_t adj[8] = {};
    int deg[8] = {};
    int below = n, over = 0, at = 0;
    auto flip = [&](int e) {
      int a = edges[e].p, b = edges[e].q;
      bool adding = !((adj[a] >> b) & 1);
      for (int v : {a, b}) {
        if (deg[v] < 2) --below;
        if (deg[v] > dtarget) --over;
        if (deg[v] == dtarget) --at;
        deg[v] += adding ? 1 : -1;
        if (deg[v] < 2) ++below;
        if (deg[v] > dtarget) ++over;
        if (deg[v] == dtarget) ++at;
      }
      adj[a] ^= std::uint64_t{1} << b;
      adj[b] ^= std::uint64_t{1} << a;
    };
    // Gray code: mask(k) = k ^ (k >> 1); step k-1 -> k flips bit ctz(k).
    std::uint64_t start_mask = sh.lo ^ (sh.lo >> 1);
    for (std::uint64_t bits = start_mask; bits; bits &= bits - 1) flip(std::countr_zero(bits));
    for (std::uint64_t k = sh.lo;; ++k) {
      if (opts.budget && used.fetch_add(1) >= *opts.budget) {
        res.aborted = true;
        return;
      }
      ++res.nodes;
      if (below == 0 && over == 0 && at >= 1 && is_m_critical_packed(adj, n, m, bb))
        res.found.add(rows_to_graph(adj, n));
      if (k + 1 >= sh.hi) break;
      flip(std::countr_zero(k + 1));
    }
  };
  return run_sharded(std::move(out), make_shards(1, space, opts.workers), opts, body);
}

}  // namespace tdc
