#pragma once
// search.hpp - exhaustive searches for m-gamma_t-critical graphs of extremal
// order (order = delta + m, max degree delta, min degree >= 2).
//
// structured_search enumerates only graphs matching the known residual
// skeleton around a max-degree hub v: the outside V - N[v] is a path
// u1-u2-u3 with N(u2) and N(v) disjoint when m = 4, or (m-1)/2 disjoint
// edges u_i w_i when m is odd; N(v) splits into one nonempty block per
// outside anchor, every N(v) vertex having exactly one outside neighbor.
// Free choice is limited to edges inside N(v), enumerated as bit masks over
// the C(delta,2) slots, block sizes running over compositions of delta in
// lexicographic order quotiented by the block symmetries.
//
// exhaustive_search_all_graphs is the structure-free cross-check: every
// labeled graph on n vertices, filtered to min degree >= 2, max degree
// n - m, gamma_t = m, critical.

#include <optional>
#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

struct SearchOptions {
  int order_cap = 13;          // structured_search refuses m + delta above this
  std::optional<long> budget;  // stop after this many candidates
  bool prune = true;           // structured_search candidate pruning on/off
  int workers = 1;             // threads over the edge-mask space
};

struct SearchOutcome {
  int m = 0;
  int delta = 0;
  std::vector<Graph> found;  // one representative per isomorphism class,
                             // sorted by canonical form
  long nodes_explored = 0;
  bool exhausted = true;  // false only when the budget cut the run short
};

SearchOutcome structured_search(int m, int delta, const SearchOptions& opts = {});

SearchOutcome exhaustive_search_all_graphs(int n, int m, const SearchOptions& opts = {});

}  // namespace tdc
