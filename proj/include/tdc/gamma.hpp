#pragma once
// gamma.hpp - exact total domination number. A set S totally dominates when
// every vertex of the graph, members of S included, has a neighbor in S.

#include <limits>

#include "tdc/graph.hpp"

namespace tdc {

struct DominationResult {
  // Infeasible (isolated vertex or empty graph) sorts above every finite
  // value, so comparisons against real numbers come out false on their own.
  static constexpr int kInfeasible = std::numeric_limits<int>::max();

  int value = kInfeasible;
  VertexSet witness;  // a minimum total dominating set when feasible

  bool feasible() const { return value != kInfeasible; }
};

bool is_total_dominating_set(const Graph& g, const VertexSet& s);

// Exact branch-and-bound solver. Deterministic: witness ties are broken by
// greedy max-coverage seeding and lowest-id branching.
DominationResult total_domination_number(const Graph& g);

// Reference oracle: subsets by increasing cardinality, lexicographic within a
// cardinality. Only for n <= 20; kept independent of the solver above.
DominationResult brute_force_gamma_t(const Graph& g);

}  // namespace tdc
