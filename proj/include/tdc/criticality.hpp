#pragma once
// criticality.hpp - vertex criticality of the total domination number: does
// deleting any vertex not adjacent to a leaf strictly drop gamma_t?

#include <optional>
#include <utility>
#include <vector>

#include "tdc/gamma.hpp"
#include "tdc/graph.hpp"

namespace tdc {

enum class Verdict { critical, not_critical };

struct CriticalityReport {
  int gamma_t = DominationResult::kInfeasible;
  VertexSet supports;  // vertices adjacent to a leaf; deletion exempt
  // (v, gamma_t(g - v)) for every non-support v, ascending by v.
  std::vector<std::pair<int, int>> residual_values;
  Verdict verdict = Verdict::not_critical;
  int witness_vertex = -1;  // first v whose deletion fails to drop gamma_t
  // True when every vertex is a support (e.g. a single edge), so the
  // deletion quantifier ranges over nothing and the verdict holds trivially.
  bool vacuous = false;
};

// Throws std::invalid_argument on an empty graph or an isolated vertex.
CriticalityReport is_gamma_t_critical(const Graph& g);

// First (u, v) in lexicographic order with u, v nonadjacent, v not a support
// and N(u) contained in N(v). Such a pair certifies the graph is not
// gamma_t-critical.
std::optional<std::pair<int, int>> lemma2_noncritical_witness(const Graph& g);

enum class ResidualClass { AllP2, SingleP3, Other };

struct ResidualStructure {
  int center;  // lowest-id vertex of maximum degree
  // Components of the subgraph induced outside N[center], original ids.
  std::vector<std::vector<int>> components;
  ResidualClass classification;
};

ResidualStructure residual_structure(const Graph& g);  // pre: n >= 1

// For a critical graph with gamma_t = n - max_degree and min degree >= 2,
// checks the structural consequences at the residual_structure center:
// either every outside component is a P2 and the sets N(u)-w, N(w)-u over
// the outside pairs {u,w} partition N(center) into nonempty parts with each
// N(center) vertex having exactly one outside neighbor, or the outside is a
// single path u1-u2-u3 with N(u2) disjoint from N(center) and N(u1)-u2,
// N(u3)-u2 partitioning N(center) into nonempty parts.
// Throws std::invalid_argument when the precondition fails; returns false
// only when the precondition holds but the structure does not.
bool check_structure_lemma(const Graph& g);

}  // namespace tdc
