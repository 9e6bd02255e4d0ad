#pragma once
// families.hpp - constructions of vertex-critical total domination graphs of
// extremal order (order = max_degree + gamma_t), plus the existence oracle
// over the (m, delta) parameter grid.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

enum class FamilyKind {
  FourCriticalEvenDelta,  // "four-even"
  ThreeCriticalBlock,     // "three-block"
  MCriticalEvenDelta,     // "m-even"
  FourCriticalOddDelta,   // "four-odd"
  NineCriticalOddDelta,   // "nine-odd"
  MCriticalOddM,          // "m-odd"
};

struct FamilySpec {
  FamilyKind kind;
  int m = 0;      // requested gamma_t (for three-block the achieved gamma_t is 3)
  int delta = 0;  // requested max degree knob
  int gamma_t = 0;
  int order = 0;
  int max_degree = 0;
};

std::string family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);

// Validates parameters; throws std::invalid_argument naming the violated
// constraint. Fixed-m kinds (four-even, four-odd, nine-odd) require the
// matching m.
FamilySpec make_family_spec(FamilyKind kind, int m, int delta);
Graph build_family(const FamilySpec& spec);

// Part sizes of the construction, for reporting.
std::vector<std::pair<std::string, int>> derived_sizes(const FamilySpec& spec);

// Labeling (all builders): the max-degree hub is vertex 0 and part vertices
// follow in the documented group order, so graph6 output is byte-stable.

// hub v=0; U=1..d/2; W=d/2+1..d; then u1,u2,u3 with the path u1-u2-u3,
// u1 over U, u3 over W, and K_{U,W} minus the aligned matching.
Graph build_four_critical_even_delta(int delta);  // delta even >= 2

// hub v=0; U=1..a; W=a+1..2a with a=(delta-m+3)/2; then u1,w1 adjacent,
// u1 over U, w1 over W, K_{U,W} minus matching. 3-critical of order
// delta-m+6 and max degree delta-m+3.
Graph build_three_critical_block(int m, int delta);  // m odd >= 3, delta even >= m-1

// three-block(m, delta) with (m-3)/2 five-cycles amalgamated at the hub.
Graph build_m_critical_even_delta(int m, int delta);  // m odd >= 3, delta even >= m-1

// hub v=0; x1,x2,x3=1..3; groups H1 (size 2), H2, H3 (size (delta-5)/2 each)
// follow; then u, z, w. Edges: y_{aj} y_{bk} for a != b, j != k; x_i joined
// to H_j for j != i; v over x's and all groups; u over the x's; w over the
// groups; path u-z-w.
Graph build_four_critical_odd_delta(int delta);  // delta odd >= 9

// hub v=0; four blocks U_i, W_i with pairs u_i, w_i: ids x1,y1,u1,w1 = 1..4,
// x2,y2,u2,w2 = 5..8, x31,x32,y3,u3,w3 = 9..13, then U4 (size (delta-7)/2),
// W4, u4, w4. Edges: v over all U_i, W_i; u_i over U_i, w_i over W_i, pair
// edges u_i w_i; x31 picks up x1,y1 and x32 picks up x2,y2; y3 over U4 and
// W4; K_{U4,W4} minus the aligned matching.
Graph build_nine_critical_odd_delta(int delta);  // delta odd >= 9

// nine-odd(delta-(m-9)) with (m-9)/2 five-cycles amalgamated at the hub.
// For m = 9 this is vertex-for-vertex build_nine_critical_odd_delta(delta).
Graph build_m_critical_odd_m(int m, int delta);  // m odd >= 9, delta odd >= m

// The documented minimum total dominating set of nine-odd(delta):
// {u_1, w_1, u_2, w_2, u_4, w_4, v, x31, u_3}.
VertexSet nine_critical_reference_witness(int delta);
// Pair heads u_1..u_4 of nine-odd(delta), ascending.
std::vector<int> nine_critical_pair_heads(int delta);

enum class Existence { Exists, NotExists, Open };

struct ExistenceVerdict {
  Existence status;
  std::string authority;  // theorem tag backing the verdict
  std::optional<FamilySpec> construction;  // in-repo witness when buildable
  bool external = false;  // witness exists in the literature ([CS]) only
};

// Does an m-gamma_t-critical graph of order delta + m with max degree delta
// and min degree >= 2 exist? Complete decision table over m >= 3, delta >= 2;
// Open is returned where the question is unsettled.
ExistenceVerdict existence(int m, int delta);

std::string existence_status_name(Existence e);

}  // namespace tdc
