#pragma once
// graph.hpp - labeled simple graphs over vertex ids 0..n-1, adjacency kept as
// per-vertex neighbor bitmasks (one 64-bit word per 64 vertices, so graphs up
// to 64 vertices run on the single-word fast path).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tdc {

// Set of vertex ids drawn from a fixed universe {0..n-1}.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet of(int universe, std::initializer_list<int> ids);

  int universe_size() const { return n_; }
  int count() const;
  bool empty() const;
  bool contains(int v) const;
  void add(int v);
  void remove(int v);

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet minus(const VertexSet& o) const;
  VertexSet complement() const;
  int first() const;  // lowest id, -1 when empty
  std::vector<int> to_vector() const;
  bool operator==(const VertexSet& o) const = default;

  std::span<const std::uint64_t> words() const { return w_; }

private:
  friend class Graph;
  void check_universe(const VertexSet& o) const;

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Simple undirected graph. Vertices are 0..n-1; edges are unordered pairs of
// distinct ids. Mutation is limited to add_edge so a fully built graph can be
// shared read-only across threads.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  long edge_count() const;
  bool has_edge(int a, int b) const;
  void add_edge(int a, int b);  // idempotent; rejects loops and bad ids
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;
  VertexSet neighbors(int v) const;
  VertexSet closed_neighborhood(int v) const;
  VertexSet vertices() const;  // the full universe

  bool packed() const { return n_ <= 64; }
  std::uint64_t row64(int v) const;  // packed() only
  std::span<const std::uint64_t> row(int v) const;

  bool operator==(const Graph& o) const = default;

  // Debug validator: adjacency symmetry and irreflexivity. Asserts.
  void check_consistency() const;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;  // n_ rows of words_ words
};

inline Graph empty_graph(int n) { return Graph(n); }

Graph cycle(int k);     // k >= 3
Graph path(int k);      // k >= 1
Graph complete(int k);  // k >= 1

// K_{a,a} minus a perfect matching: parts X = {0..a-1}, Y = {a..2a-1}, edge
// x_i y_j iff i != j. (a-1)-regular with a*(a-1) edges.
Graph complete_bipartite_minus_matching(int a);  // a >= 1

// Attach one leaf to every vertex; the leaf of vertex i gets id n + i.
Graph corona(const Graph& g);

// Identify v1 in g1 with v2 in g2. Relabeling: the amalgam vertex is 0, then
// the vertices of g1 - v1 in ascending order, then those of g2 - v2.
Graph vertex_amalgamation(const Graph& g1, int v1, const Graph& g2, int v2);

// Vertices adjacent to at least one leaf (degree-1 vertex).
VertexSet support_vertices(const Graph& g);

// Subgraph induced on s, vertices relabeled to 0..|s|-1 in ascending id order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// g minus one vertex, remaining ids shifted down to stay contiguous.
Graph delete_vertex(const Graph& g, int v);

// Components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace tdc
