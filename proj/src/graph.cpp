#include "tdc/graph.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace tdc {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void clear_tail(std::vector<std::uint64_t>& w, int n) {
  if (n % 64 != 0 && !w.empty()) w.back() &= (std::uint64_t{1} << (n % 64)) - 1;
}

}  // namespace

VertexSet::VertexSet(int universe) : n_(universe) {
  if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  w_.assign(words_for(universe), 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> ids) {
  VertexSet s(universe);
  for (int v : ids) s.add(v);
  return s;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= n_) return false;
  return (w_[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::add(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::add: id " + std::to_string(v));
  w_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::remove(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::remove: id " + std::to_string(v));
  w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::check_universe(const VertexSet& o) const {
  if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_universe(o);
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_universe(o);
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_universe(o);
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_universe(o);
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  check_universe(o);
  VertexSet r = *this;
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
  return r;
}

VertexSet VertexSet::complement() const {
  VertexSet r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
  clear_tail(r.w_, n_);
  return r;
}

int VertexSet::first() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (size_t i = 0; i < w_.size(); ++i)
    for (std::uint64_t w = w_[i]; w; w &= w - 1) out.push_back(int(i) * 64 + std::countr_zero(w));
  return out;
}

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  bits_.assign(size_t(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex id " + std::to_string(v));
}

long Graph::edge_count() const {
  long twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

bool Graph::has_edge(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  return (bits_[size_t(a) * words_ + (b >> 6)] >> (b & 63)) & 1;
}

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("Graph::add_edge: loop at " + std::to_string(a));
  bits_[size_t(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  bits_[size_t(b) * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int k = 0; k < words_; ++k) d += std::popcount(bits_[size_t(v) * words_ + k]);
  return d;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int m = degree(0);
  for (int v = 1; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  VertexSet s(n_);
  for (int k = 0; k < words_; ++k) s.w_[k] = bits_[size_t(v) * words_ + k];
  return s;
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = neighbors(v);
  s.add(v);
  return s;
}

VertexSet Graph::vertices() const {
  VertexSet s(n_);
  return s.complement();
}

std::uint64_t Graph::row64(int v) const {
  check_vertex(v);
  assert(packed());
  return bits_[v];
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return {bits_.data() + size_t(v) * words_, size_t(words_)};
}

void Graph::check_consistency() const {
  for (int a = 0; a < n_; ++a) {
    assert(((bits_[size_t(a) * words_ + (a >> 6)] >> (a & 63)) & 1) == 0);
    for (int b = a + 1; b < n_; ++b) assert(has_edge(a, b) == has_edge(b, a));
  }
}

Graph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

Graph path(int k) {
  if (k < 1) throw std::invalid_argument("path: need k >= 1");
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int k) {
  if (k < 1) throw std::invalid_argument("complete: need k >= 1");
  Graph g(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) g.add_edge(a, b);
  return g;
}

Graph complete_bipartite_minus_matching(int a) {
  if (a < 1) throw std::invalid_argument("complete_bipartite_minus_matching: need a >= 1");
  Graph g(2 * a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      if (i != j) g.add_edge(i, a + j);
  return g;
}

Graph corona(const Graph& g) {
  int n = g.order();
  Graph h(2 * n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b)
      if (g.has_edge(a, b)) h.add_edge(a, b);
    h.add_edge(a, n + a);
  }
  return h;
}

Graph vertex_amalgamation(const Graph& g1, int v1, const Graph& g2, int v2) {
  if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order())
    throw std::out_of_range("vertex_amalgamation: bad amalgam vertex");
  int n1 = g1.order(), n2 = g2.order();
  Graph h(n1 + n2 - 1);
  auto map1 = [&](int x) { return x == v1 ? 0 : 1 + x - (x > v1 ? 1 : 0); };
  auto map2 = [&](int y) { return y == v2 ? 0 : n1 + y - (y > v2 ? 1 : 0); };
  for (int a = 0; a < n1; ++a)
    for (int b = a + 1; b < n1; ++b)
      if (g1.has_edge(a, b)) h.add_edge(map1(a), map1(b));
  for (int a = 0; a < n2; ++a)
    for (int b = a + 1; b < n2; ++b)
      if (g2.has_edge(a, b)) h.add_edge(map2(a), map2(b));
  return h;
}

VertexSet support_vertices(const Graph& g) {
  VertexSet s(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) s.add(g.neighbors(v).first());
  return s;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe_size() != g.order()) throw std::invalid_argument("induced_subgraph: universe mismatch");
  std::vector<int> keep = s.to_vector();
  Graph h(int(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b)
      if (g.has_edge(keep[a], keep[b])) h.add_edge(int(a), int(b));
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("delete_vertex: bad vertex");
  int n = g.order();
  Graph h(n - 1);
  auto map = [&](int x) { return x - (x > v ? 1 : 0); };
  for (int a = 0; a < n; ++a) {
    if (a == v) continue;
    for (int b = a + 1; b < n; ++b)
      if (b != v && g.has_edge(a, b)) h.add_edge(map(a), map(b));
  }
  return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  VertexSet seen(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp(g.order());
    comp.add(v);
    for (;;) {
      VertexSet next = comp;
      for (int u : comp.to_vector()) next |= g.neighbors(u);
      if (next == comp) break;
      comp = next;
    }
    seen |= comp;
    comps.push_back(comp.to_vector());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace tdc
