#include "tdc/criticality.hpp"

#include <stdexcept>

namespace tdc {

namespace {

void reject_degenerate(const Graph& g, const char* who) {
  if (g.order() == 0) throw std::invalid_argument(std::string(who) + ": empty graph");
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument(std::string(who) + ": isolated vertex " + std::to_string(v));
}

}  // namespace

CriticalityReport is_gamma_t_critical(const Graph& g) {
  reject_degenerate(g, "is_gamma_t_critical");
  CriticalityReport rep;
  rep.gamma_t = total_domination_number(g).value;
  rep.supports = support_vertices(g);
  rep.verdict = Verdict::critical;
  for (int v = 0; v < g.order(); ++v) {
    if (rep.supports.contains(v)) continue;
    int residual = total_domination_number(delete_vertex(g, v)).value;
    rep.residual_values.emplace_back(v, residual);
    if (residual >= rep.gamma_t && rep.verdict == Verdict::critical) {
      rep.verdict = Verdict::not_critical;
      rep.witness_vertex = v;
    }
  }
  rep.vacuous = rep.residual_values.empty();
  return rep;
}

std::optional<std::pair<int, int>> lemma2_noncritical_witness(const Graph& g) {
  VertexSet supports = support_vertices(g);
  for (int u = 0; u < g.order(); ++u) {
    VertexSet nu = g.neighbors(u);
    for (int v = 0; v < g.order(); ++v) {
      if (u == v || g.has_edge(u, v) || supports.contains(v)) continue;
      if (nu.is_subset_of(g.neighbors(v))) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

ResidualStructure residual_structure(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("residual_structure: empty graph");
  ResidualStructure rs;
  int maxdeg = g.max_degree();
  rs.center = 0;
  while (g.degree(rs.center) != maxdeg) ++rs.center;
  VertexSet outside = g.closed_neighborhood(rs.center).complement();
  std::vector<int> ids = outside.to_vector();
  for (const auto& comp : connected_components(induced_subgraph(g, outside))) {
    std::vector<int> named;
    for (int local : comp) named.push_back(ids[local]);
    rs.components.push_back(std::move(named));
  }
  bool all_p2 = !rs.components.empty();
  for (const auto& comp : rs.components)
    if (comp.size() != 2) all_p2 = false;
  if (all_p2) {
    rs.classification = ResidualClass::AllP2;
  } else if (rs.components.size() == 1 && rs.components[0].size() == 3) {
    const auto& c = rs.components[0];
    int edges = int(g.has_edge(c[0], c[1])) + int(g.has_edge(c[0], c[2])) + int(g.has_edge(c[1], c[2]));
    rs.classification = edges == 2 ? ResidualClass::SingleP3 : ResidualClass::Other;
  } else {
    rs.classification = ResidualClass::Other;
  }
  return rs;
}

bool check_structure_lemma(const Graph& g) {
  reject_degenerate(g, "check_structure_lemma");
  if (g.min_degree() < 2)
    throw std::invalid_argument("check_structure_lemma: min degree below 2");
  CriticalityReport rep = is_gamma_t_critical(g);
  if (rep.verdict != Verdict::critical)
    throw std::invalid_argument("check_structure_lemma: graph is not gamma_t-critical");
  if (rep.gamma_t != g.order() - g.max_degree())
    throw std::invalid_argument("check_structure_lemma: gamma_t is not order minus max degree");

  ResidualStructure rs = residual_structure(g);
  VertexSet nv = g.neighbors(rs.center);
  VertexSet outside = g.closed_neighborhood(rs.center).complement();

  auto block = [&](int anchor, int partner) {
    VertexSet b = g.neighbors(anchor);
    b.remove(partner);
    return b;
  };
  auto covers_nv_once = [&](const std::vector<VertexSet>& blocks) {
    VertexSet seen(g.order());
    for (const auto& b : blocks) {
      if (b.empty() || !b.is_subset_of(nv) || b.intersects(seen)) return false;
      seen |= b;
    }
    return seen == nv;
  };

  if (rs.classification == ResidualClass::AllP2) {
    std::vector<VertexSet> blocks;
    for (const auto& comp : rs.components) {
      blocks.push_back(block(comp[0], comp[1]));
      blocks.push_back(block(comp[1], comp[0]));
    }
    if (!covers_nv_once(blocks)) return false;
    // each N(center) vertex meets the outside exactly once
    for (int x : nv.to_vector()) {
      VertexSet hits = g.neighbors(x);
      hits &= outside;
      if (hits.count() != 1) return false;
    }
    return true;
  }
  if (rs.classification == ResidualClass::SingleP3) {
    const auto& c = rs.components[0];
    int middle = -1;
    for (int x : c)
      if (g.has_edge(x, c[0]) + g.has_edge(x, c[1]) + g.has_edge(x, c[2]) == 2) middle = x;
    std::vector<int> ends;
    for (int x : c)
      if (x != middle) ends.push_back(x);
    if (g.neighbors(middle).intersects(nv)) return false;
    return covers_nv_once({block(ends[0], middle), block(ends[1], middle)});
  }
  return false;
}

}  // namespace tdc
