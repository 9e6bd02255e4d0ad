#include "tdc/families.hpp"

#include <stdexcept>

namespace tdc {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Graph amalgamate_five_cycles(Graph g, int copies) {
  for (int k = 0; k < copies; ++k) g = vertex_amalgamation(g, 0, cycle(5), 0);
  return g;
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::FourCriticalEvenDelta: return "four-even";
    case FamilyKind::ThreeCriticalBlock: return "three-block";
    case FamilyKind::MCriticalEvenDelta: return "m-even";
    case FamilyKind::FourCriticalOddDelta: return "four-odd";
    case FamilyKind::NineCriticalOddDelta: return "nine-odd";
    case FamilyKind::MCriticalOddM: return "m-odd";
  }
  throw std::logic_error("family_name: bad kind");
}

std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (FamilyKind k : {FamilyKind::FourCriticalEvenDelta, FamilyKind::ThreeCriticalBlock,
                       FamilyKind::MCriticalEvenDelta, FamilyKind::FourCriticalOddDelta,
                       FamilyKind::NineCriticalOddDelta, FamilyKind::MCriticalOddM})
    if (family_name(k) == name) return k;
  return std::nullopt;
}

FamilySpec make_family_spec(FamilyKind kind, int m, int delta) {
  FamilySpec s;
  s.kind = kind;
  s.m = m;
  s.delta = delta;
  switch (kind) {
    case FamilyKind::FourCriticalEvenDelta:
      require(m == 4, "family four-even requires m = 4");
      require(delta >= 2 && delta % 2 == 0, "family four-even requires even delta >= 2");
      s.gamma_t = 4;
      s.order = delta + 4;
      s.max_degree = delta;
      break;
    case FamilyKind::ThreeCriticalBlock:
      require(m >= 3 && m % 2 == 1, "family three-block requires odd m >= 3");
      require(delta >= m - 1 && delta % 2 == 0, "family three-block requires even delta >= m-1");
      s.gamma_t = 3;
      s.order = delta - m + 6;
      s.max_degree = delta - m + 3;
      break;
    case FamilyKind::MCriticalEvenDelta:
      require(m >= 3 && m % 2 == 1, "family m-even requires odd m >= 3");
      require(delta >= m - 1 && delta % 2 == 0, "family m-even requires even delta >= m-1");
      s.gamma_t = m;
      s.order = delta + m;
      s.max_degree = delta;
      break;
    case FamilyKind::FourCriticalOddDelta:
      require(m == 4, "family four-odd requires m = 4");
      require(delta >= 9 && delta % 2 == 1, "family four-odd requires odd delta >= 9");
      s.gamma_t = 4;
      s.order = delta + 4;
      s.max_degree = delta;
      break;
    case FamilyKind::NineCriticalOddDelta:
      require(m == 9, "family nine-odd requires m = 9");
      require(delta >= 9 && delta % 2 == 1, "family nine-odd requires odd delta >= 9");
      s.gamma_t = 9;
      s.order = delta + 9;
      s.max_degree = delta;
      break;
    case FamilyKind::MCriticalOddM:
      require(m >= 9 && m % 2 == 1, "family m-odd requires odd m >= 9");
      require(delta >= m && delta % 2 == 1, "family m-odd requires odd delta >= m");
      s.gamma_t = m;
      s.order = delta + m;
      s.max_degree = delta;
      break;
  }
  return s;
}

Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::FourCriticalEvenDelta: return build_four_critical_even_delta(spec.delta);
    case FamilyKind::ThreeCriticalBlock: return build_three_critical_block(spec.m, spec.delta);
    case FamilyKind::MCriticalEvenDelta: return build_m_critical_even_delta(spec.m, spec.delta);
    case FamilyKind::FourCriticalOddDelta: return build_four_critical_odd_delta(spec.delta);
    case FamilyKind::NineCriticalOddDelta: return build_nine_critical_odd_delta(spec.delta);
    case FamilyKind::MCriticalOddM: return build_m_critical_odd_m(spec.m, spec.delta);
  }
  throw std::logic_error("build_family: bad kind");
}

std::vector<std::pair<std::string, int>> derived_sizes(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::FourCriticalEvenDelta:
      return {{"U", spec.delta / 2}, {"W", spec.delta / 2}};
    case FamilyKind::ThreeCriticalBlock:
      return {{"U1", (spec.delta - spec.m + 3) / 2}, {"W1", (spec.delta - spec.m + 3) / 2}};
    case FamilyKind::MCriticalEvenDelta:
      return {{"U1", (spec.delta - spec.m + 3) / 2},
              {"W1", (spec.delta - spec.m + 3) / 2},
              {"five_cycles", (spec.m - 3) / 2}};
    case FamilyKind::FourCriticalOddDelta:
      return {{"H1", 2}, {"H2", (spec.delta - 5) / 2}, {"H3", (spec.delta - 5) / 2}};
    case FamilyKind::NineCriticalOddDelta:
      return {{"U4", (spec.delta - 7) / 2}, {"W4", (spec.delta - 7) / 2}};
    case FamilyKind::MCriticalOddM: {
      int inner = spec.delta - (spec.m - 9);
      return {{"U4", (inner - 7) / 2}, {"W4", (inner - 7) / 2}, {"five_cycles", (spec.m - 9) / 2}};
    }
  }
  throw std::logic_error("derived_sizes: bad kind");
}

Graph build_four_critical_even_delta(int delta) {
  make_family_spec(FamilyKind::FourCriticalEvenDelta, 4, delta);
  int a = delta / 2;
  int u1 = 2 * a + 1, u2 = 2 * a + 2, u3 = 2 * a + 3;
  Graph g(delta + 4);
  for (int i = 0; i < a; ++i) {
    g.add_edge(0, 1 + i);      // v - U
    g.add_edge(0, a + 1 + i);  // v - W
    g.add_edge(u1, 1 + i);
    g.add_edge(u3, a + 1 + i);
    for (int j = 0; j < a; ++j)
      if (i != j) g.add_edge(1 + i, a + 1 + j);
  }
  g.add_edge(u1, u2);
  g.add_edge(u2, u3);
  return g;
}

Graph build_three_critical_block(int m, int delta) {
  make_family_spec(FamilyKind::ThreeCriticalBlock, m, delta);
  int a = (delta - m + 3) / 2;
  int u1 = 2 * a + 1, w1 = 2 * a + 2;
  Graph g(2 * a + 3);
  for (int i = 0; i < a; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(0, a + 1 + i);
    g.add_edge(u1, 1 + i);
    g.add_edge(w1, a + 1 + i);
    for (int j = 0; j < a; ++j)
      if (i != j) g.add_edge(1 + i, a + 1 + j);
  }
  g.add_edge(u1, w1);
  return g;
}

Graph build_m_critical_even_delta(int m, int delta) {
  make_family_spec(FamilyKind::MCriticalEvenDelta, m, delta);
  return amalgamate_five_cycles(build_three_critical_block(m, delta), (m - 3) / 2);
}

Graph build_four_critical_odd_delta(int delta) {
  make_family_spec(FamilyKind::FourCriticalOddDelta, 4, delta);
  int s[4] = {0, 2, (delta - 5) / 2, (delta - 5) / 2};
  int base[4] = {0, 4, 4 + s[1], 4 + s[1] + s[2]};
  auto y = [&](int a, int j) { return base[a] + j - 1; };  // j is 1-based
  int u = base[3] + s[3], z = u + 1, w = z + 1;
  Graph g(delta + 4);
  for (int i = 1; i <= 3; ++i) {
    g.add_edge(0, i);  // v - x_i
    g.add_edge(u, i);
    for (int a = 1; a <= 3; ++a)
      if (a != i)
        for (int j = 1; j <= s[a]; ++j) g.add_edge(i, y(a, j));  // x_i over H_a
  }
  for (int a = 1; a <= 3; ++a)
    for (int j = 1; j <= s[a]; ++j) {
      g.add_edge(0, y(a, j));  // v over the groups
      g.add_edge(w, y(a, j));
      // One non-neighbor class per index, taken modulo the smaller group
      // size: every vertex misses at least one vertex of every other group,
      // which is exactly what keeps gamma_t above 3 when the groups outgrow
      // H1. For equal sizes this is the plain index-aligned non-edge.
      for (int b = a + 1; b <= 3; ++b)
        for (int k = 1; k <= s[b]; ++k)
          if (j % s[a] != k % s[a]) g.add_edge(y(a, j), y(b, k));
    }
  g.add_edge(u, z);
  g.add_edge(z, w);
  return g;
}

Graph build_nine_critical_odd_delta(int delta) {
  make_family_spec(FamilyKind::NineCriticalOddDelta, 9, delta);
  int q = (delta - 7) / 2;
  int x1 = 1, y1 = 2, u1 = 3, w1 = 4;
  int x2 = 5, y2 = 6, u2 = 7, w2 = 8;
  int x31 = 9, x32 = 10, y3 = 11, u3 = 12, w3 = 13;
  int u4base = 14, w4base = 14 + q;
  int u4 = 14 + 2 * q, w4 = 15 + 2 * q;
  Graph g(delta + 9);
  for (int x : {x1, y1, x2, y2, x31, x32, y3}) g.add_edge(0, x);
  g.add_edge(u1, x1);
  g.add_edge(w1, y1);
  g.add_edge(u2, x2);
  g.add_edge(w2, y2);
  g.add_edge(u3, x31);
  g.add_edge(u3, x32);
  g.add_edge(w3, y3);
  g.add_edge(u1, w1);
  g.add_edge(u2, w2);
  g.add_edge(u3, w3);
  g.add_edge(u4, w4);
  g.add_edge(x1, x31);
  g.add_edge(y1, x31);
  g.add_edge(x2, x32);
  g.add_edge(y2, x32);
  for (int i = 0; i < q; ++i) {
    g.add_edge(0, u4base + i);
    g.add_edge(0, w4base + i);
    g.add_edge(u4, u4base + i);
    g.add_edge(w4, w4base + i);
    g.add_edge(y3, u4base + i);
    g.add_edge(y3, w4base + i);
    for (int j = 0; j < q; ++j)
      if (i != j) g.add_edge(u4base + i, w4base + j);
  }
  return g;
}

Graph build_m_critical_odd_m(int m, int delta) {
  make_family_spec(FamilyKind::MCriticalOddM, m, delta);
  return amalgamate_five_cycles(build_nine_critical_odd_delta(delta - (m - 9)), (m - 9) / 2);
}

VertexSet nine_critical_reference_witness(int delta) {
  make_family_spec(FamilyKind::NineCriticalOddDelta, 9, delta);
  int q = (delta - 7) / 2;
  return VertexSet::of(delta + 9, {3, 4, 7, 8, 14 + 2 * q, 15 + 2 * q, 0, 9, 12});
}

std::vector<int> nine_critical_pair_heads(int delta) {
  make_family_spec(FamilyKind::NineCriticalOddDelta, 9, delta);
  int q = (delta - 7) / 2;
  return {3, 7, 12, 14 + 2 * q};
}

ExistenceVerdict existence(int m, int delta) {
  if (m < 3) throw std::invalid_argument("existence: need m >= 3");
  if (delta < 2) throw std::invalid_argument("existence: need delta >= 2");
  auto not_exists = [](const char* tag) { return ExistenceVerdict{Existence::NotExists, tag, {}, false}; };
  auto exists = [](const char* tag, FamilySpec spec) {
    return ExistenceVerdict{Existence::Exists, tag, spec, false};
  };
  auto exists_external = [](const char* tag) { return ExistenceVerdict{Existence::Exists, tag, {}, true}; };

  if (m % 2 == 0 && m != 4) return not_exists("mainthm0");
  if (delta < 2 * ((m - 1) / 2)) return not_exists("mainthm0");
  if (m == 3) {
    if (delta % 2 == 0)
      return exists("mainthm0", make_family_spec(FamilyKind::ThreeCriticalBlock, 3, delta));
    if (delta <= 5) return not_exists("lem4");
    if (delta == 7) return not_exists("CS");
    return exists_external("CS");
  }
  if (m == 4) {
    if (delta % 2 == 0)
      return exists("m=4summary", make_family_spec(FamilyKind::FourCriticalEvenDelta, 4, delta));
    if (delta <= 7) return not_exists("mainthm3");
    return exists("m=4summary", make_family_spec(FamilyKind::FourCriticalOddDelta, 4, delta));
  }
  if (m <= 7) {  // m = 5 or 7
    if (delta % 2 == 0)
      return exists("mainthm0", make_family_spec(FamilyKind::MCriticalEvenDelta, m, delta));
    if (delta >= m + 6) return exists_external("mainthm0");
    return ExistenceVerdict{Existence::Open, "remark", {}, false};
  }
  // odd m >= 9: exists iff delta >= m - 1, and odd delta here is >= m
  if (delta % 2 == 0)
    return exists("m>=9summary", make_family_spec(FamilyKind::MCriticalEvenDelta, m, delta));
  return exists("m>=9summary",
                make_family_spec(m == 9 ? FamilyKind::NineCriticalOddDelta : FamilyKind::MCriticalOddM,
                                 m, delta));
}

std::string existence_status_name(Existence e) {
  switch (e) {
    case Existence::Exists: return "Exists";
    case Existence::NotExists: return "NotExists";
    case Existence::Open: return "Open";
  }
  throw std::logic_error("existence_status_name: bad status");
}

}  // namespace tdc
