// acceptance - one PASS/FAIL line per acceptance criterion, nonzero exit on
// any failure. Time budgets are enforced where the criterion states one.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tdc/canonical.hpp"
#include "tdc/criticality.hpp"
#include "tdc/families.hpp"
#include "tdc/gamma.hpp"
#include "tdc/graph.hpp"
#include "tdc/graph6.hpp"
#include "tdc/search.hpp"

using namespace tdc;

namespace {

struct Lcg {
  uint64_t s;
  uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 16;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

Graph random_graph(Lcg& rng, int n, int edge_percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < edge_percent) g.add_edge(u, v);
  return g;
}

// Returns "" on success, a short failure detail otherwise.
using Body = std::function<std::string()>;

struct Criterion {
  std::string desc;
  double budget_s;  // <= 0 means no stated budget
  std::string budget_text;
  Body body;
};

std::string check_family_cell(const FamilySpec& spec) {
  Graph g = build_family(spec);
  std::ostringstream at;
  at << family_name(spec.kind) << "(m=" << spec.m << ",delta=" << spec.delta << ")";
  if (g.order() != spec.order) return at.str() + ": wrong order";
  if (g.max_degree() != spec.max_degree) return at.str() + ": wrong max degree";
  if (g.min_degree() < 2) return at.str() + ": min degree below 2";
  auto r = total_domination_number(g);
  if (r.value != spec.gamma_t) return at.str() + ": wrong gamma_t";
  if (is_gamma_t_critical(g).verdict != Verdict::critical)
    return at.str() + ": not critical";
  if (!check_structure_lemma(g)) return at.str() + ": structure check failed";
  return "";
}

// The family grid exercised by the acceptance run, nominal order <= 22 plus
// the two largest m-odd cells.
std::vector<FamilySpec> family_grid() {
  std::vector<FamilySpec> grid;
  for (int d : {2, 4, 6, 8, 10})
    grid.push_back(make_family_spec(FamilyKind::FourCriticalEvenDelta, 4, d));
  for (int m : {3, 5, 7})
    for (int d = m - 1; d + m <= 22; d += 2) {
      grid.push_back(make_family_spec(FamilyKind::ThreeCriticalBlock, m, d));
      grid.push_back(make_family_spec(FamilyKind::MCriticalEvenDelta, m, d));
    }
  for (int d : {9, 11, 13}) {
    grid.push_back(make_family_spec(FamilyKind::FourCriticalOddDelta, 4, d));
    grid.push_back(make_family_spec(FamilyKind::NineCriticalOddDelta, 9, d));
  }
  for (int d : {11, 13})
    grid.push_back(make_family_spec(FamilyKind::MCriticalOddM, 11, d));
  return grid;
}

std::vector<Criterion> build_criteria() {
  std::vector<Criterion> cs;

  cs.push_back({"gamma_t(C5)=3 and gamma_t(C6)=4, under 1ms each", 0, "1ms each", [] {
    Graph c5 = cycle(5), c6 = cycle(6);
    auto t0 = std::chrono::steady_clock::now();
    auto r5 = total_domination_number(c5);
    auto t1 = std::chrono::steady_clock::now();
    auto r6 = total_domination_number(c6);
    auto t2 = std::chrono::steady_clock::now();
    if (r5.value != 3) return std::string("gamma_t(C5) != 3");
    if (r6.value != 4) return std::string("gamma_t(C6) != 4");
    double s5 = std::chrono::duration<double>(t1 - t0).count();
    double s6 = std::chrono::duration<double>(t2 - t1).count();
    if (s5 >= 0.001 || s6 >= 0.001) return std::string("solve exceeded 1ms");
    return std::string();
  }});

  cs.push_back({"branch-and-bound matches brute force on 500 random graphs, n <= 10, three densities",
                30, "30s", [] {
    Lcg rng{20260814};
    const int densities[3] = {20, 50, 80};
    for (int t = 0; t < 500; ++t) {
      int n = 2 + t % 9;
      Graph g = random_graph(rng, n, densities[t % 3]);
      auto fast = total_domination_number(g);
      auto slow = brute_force_gamma_t(g);
      if (fast.value != slow.value) {
        std::ostringstream out;
        out << "disagreement on trial " << t << ": " << to_graph6(g);
        return out.str();
      }
      if (fast.feasible() && !is_total_dominating_set(g, fast.witness))
        return std::string("invalid witness on trial ") + std::to_string(t);
    }
    return std::string();
  }});

  cs.push_back({"family grid: every build matches its spec, is critical, and passes the structure check",
                300, "5min", [] {
    for (const auto& spec : family_grid()) {
      std::string err = check_family_cell(spec);
      if (!err.empty()) return err;
    }
    return std::string();
  }});

  cs.push_back({"four-odd at delta=9 (order 13) and delta=11 (order 15): gamma_t=4 and critical",
                10, "10s", [] {
    for (int d : {9, 11}) {
      Graph g = build_four_critical_odd_delta(d);
      if (g.order() != d + 4) return std::string("wrong order at delta ") + std::to_string(d);
      if (total_domination_number(g).value != 4)
        return std::string("gamma_t != 4 at delta ") + std::to_string(d);
      if (is_gamma_t_critical(g).verdict != Verdict::critical)
        return std::string("not critical at delta ") + std::to_string(d);
    }
    return std::string();
  }});

  cs.push_back({"nine-odd(9): gamma_t=9, reference witness validates, deleting any pair head gives 8",
                60, "60s", [] {
    Graph g = build_nine_critical_odd_delta(9);
    if (total_domination_number(g).value != 9) return std::string("gamma_t != 9");
    VertexSet w = nine_critical_reference_witness(9);
    if (w.count() != 9) return std::string("witness size != 9");
    if (!is_total_dominating_set(g, w)) return std::string("reference witness invalid");
    for (int u : nine_critical_pair_heads(9)) {
      if (total_domination_number(delete_vertex(g, u)).value != 8)
        return std::string("gamma_t(G-u) != 8 at vertex ") + std::to_string(u);
    }
    return std::string();
  }});

  cs.push_back({"structured search finds nothing at (m=3, delta=3) and (m=3, delta=5)", 10, "10s", [] {
    for (int d : {3, 5}) {
      auto out = structured_search(3, d);
      if (!out.exhausted) return std::string("search not exhausted at delta ") + std::to_string(d);
      if (!out.found.empty()) return std::string("unexpected graph at delta ") + std::to_string(d);
    }
    return std::string();
  }});

  cs.push_back({"structured search finds nothing at (m=4, delta=3), (4,5), (4,7)", 900, "15min", [] {
    for (int d : {3, 5, 7}) {
      auto out = structured_search(4, d);
      if (!out.exhausted) return std::string("search not exhausted at delta ") + std::to_string(d);
      if (!out.found.empty()) return std::string("unexpected graph at delta ") + std::to_string(d);
    }
    return std::string();
  }});

  cs.push_back({"structured (4,2) and exhaustive (n=6, m=4) searches each find exactly C6", 10, "10s", [] {
    std::string c6_form = canonical_form(cycle(6));
    auto a = structured_search(4, 2);
    auto b = exhaustive_search_all_graphs(6, 4);
    for (const auto* out : {&a, &b}) {
      if (!out->exhausted) return std::string("search not exhausted");
      if (out->found.size() != 1) return std::string("expected exactly one graph");
      if (canonical_form(out->found[0]) != c6_form) return std::string("found graph is not C6");
    }
    return std::string();
  }});

  cs.push_back({"existence table over m=3..12, delta=2..15 matches the transcribed verdicts and authorities",
                0, "", [] {
    // One row per m, one char per delta: E exists, N not, O open.
    const char* expected_status[10] = {
        "ENENENEEEEEEEE",  // m=3
        "ENENENEEEEEEEE",  // m=4
        "NNEOEOEOEEEEEE",  // m=5
        "NNNNNNNNNNNNNN",  // m=6
        "NNNNEOEOEOEEEE",  // m=7
        "NNNNNNNNNNNNNN",  // m=8
        "NNNNNNEEEEEEEE",  // m=9
        "NNNNNNNNNNNNNN",  // m=10
        "NNNNNNNNEEEEEE",  // m=11
        "NNNNNNNNNNNNNN",  // m=12
    };
    const char* expected_authority[10] = {
        "mainthm0,lem4,mainthm0,lem4,mainthm0,CS,mainthm0,CS,mainthm0,CS,mainthm0,CS,mainthm0,CS",
        "m=4summary,mainthm3,m=4summary,mainthm3,m=4summary,mainthm3,m=4summary,m=4summary,"
        "m=4summary,m=4summary,m=4summary,m=4summary,m=4summary,m=4summary",
        "mainthm0,mainthm0,mainthm0,remark,mainthm0,remark,mainthm0,remark,mainthm0,mainthm0,"
        "mainthm0,mainthm0,mainthm0,mainthm0",
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,"
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0",
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,remark,mainthm0,remark,mainthm0,remark,"
        "mainthm0,mainthm0,mainthm0,mainthm0",
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,"
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0",
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,m>=9summary,m>=9summary,"
        "m>=9summary,m>=9summary,m>=9summary,m>=9summary,m>=9summary,m>=9summary",
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,"
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0",
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,m>=9summary,"
        "m>=9summary,m>=9summary,m>=9summary,m>=9summary,m>=9summary",
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,mainthm0,"
        "mainthm0,mainthm0,mainthm0,mainthm0,mainthm0",
    };
    for (int m = 3; m <= 12; ++m) {
      std::string status, authority;
      for (int d = 2; d <= 15; ++d) {
        auto v = existence(m, d);
        status += v.status == Existence::Exists ? 'E'
                : v.status == Existence::NotExists ? 'N' : 'O';
        if (d > 2) authority += ',';
        authority += v.authority;
      }
      if (status != expected_status[m - 3]) {
        std::ostringstream out;
        out << "status row m=" << m << " is " << status;
        return out.str();
      }
      if (authority != expected_authority[m - 3]) {
        std::ostringstream out;
        out << "authority row m=" << m << " is " << authority;
        return out.str();
      }
    }
    return std::string();
  }});

  cs.push_back({"20 random amalgamations of all-P2 family graphs: gamma_t = m1+m2-1 and critical",
                300, "5min", [] {
    struct Factor {
      Graph g;
      int m;
    };
    std::vector<Factor> pool;
    pool.push_back({cycle(5), 3});
    for (int d : {4, 6, 8})
      pool.push_back({build_three_critical_block(3, d), 3});
    for (int d : {4, 6})
      pool.push_back({build_m_critical_even_delta(5, d), 5});
    pool.push_back({build_m_critical_even_delta(7, 6), 7});
    pool.push_back({build_nine_critical_odd_delta(9), 9});
    for (const auto& f : pool) {
      // hub 0 carries the maximum degree and its residual must be all P2s
      auto rs = residual_structure(f.g);
      if (rs.center != 0 || rs.classification != ResidualClass::AllP2)
        return std::string("pool graph violates the amalgamation hypothesis");
    }
    Lcg rng{987654321};
    int done = 0;
    while (done < 20) {
      const Factor& a = pool[rng.below(static_cast<int>(pool.size()))];
      const Factor& b = pool[rng.below(static_cast<int>(pool.size()))];
      int m = a.m + b.m - 1;
      if (m > 11 || a.g.order() + b.g.order() - 1 > 24) continue;
      Graph g = vertex_amalgamation(a.g, 0, b.g, 0);
      if (total_domination_number(g).value != m)
        return std::string("amalgam gamma_t != ") + std::to_string(m);
      if (is_gamma_t_critical(g).verdict != Verdict::critical)
        return std::string("amalgam not critical at m=") + std::to_string(m);
      ++done;
    }
    return std::string();
  }});

  cs.push_back({"graph6 round-trip is byte-exact on all family graphs and 1000 random graphs, n <= 30",
                0, "", [] {
    for (const auto& spec : family_grid()) {
      Graph g = build_family(spec);
      std::string s = to_graph6(g);
      if (to_graph6(from_graph6(s)) != s || !(from_graph6(s) == g))
        return std::string("family graph round-trip mismatch: ") + s;
    }
    Lcg rng{424242};
    for (int t = 0; t < 1000; ++t) {
      int n = rng.below(31);
      Graph g = random_graph(rng, n, 10 + rng.below(81));
      std::string s = to_graph6(g);
      if (to_graph6(from_graph6(s)) != s || !(from_graph6(s) == g))
        return std::string("random graph round-trip mismatch: ") + s;
    }
    return std::string();
  }});

  return cs;
}

}  // namespace

int main() {
  auto criteria = build_criteria();
  int passed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = c.body();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool on_time = c.budget_s <= 0 || elapsed < c.budget_s;
    bool ok = err.empty() && on_time;
    passed += ok;
    std::printf("[%2zu] %s %s (%.2fs%s%s)", i + 1, ok ? "PASS" : "FAIL", c.desc.c_str(),
                elapsed, c.budget_text.empty() ? "" : " < ",
                c.budget_text.c_str());
    if (!err.empty()) std::printf(": %s", err.c_str());
    if (err.empty() && !on_time) std::printf(": over budget");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
