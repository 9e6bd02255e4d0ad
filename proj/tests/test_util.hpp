#pragma once
// shared test helpers: deterministic rng + random graphs

#include <cstdint>

#include "tdc/graph.hpp"

namespace test_util {

struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 16;
  }
  int below(int n) { return int(next() % std::uint64_t(n)); }
};

inline tdc::Graph random_graph(Lcg& rng, int n, int edge_percent) {
  tdc::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < edge_percent) g.add_edge(i, j);
  return g;
}

}  // namespace test_util
