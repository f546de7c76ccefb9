// Small helpers shared by the unit tests.
#pragma once

#include <random>
#include <vector>

#include "pdom/graph.hpp"

namespace testing {

/// G(n, q) with q = num/den, drawn from a fixed-seed engine.
inline pdom::Graph random_graph(std::mt19937& rng, int n, int num, int den) {
  std::uniform_int_distribution<int> coin(0, den - 1);
  std::vector<pdom::Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < num) edges.emplace_back(u, v);
  return pdom::Graph(n, edges);
}

/// p = k/n for k = 1..n.
inline std::vector<pdom::Proportion> grid_proportions(int n) {
  std::vector<pdom::Proportion> out;
  for (int k = 1; k <= n; ++k) out.emplace_back(k, n);
  return out;
}

}  // namespace testing
