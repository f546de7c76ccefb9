// Exact partial domination: gamma_p, all minimum p-dominating sets and
// p-influencing sets.
#pragma once

#include <functional>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom {

struct SolveResult {
  int gamma_p = 0;
  /// Lexicographically smallest minimum p-dominating set.
  VertexSet witness;
};

/// Every minimum p-dominating set, sorted lexicographically.
struct GammaPSetFamily {
  int size = 0;
  std::vector<VertexSet> sets;
};

/// Least c with c / n >= p, computed in integers.
int coverage_target(int n, Proportion p);

bool is_p_dominating(const Graph& g, VertexSet s, Proportion p);

/// Greedy max-coverage: repeatedly adds the vertex covering the most new
/// vertices (lowest index on ties) until the coverage target is met.
VertexSet greedy_max_coverage(const Graph& g, Proportion p);

/// Exact p-domination number by branch and bound.
SolveResult gamma_p(const Graph& g, Proportion p);

/// Domination number, i.e. gamma_p with p = 1.
SolveResult gamma(const Graph& g);

/// Calls `visit` on every `size`-subset covering at least `target`
/// vertices, in lexicographic order. Enumeration stops as soon as `visit`
/// returns false.
void for_each_covering_set(const Graph& g, int size, int target,
                           const std::function<bool(VertexSet)>& visit);

GammaPSetFamily all_gamma_p_sets(const Graph& g, Proportion p);

/// Union of all minimum p-dominating sets; empty for p = 0.
VertexSet influencing_set(const Graph& g, Proportion p);

/// Intersection of influencing_set(g, k/n) for k = 1..n.
VertexSet influencing_intersection(const Graph& g);

}  // namespace pdom
