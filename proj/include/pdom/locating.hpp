// Degree-greedy heuristics and checks of where minimum p-dominating sets sit
// relative to a maximum-degree vertex.
#pragma once

#include "pdom/graph.hpp"

namespace pdom {

/// Greedy max-coverage starting from the highest-degree vertex. Always
/// p-dominating, not always minimum.
VertexSet greedy_high_degree(const Graph& g, Proportion p);

/// Where the minimum p-dominating sets meet a maximum-degree vertex v.
struct LocatingVerdict {
  Vertex vertex = 0;
  bool case1 = false;  // some gamma_p-set contains v
  bool case2 = false;  // some gamma_p-set meets N(v)
  bool case3 = false;  // some gamma_p-set meets the distance-two shell of v
  int family_size = 0;

  bool any() const { return case1 || case2 || case3; }
};

/// Throws std::invalid_argument unless deg(v) = max degree.
LocatingVerdict lemma31_verdict(const Graph& g, Proportion p, Vertex v);

struct Lemma32Outcome {
  /// False when v lies in some gamma_p-set.
  bool applicable = false;
  /// Every gamma_p-set S has |S ∩ N[N[v]]| >= 2.
  bool holds = true;
  /// First gamma_p-set violating the bound, when !holds.
  VertexSet counterexample;
};

/// Throws std::invalid_argument unless deg(v) = max degree.
Lemma32Outcome lemma32_check(const Graph& g, Proportion p, Vertex v);

}  // namespace pdom
