#include "pdom/locating.hpp"

#include <stdexcept>

#include "pdom/domination.hpp"

namespace pdom {

namespace {

void require_max_degree(const Graph& g, Vertex v) {
  if (g.degree(v) != g.max_degree()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " does not have maximum degree");
  }
}

}  // namespace

VertexSet greedy_high_degree(const Graph& g, Proportion p) { return greedy_max_coverage(g, p); }

LocatingVerdict lemma31_verdict(const Graph& g, Proportion p, Vertex v) {
  require_max_degree(g, v);
  const VertexSet self{v};
  const VertexSet near = g.neighbors(v);
  const VertexSet shell = g.distance_two(v);

  LocatingVerdict verdict;
  verdict.vertex = v;
  const auto family = all_gamma_p_sets(g, p);
  verdict.family_size = static_cast<int>(family.sets.size());
  for (VertexSet s : family.sets) {
    verdict.case1 = verdict.case1 || s.intersects(self);
    verdict.case2 = verdict.case2 || s.intersects(near);
    verdict.case3 = verdict.case3 || s.intersects(shell);
  }
  return verdict;
}

Lemma32Outcome lemma32_check(const Graph& g, Proportion p, Vertex v) {
  require_max_degree(g, v);
  const auto family = all_gamma_p_sets(g, p);
  Lemma32Outcome outcome;
  for (VertexSet s : family.sets) {
    if (s.contains(v)) return outcome;
  }
  outcome.applicable = true;
  const VertexSet ball = g.ball_two(v);
  for (VertexSet s : family.sets) {
    if ((s & ball).size() < 2) {
      outcome.holds = false;
      outcome.counterexample = s;
      break;
    }
  }
  return outcome;
}

}  // namespace pdom
