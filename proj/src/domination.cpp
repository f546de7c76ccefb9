#include "pdom/domination.hpp"

#include <algorithm>

namespace pdom {

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

struct Candidate {
  Vertex vertex;
  std::uint64_t cover;
  int reach;  // |N[vertex]|
};

// Depth-first existence check over candidates sorted by descending reach.
// A partial selection is abandoned once even `picks` copies of the best
// remaining reach cannot close the gap to `target`.
bool can_cover(const std::vector<Candidate>& candidates, std::size_t from, int picks,
               std::uint64_t covered, int target) {
  const int have = popcount(covered);
  if (have >= target) return true;
  if (picks == 0) return false;
  for (std::size_t i = from; i + picks <= candidates.size(); ++i) {
    if (have + picks * candidates[i].reach < target) break;
    if (can_cover(candidates, i + 1, picks - 1, covered | candidates[i].cover, target)) {
      return true;
    }
  }
  return false;
}

VertexSet greedy_for_target(const Graph& g, int target) {
  VertexSet chosen;
  VertexSet covered;
  while (covered.size() < target) {
    Vertex best = -1;
    int best_gain = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const int gain = (g.closed_neighborhood(v) - covered).size();
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    chosen.insert(best);
    covered |= g.closed_neighborhood(best);
  }
  return chosen;
}

int minimum_size(const Graph& g, int target) {
  if (target == 0) return 0;
  std::vector<Candidate> candidates;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto cover = g.closed_neighborhood(v);
    candidates.push_back({v, cover.bits(), cover.size()});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.reach > b.reach; });

  const int upper = greedy_for_target(g, target).size();
  for (int k = 1; k < upper; ++k) {
    if (can_cover(candidates, 0, k, 0, target)) return k;
  }
  return upper;
}

class CoveringSetWalker {
 public:
  CoveringSetWalker(const Graph& g, int target, const std::function<bool(VertexSet)>& visit)
      : n_(g.order()), target_(target), visit_(visit), cover_(n_), best_reach_from_(n_ + 1, 0) {
    for (Vertex v = 0; v < n_; ++v) cover_[v] = g.closed_neighborhood(v).bits();
    for (int v = n_ - 1; v >= 0; --v) {
      best_reach_from_[v] = std::max(best_reach_from_[v + 1], popcount(cover_[v]));
    }
  }

  // Returns false once the visitor asks to stop.
  bool walk(Vertex from, int picks, std::uint64_t covered, std::uint64_t chosen) {
    const int have = popcount(covered);
    if (picks == 0) return have < target_ || visit_(VertexSet(chosen));
    for (Vertex v = from; v + picks <= n_; ++v) {
      if (have + picks * best_reach_from_[v] < target_) break;
      if (!walk(v + 1, picks - 1, covered | cover_[v], chosen | (std::uint64_t{1} << v))) {
        return false;
      }
    }
    return true;
  }

 private:
  int n_;
  int target_;
  const std::function<bool(VertexSet)>& visit_;
  std::vector<std::uint64_t> cover_;
  std::vector<int> best_reach_from_;
};

}  // namespace

int coverage_target(int n, Proportion p) {
  if (n < 0) throw std::invalid_argument("negative graph order");
  return static_cast<int>((p.num() * n + p.den() - 1) / p.den());
}

bool is_p_dominating(const Graph& g, VertexSet s, Proportion p) {
  return g.closed_neighborhood(s).size() >= coverage_target(g.order(), p);
}

VertexSet greedy_max_coverage(const Graph& g, Proportion p) {
  return greedy_for_target(g, coverage_target(g.order(), p));
}

SolveResult gamma_p(const Graph& g, Proportion p) {
  const int target = coverage_target(g.order(), p);
  SolveResult result;
  result.gamma_p = minimum_size(g, target);
  for_each_covering_set(g, result.gamma_p, target, [&](VertexSet s) {
    result.witness = s;
    return false;
  });
  return result;
}

SolveResult gamma(const Graph& g) { return gamma_p(g, Proportion(1, 1)); }

void for_each_covering_set(const Graph& g, int size, int target,
                           const std::function<bool(VertexSet)>& visit) {
  if (size < 0 || size > g.order()) return;
  CoveringSetWalker(g, target, visit).walk(0, size, 0, 0);
}

GammaPSetFamily all_gamma_p_sets(const Graph& g, Proportion p) {
  const int target = coverage_target(g.order(), p);
  GammaPSetFamily family;
  family.size = minimum_size(g, target);
  for_each_covering_set(g, family.size, target, [&](VertexSet s) {
    family.sets.push_back(s);
    return true;
  });
  return family;
}

VertexSet influencing_set(const Graph& g, Proportion p) {
  VertexSet out;
  for (VertexSet s : all_gamma_p_sets(g, p).sets) out |= s;
  return out;
}

VertexSet influencing_intersection(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("influencing intersection of the empty graph");
  VertexSet out = g.vertices();
  for (int k = 1; k <= g.order(); ++k) out &= influencing_set(g, Proportion(k, g.order()));
  return out;
}

}  // namespace pdom
