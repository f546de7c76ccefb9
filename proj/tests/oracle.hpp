// Deliberately naive reference implementations. Nothing here calls the
// solver, the enumerator or the graph's neighborhood helpers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "pdom/graph.hpp"

namespace oracle {

using pdom::Graph;
using pdom::Proportion;
using pdom::VertexSet;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

/// |N[S]| counted vertex by vertex.
inline int covered(const std::vector<std::vector<bool>>& m, std::uint64_t s) {
  const int n = static_cast<int>(m.size());
  int count = 0;
  for (int x = 0; x < n; ++x) {
    bool hit = (s >> x) & 1;
    for (int y = 0; y < n && !hit; ++y) hit = ((s >> y) & 1) && m[x][y];
    count += hit;
  }
  return count;
}

/// Smallest c with c * den >= num * n, by counting up.
inline int target(int n, Proportion p) {
  int c = 0;
  while (static_cast<long long>(c) * p.den() < p.num() * n) ++c;
  return c;
}

struct Family {
  int size = -1;
  std::vector<VertexSet> sets;  // sorted
};

/// Scans every subset of V and keeps the smallest ones meeting the target.
inline Family brute_family(const Graph& g, Proportion p) {
  const int n = g.order();
  const auto m = matrix(g);
  const int need = target(n, p);
  Family f;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int k = __builtin_popcountll(s);
    if (f.size >= 0 && k > f.size) continue;
    if (covered(m, s) < need) continue;
    if (f.size < 0 || k < f.size) {
      f.size = k;
      f.sets.clear();
    }
    f.sets.push_back(VertexSet(s));
  }
  std::sort(f.sets.begin(), f.sets.end(), [](VertexSet a, VertexSet b) {
    const auto x = a.members();
    const auto y = b.members();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  return f;
}

inline int brute_gamma(const Graph& g, Proportion p) { return brute_family(g, p).size; }

/// Adjacency string under a relabeling, first pair most significant.
inline std::uint64_t relabeled_code(const std::vector<std::vector<bool>>& m,
                                    const std::vector<int>& at) {
  const int n = static_cast<int>(m.size());
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (m[at[i]][at[j]] ? 1 : 0);
  return code;
}

/// Heap's algorithm, visiting every permutation of `a`.
inline void heap_permutations(std::vector<int>& a, int k,
                              const std::function<void(const std::vector<int>&)>& visit) {
  if (k <= 1) {
    visit(a);
    return;
  }
  for (int i = 0; i < k - 1; ++i) {
    heap_permutations(a, k - 1, visit);
    std::swap(a[(k % 2 == 0) ? i : 0], a[k - 1]);
  }
  heap_permutations(a, k - 1, visit);
}

inline std::uint64_t brute_canonical_code(const std::vector<std::vector<bool>>& m) {
  std::vector<int> at(m.size());
  std::iota(at.begin(), at.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  heap_permutations(at, static_cast<int>(at.size()),
                    [&](const std::vector<int>& perm) { best = std::min(best, relabeled_code(m, perm)); });
  return best;
}

inline bool brute_connected(const std::vector<std::vector<bool>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> stack = {0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y) {
      if (m[x][y] && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Number of isomorphism classes of graphs of order n, found by running
/// through all 2^(n(n-1)/2) edge masks.
inline int count_graphs_by_masks(int n, bool connected_only) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    int k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if ((mask >> k) & 1) m[i][j] = m[j][i] = true;
    if (connected_only && !brute_connected(m)) continue;
    classes.insert(brute_canonical_code(m));
  }
  return static_cast<int>(classes.size());
}

}  // namespace oracle
