// Closed-form values for partial domination of standard families. These are
// the reference side of the solver-vs-formula checks.
#pragma once

#include <string>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom::formulas {

/// ceil(n / 6)
int gamma_half_path(int n);

/// P_m □ P_n with 2 <= m <= n: ceil(n / 4) when m = 2, else ceil(mn / 10).
int gamma_half_grid(int m, int n);

/// K_m □ K_n: least k >= 1 with k(m + n) - k^2 >= mn / 2, found by integer
/// search on 2k(m + n) - 2k^2 >= mn.
int gamma_half_complete_product(int m, int n);

/// P_n □ K_m: ceil(mn / (2(m + 2))).
int gamma_half_path_complete(int n, int m);

long long conjectured_lower_bound(long long gp_g, long long gp_h);

/// Which sides of K_{m,n} = (V_1, V_2) form the influencing set.
enum class BipartiteSides { kBoth, kSmallSide };

/// p must equal k / (m + n) for an integer 1 <= k <= m + n; requires m >= n >= 1.
BipartiteSides influencing_complete_bipartite(int m, int n, Proportion p);

/// Vertex set of `sides` in complete_bipartite(m, n) indexing.
VertexSet bipartite_sides_to_set(int m, int n, BipartiteSides sides);

/// Which bullet of the path table fired.
enum class PathCase { kAll, kInterior, kPattern };

struct PathInfluenceSpec {
  int residue = 0;  // n mod 3
  PathCase p_case = PathCase::kAll;
  VertexSet members;  // v_i stored at index i - 1
};

/// Influencing set of P_n at p = j / n, 1 <= j <= n, n >= 2.
PathInfluenceSpec path_influence_spec(int n, Proportion p);
VertexSet influencing_path(int n, Proportion p);

/// Intersection of all influencing sets of P_n with p > 0, n >= 3.
VertexSet influencing_intersection_path(int n);

/// (min degree + 1) / n.
Proportion influencing_full_threshold(const Graph& g);

/// A solver value that disagrees with a closed form.
struct Discrepancy {
  std::string check;     // e.g. "gamma_half_grid"
  std::string instance;  // e.g. "m=3 n=4"
  std::string expected;  // closed form
  std::string actual;    // solver

  std::string to_string() const;
};

// Solver-vs-formula sweeps. Each returns every mismatch found.

/// gamma_1/2(P_n), 1 <= n <= max_n.
std::vector<Discrepancy> audit_path(int max_n);
/// gamma_1/2(P_2 □ P_n), 2 <= n <= max_n.
std::vector<Discrepancy> audit_ladder(int max_n);
/// gamma_1/2(P_m □ P_n), 3 <= m <= n <= max_n.
std::vector<Discrepancy> audit_grid(int max_n);
/// gamma_1/2(K_m □ K_n), 2 <= n <= m <= max_m.
std::vector<Discrepancy> audit_complete_product(int max_m);
/// gamma_1/2(P_n □ K_m), 2 <= n <= max_n, 2 <= m <= max_m.
std::vector<Discrepancy> audit_path_complete(int max_n, int max_m);
/// Influencing sets of P_n for every p = j/n plus their intersection,
/// min_n <= n <= max_n.
std::vector<Discrepancy> audit_path_influence(int min_n, int max_n);
/// Influencing sets of K_{m,n} for every p = k/(m+n), 1 <= n <= m <= max_m.
std::vector<Discrepancy> audit_bipartite_influence(int max_m);

}  // namespace pdom::formulas
