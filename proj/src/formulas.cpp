#include "pdom/formulas.hpp"

#include <stdexcept>

#include "pdom/domination.hpp"
#include "pdom/generators.hpp"

namespace pdom::formulas {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// v_i in 1-based path labels.
void add_label(VertexSet& s, int i) { s.insert(i - 1); }

VertexSet labels_between(int first, int last) {
  VertexSet s;
  for (int i = first; i <= last; ++i) add_label(s, i);
  return s;
}

// p * n when it is an integer, otherwise throws.
long long scaled_numerator(Proportion p, int n, const char* what) {
  if ((p.num() * n) % p.den() != 0) {
    throw std::invalid_argument(std::string(what) + ": p=" + p.to_string() +
                                " is not a multiple of 1/" + std::to_string(n));
  }
  return p.num() * n / p.den();
}

std::string show(VertexSet s) { return s.to_string(); }

}  // namespace

int gamma_half_path(int n) {
  if (n < 1) throw std::invalid_argument("gamma_half_path needs n >= 1");
  return static_cast<int>(ceil_div(n, 6));
}

int gamma_half_grid(int m, int n) {
  if (m < 2 || m > n) throw std::invalid_argument("gamma_half_grid needs 2 <= m <= n");
  if (m == 2) return static_cast<int>(ceil_div(n, 4));
  return static_cast<int>(ceil_div(static_cast<long long>(m) * n, 10));
}

int gamma_half_complete_product(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("gamma_half_complete_product needs m, n >= 1");
  const long long sum = m + n;
  const long long product = static_cast<long long>(m) * n;
  long long k = 1;
  while (2 * k * sum - 2 * k * k < product) ++k;
  return static_cast<int>(k);
}

int gamma_half_path_complete(int n, int m) {
  if (n < 2 || m < 2) throw std::invalid_argument("gamma_half_path_complete needs n, m >= 2");
  return static_cast<int>(ceil_div(static_cast<long long>(m) * n, 2LL * (m + 2)));
}

long long conjectured_lower_bound(long long gp_g, long long gp_h) { return gp_g * gp_h; }

BipartiteSides influencing_complete_bipartite(int m, int n, Proportion p) {
  if (n < 1 || m < n) throw std::invalid_argument("influencing_complete_bipartite needs m >= n >= 1");
  if (p.is_zero()) throw std::invalid_argument("influencing_complete_bipartite needs p > 0");
  const long long k = scaled_numerator(p, m + n, "influencing_complete_bipartite");
  if (m == n) return BipartiteSides::kBoth;
  if (k <= n + 1 || k >= m + 2) return BipartiteSides::kBoth;
  return BipartiteSides::kSmallSide;  // n + 2 <= k <= m + 1
}

VertexSet bipartite_sides_to_set(int m, int n, BipartiteSides sides) {
  const VertexSet all = VertexSet::first(m + n);
  return sides == BipartiteSides::kBoth ? all : all - VertexSet::first(m);
}

PathInfluenceSpec path_influence_spec(int n, Proportion p) {
  if (n < 2) throw std::invalid_argument("influencing_path needs n >= 2");
  if (p.is_zero()) throw std::invalid_argument("influencing_path needs p > 0");
  const long long j = scaled_numerator(p, n, "influencing_path");

  PathInfluenceSpec spec;
  spec.residue = n % 3;
  const VertexSet everything = labels_between(1, n);
  const VertexSet interior = labels_between(2, n - 1);

  // Each residue class has three bullets; the guards below mirror their
  // side conditions literally and exactly one must fire.
  bool all_fires = false;
  bool interior_fires = false;
  bool pattern_fires = false;
  VertexSet pattern;
  switch (spec.residue) {
    case 0:
      all_fires = j % 3 == 1 || j % 3 == 2;
      interior_fires = j % 3 == 0 && j < n;
      pattern_fires = j == n;
      for (int i = 2; i <= n - 1; i += 3) add_label(pattern, i);
      break;
    case 1:
      all_fires = j % 3 == 1 || j % 3 == 2;
      interior_fires = j % 3 == 0 && j != n - 1;
      pattern_fires = j == n - 1;
      pattern = everything;
      for (int i = 1; i <= n; i += 3) pattern.erase(i - 1);
      break;
    default:
      all_fires = j % 3 == 1 || (j % 3 == 2 && j < n);
      interior_fires = j % 3 == 0;
      pattern_fires = j == n;
      pattern = everything;
      for (int i = 3; i <= n - 2; i += 3) pattern.erase(i - 1);
      break;
  }
  if (int(all_fires) + int(interior_fires) + int(pattern_fires) != 1) {
    throw std::logic_error("path influence table: no unique case for n=" + std::to_string(n) +
                           " p=" + p.to_string());
  }
  if (all_fires) {
    spec.p_case = PathCase::kAll;
    spec.members = everything;
  } else if (interior_fires) {
    spec.p_case = PathCase::kInterior;
    spec.members = interior;
  } else {
    spec.p_case = PathCase::kPattern;
    spec.members = pattern;
  }
  return spec;
}

VertexSet influencing_path(int n, Proportion p) { return path_influence_spec(n, p).members; }

VertexSet influencing_intersection_path(int n) {
  if (n < 3) throw std::invalid_argument("influencing_intersection_path needs n >= 3");
  VertexSet out;
  switch (n % 3) {
    case 0:
      for (int k = 0; 3 * k <= n - 3; ++k) add_label(out, 2 + 3 * k);
      break;
    case 1:
      for (int k = 0; 3 * k <= n - 4; ++k) {
        add_label(out, 2 + 3 * k);
        add_label(out, 3 + 3 * k);
      }
      break;
    default:
      for (int k = 1; 3 * k <= n - 2; ++k) add_label(out, 1 + 3 * k);
      for (int j = 0; 3 * j < n - 2; ++j) add_label(out, 2 + 3 * j);
      break;
  }
  return out;
}

Proportion influencing_full_threshold(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("influencing_full_threshold of the empty graph");
  return Proportion(g.min_degree() + 1, g.order());
}

std::string Discrepancy::to_string() const {
  return "discrepancy check=" + check + " instance=[" + instance + "] expected=" + expected +
         " actual=" + actual;
}

namespace {

const Proportion kHalf(1, 2);

void compare_count(std::vector<Discrepancy>& out, const char* check, const std::string& instance,
                   int expected, int actual) {
  if (expected != actual) {
    out.push_back({check, instance, std::to_string(expected), std::to_string(actual)});
  }
}

}  // namespace

std::vector<Discrepancy> audit_path(int max_n) {
  std::vector<Discrepancy> out;
  for (int n = 1; n <= max_n; ++n) {
    compare_count(out, "gamma_half_path", "n=" + std::to_string(n), gamma_half_path(n),
                  gamma_p(path(n), kHalf).gamma_p);
  }
  return out;
}

std::vector<Discrepancy> audit_ladder(int max_n) {
  std::vector<Discrepancy> out;
  for (int n = 2; n <= max_n; ++n) {
    compare_count(out, "gamma_half_grid", "m=2 n=" + std::to_string(n), gamma_half_grid(2, n),
                  gamma_p(grid(2, n), kHalf).gamma_p);
  }
  return out;
}

std::vector<Discrepancy> audit_grid(int max_n) {
  std::vector<Discrepancy> out;
  for (int m = 3; m <= max_n; ++m) {
    for (int n = m; n <= max_n; ++n) {
      compare_count(out, "gamma_half_grid", "m=" + std::to_string(m) + " n=" + std::to_string(n),
                    gamma_half_grid(m, n), gamma_p(grid(m, n), kHalf).gamma_p);
    }
  }
  return out;
}

std::vector<Discrepancy> audit_complete_product(int max_m) {
  std::vector<Discrepancy> out;
  for (int m = 2; m <= max_m; ++m) {
    for (int n = 2; n <= m; ++n) {
      compare_count(out, "gamma_half_complete_product",
                    "m=" + std::to_string(m) + " n=" + std::to_string(n),
                    gamma_half_complete_product(m, n),
                    gamma_p(cartesian_product(complete(m), complete(n)), kHalf).gamma_p);
    }
  }
  return out;
}

std::vector<Discrepancy> audit_path_complete(int max_n, int max_m) {
  std::vector<Discrepancy> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 2; m <= max_m; ++m) {
      compare_count(out, "gamma_half_path_complete",
                    "n=" + std::to_string(n) + " m=" + std::to_string(m),
                    gamma_half_path_complete(n, m),
                    gamma_p(cartesian_product(path(n), complete(m)), kHalf).gamma_p);
    }
  }
  return out;
}

std::vector<Discrepancy> audit_path_influence(int min_n, int max_n) {
  std::vector<Discrepancy> out;
  for (int n = min_n; n <= max_n; ++n) {
    const Graph g = path(n);
    for (int j = 1; j <= n; ++j) {
      const Proportion p(j, n);
      const VertexSet expected = influencing_path(n, p);
      const VertexSet actual = influencing_set(g, p);
      if (expected != actual) {
        out.push_back({"influencing_path", "n=" + std::to_string(n) + " p=" + p.to_string(),
                       show(expected), show(actual)});
      }
    }
    if (n >= 3) {
      const VertexSet expected = influencing_intersection_path(n);
      const VertexSet actual = influencing_intersection(g);
      if (expected != actual) {
        out.push_back({"influencing_intersection_path", "n=" + std::to_string(n), show(expected),
                       show(actual)});
      }
    }
  }
  return out;
}

std::vector<Discrepancy> audit_bipartite_influence(int max_m) {
  std::vector<Discrepancy> out;
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= m; ++n) {
      const Graph g = complete_bipartite(m, n);
      for (int k = 1; k <= m + n; ++k) {
        const Proportion p(k, m + n);
        const VertexSet expected =
            bipartite_sides_to_set(m, n, influencing_complete_bipartite(m, n, p));
        const VertexSet actual = influencing_set(g, p);
        if (expected != actual) {
          out.push_back({"influencing_complete_bipartite",
                         "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                             " p=" + p.to_string(),
                         show(expected), show(actual)});
        }
      }
    }
  }
  return out;
}

}  // namespace pdom::formulas
