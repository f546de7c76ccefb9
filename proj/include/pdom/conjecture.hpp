// Exhaustive small-graph checks of gamma_p(G □ H) >= gamma_p(G) gamma_p(H)
// and of the gamma_1/2 product bounds against paths.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom {

/// Largest factor order accepted by the enumerator (7! relabelings per graph).
inline constexpr int kMaxEnumerationOrder = 7;

/// Upper-triangle adjacency bits in graph6 order, first pair most
/// significant. Requires order <= 11 so the code fits 64 bits.
std::uint64_t adjacency_code(const Graph& g);

/// Relabeling of g minimizing adjacency_code over all order! permutations.
Graph canonical_form(const Graph& g);

/// All graphs of order 1..max_order up to isomorphism, each in canonical
/// form, sorted by graph6 string. Connected graphs only unless
/// `include_disconnected` is set.
std::vector<Graph> enumerate_graphs(int max_order, bool include_disconnected = false);

inline std::vector<Graph> enumerate_connected_graphs(int max_order) {
  return enumerate_graphs(max_order, false);
}

struct ScanReport {
  std::string g6_g;
  std::string g6_h;
  Proportion p;
  int gp_g = 0;
  int gp_h = 0;
  int gp_product = 0;
  bool holds = true;
  /// Minimum p-dominating set of the product; present iff !holds.
  std::optional<VertexSet> witness;
  /// Both factors connected.
  bool connected = true;
};

ScanReport check_product_inequality(const Graph& g, const Graph& h, Proportion p);

struct ScanSummary {
  long long pairs = 0;
  /// Failing reports in lexicographic (g6_g, g6_h) order.
  std::vector<ScanReport> failures;
};

struct ScanOptions {
  bool include_disconnected = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Checks every unordered pair {G, H} (G = H included) of the family.
ScanSummary scan_family(std::vector<Graph> family, Proportion p, unsigned threads = 0);

ScanSummary scan_conjecture(int max_order, Proportion p, const ScanOptions& options = {});

/// Outcome of a gamma_1/2 product bound check.
struct PropVerdict {
  bool applicable = true;
  bool holds = true;
  int gamma_g = 0;        // gamma_1/2(G)
  int gamma_product = 0;  // gamma_1/2(G □ P_m)
  int gamma_path = 0;     // gamma_1/2(P_m)
  int m = 0;
};

/// gamma_1/2(G □ P_2) >= gamma_1/2(G).
PropVerdict check_prop_2_4(const Graph& g);

/// For c = gamma_1/2(G) in {1, 2, 3}: gamma_1/2(G □ P_m) >= c gamma_1/2(P_m).
/// Other values of c are reported as not applicable.
PropVerdict check_prop_2_5_6_7(const Graph& g, int m);

}  // namespace pdom
