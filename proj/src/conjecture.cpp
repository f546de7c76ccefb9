#include "pdom/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "pdom/domination.hpp"
#include "pdom/formulas.hpp"
#include "pdom/generators.hpp"
#include "pdom/io.hpp"

namespace pdom {

namespace {

constexpr int kMaxCodeOrder = 11;

int pair_count(int n) { return n * (n - 1) / 2; }

Graph decode(int n, std::uint64_t code) {
  std::vector<Graph::Edge> edges;
  int k = pair_count(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --k;
      if ((code >> k) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

// Minimum adjacency code over all relabelings. `old_of_new[x]` is the
// original vertex placed at position x; a relabeling is abandoned as soon
// as its code prefix exceeds the best one found so far.
std::uint64_t minimum_code(const Graph& g) {
  const int n = g.order();
  const int bits = pair_count(n);
  std::vector<std::uint64_t> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.neighbors(v).bits();

  std::vector<Vertex> old_of_new(n);
  std::iota(old_of_new.begin(), old_of_new.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int emitted = 0;
    bool worse = false;
    for (int j = 1; j < n && !worse; ++j) {
      const std::uint64_t row = rows[old_of_new[j]];
      for (int i = 0; i < j; ++i) {
        code = (code << 1) | ((row >> old_of_new[i]) & 1);
        ++emitted;
      }
      if (best != ~std::uint64_t{0} && code > (best >> (bits - emitted))) worse = true;
    }
    if (!worse && code < best) best = code;
  } while (std::next_permutation(old_of_new.begin(), old_of_new.end()));
  return best;
}

void check_code_order(const Graph& g) {
  if (g.order() > kMaxCodeOrder) {
    throw std::invalid_argument("adjacency codes need order <= " + std::to_string(kMaxCodeOrder));
  }
}

struct FactorInfo {
  const Graph* graph;
  std::string g6;
  int gp;
};

ScanReport check_pair(const FactorInfo& g, const FactorInfo& h, Proportion p) {
  ScanReport report;
  report.g6_g = g.g6;
  report.g6_h = h.g6;
  report.p = p;
  report.gp_g = g.gp;
  report.gp_h = h.gp;
  report.connected = g.graph->connected() && h.graph->connected();
  const SolveResult product = gamma_p(cartesian_product(*g.graph, *h.graph), p);
  report.gp_product = product.gamma_p;
  report.holds = product.gamma_p >= formulas::conjectured_lower_bound(g.gp, h.gp);
  if (!report.holds) report.witness = product.witness;
  return report;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  check_code_order(g);
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j) {
    const VertexSet row = g.neighbors(j);
    for (int i = 0; i < j; ++i) code = (code << 1) | (row.contains(i) ? 1 : 0);
  }
  return code;
}

Graph canonical_form(const Graph& g) {
  check_code_order(g);
  return decode(g.order(), minimum_code(g));
}

std::vector<Graph> enumerate_graphs(int max_order, bool include_disconnected) {
  if (max_order < 1 || max_order > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration order must lie in 1.." +
                                std::to_string(kMaxEnumerationOrder));
  }
  // Every graph of order n is a graph of order n-1 plus one vertex; for
  // connected graphs the removed vertex can be chosen as a non-cut vertex,
  // so its neighborhood in the smaller connected graph is nonempty.
  std::vector<Graph> out;
  std::vector<Graph> level = {Graph(1, {})};
  out.push_back(level.front());
  for (int n = 2; n <= max_order; ++n) {
    std::map<std::uint64_t, Graph> seen;
    const std::uint64_t first_mask = include_disconnected ? 0 : 1;
    for (const Graph& base : level) {
      const auto base_edges = base.edges();
      for (std::uint64_t mask = first_mask; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        auto edges = base_edges;
        for (Vertex u = 0; u < n - 1; ++u) {
          if ((mask >> u) & 1) edges.emplace_back(u, n - 1);
        }
        const std::uint64_t code = minimum_code(Graph(n, edges));
        if (!seen.contains(code)) seen.emplace(code, decode(n, code));
      }
    }
    level.clear();
    for (auto& [code, graph] : seen) level.push_back(graph);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

ScanReport check_product_inequality(const Graph& g, const Graph& h, Proportion p) {
  if (static_cast<long long>(g.order()) * h.order() > kMaxOrder) {
    throw CapacityError("product order exceeds the cap of " + std::to_string(kMaxOrder));
  }
  const FactorInfo gi{&g, write_graph6(g), gamma_p(g, p).gamma_p};
  const FactorInfo hi{&h, write_graph6(h), gamma_p(h, p).gamma_p};
  return check_pair(gi, hi, p);
}

ScanSummary scan_family(std::vector<Graph> family, Proportion p, unsigned threads) {
  std::vector<FactorInfo> factors;
  factors.reserve(family.size());
  for (const Graph& g : family) {
    if (g.empty()) throw std::invalid_argument("scan family contains an empty graph");
    factors.push_back({&g, write_graph6(g), gamma_p(g, p).gamma_p});
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const FactorInfo& a, const FactorInfo& b) { return a.g6 < b.g6; });
  for (const auto& f : factors) {
    if (static_cast<long long>(f.graph->order()) * f.graph->order() > kMaxOrder) {
      throw CapacityError("factor order " + std::to_string(f.graph->order()) +
                          " gives products beyond the cap of " + std::to_string(kMaxOrder));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) pairs.emplace_back(i, j);

  std::vector<std::optional<ScanReport>> failures(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      ScanReport report = check_pair(factors[pairs[k].first], factors[pairs[k].second], p);
      if (!report.holds) failures[k] = std::move(report);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, pairs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  ScanSummary summary;
  summary.pairs = static_cast<long long>(pairs.size());
  for (auto& f : failures) {
    if (f) summary.failures.push_back(std::move(*f));
  }
  return summary;
}

ScanSummary scan_conjecture(int max_order, Proportion p, const ScanOptions& options) {
  if (static_cast<long long>(max_order) * max_order > kMaxOrder) {
    throw CapacityError("max_order^2 exceeds the cap of " + std::to_string(kMaxOrder));
  }
  return scan_family(enumerate_graphs(max_order, options.include_disconnected), p,
                     options.threads);
}

PropVerdict check_prop_2_4(const Graph& g) {
  const Proportion half(1, 2);
  PropVerdict verdict;
  verdict.m = 2;
  verdict.gamma_g = gamma_p(g, half).gamma_p;
  verdict.gamma_product = gamma_p(cartesian_product(g, path(2)), half).gamma_p;
  verdict.gamma_path = gamma_p(path(2), half).gamma_p;
  verdict.holds = verdict.gamma_product >= verdict.gamma_g;
  return verdict;
}

PropVerdict check_prop_2_5_6_7(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("path factor needs m >= 1");
  if (static_cast<long long>(g.order()) * m > kMaxOrder) {
    throw CapacityError("product order exceeds the cap of " + std::to_string(kMaxOrder));
  }
  const Proportion half(1, 2);
  PropVerdict verdict;
  verdict.m = m;
  verdict.gamma_g = gamma_p(g, half).gamma_p;
  if (verdict.gamma_g < 1 || verdict.gamma_g > 3) {
    verdict.applicable = false;
    return verdict;
  }
  verdict.gamma_product = gamma_p(cartesian_product(g, path(m)), half).gamma_p;
  verdict.gamma_path = gamma_p(path(m), half).gamma_p;
  verdict.holds = verdict.gamma_product >= verdict.gamma_g * verdict.gamma_path;
  return verdict;
}

}  // namespace pdom
