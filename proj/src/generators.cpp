#include "pdom/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <functional>

namespace pdom {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void check_cap(long long order) {
  if (order > kMaxOrder) {
    throw CapacityError("graph order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  check_cap(n);
  std::vector<Graph::Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  check_cap(n);
  std::vector<Graph::Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  check_cap(n);
  std::vector<Graph::Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
  check_cap(static_cast<long long>(m) + n);
  std::vector<Graph::Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return Graph(m + n, edges);
}

Graph star(int k) {
  require(k >= 1, "star needs k >= 1");
  return complete_bipartite(1, k);
}

Graph subdivided_star(int k) {
  require(k >= 1, "subdivided star needs k >= 1");
  check_cap(2LL * k + 1);
  std::vector<Graph::Edge> edges;
  for (Vertex i = 1; i <= k; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, k + i);
  }
  return Graph(2 * k + 1, edges);
}

Graph grid(int m, int n) { return cartesian_product(path(m), path(n)); }

// 0 apex (triangle); 1-4 middle row, left to right; 5, 6 hubs (boxed);
// 7 leaf under hub 5; 8 leaf under hub 6.
Graph figure2_graph() {
  return Graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                   {1, 5}, {2, 5}, {3, 6}, {4, 6},
                   {5, 7}, {6, 8}});
}

// 0 hub (triangle); 1 right, 2 top, 3 left, 4 bottom (boxed, a 4-cycle in
// that order); 5-8 the pendant beyond 1-4 respectively.
Graph figure3_graph() {
  return Graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                   {1, 2}, {2, 3}, {3, 4}, {4, 1},
                   {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

// 0 root (triangle); 1 left leaf child; 2, 3 boxed children; 4 upper leaf
// child; 5-7 leaves of 2; 8-10 leaves of 3.
Graph figure4_tree() {
  return Graph(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                    {2, 5}, {2, 6}, {2, 7},
                    {3, 8}, {3, 9}, {3, 10}});
}

Graph generate(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    const std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = std::min(rest.find(',', pos), rest.size());
      int value = 0;
      const char* first = rest.data() + pos;
      const char* last = rest.data() + comma;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (first == last || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("bad argument list in generator spec '" + spec + "'");
      }
      args.push_back(value);
      pos = comma + 1;
    }
  }

  auto arity = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("generator '" + name + "' takes " + std::to_string(count) +
                                  " argument(s)");
    }
  };

  const std::map<std::string, std::function<Graph()>> table = {
      {"path", [&] { arity(1); return path(args[0]); }},
      {"cycle", [&] { arity(1); return cycle(args[0]); }},
      {"complete", [&] { arity(1); return complete(args[0]); }},
      {"complete-bipartite", [&] { arity(2); return complete_bipartite(args[0], args[1]); }},
      {"star", [&] { arity(1); return star(args[0]); }},
      {"subdivided-star", [&] { arity(1); return subdivided_star(args[0]); }},
      {"grid", [&] { arity(2); return grid(args[0], args[1]); }},
      {"fig1", [&] { arity(0); return subdivided_star(8); }},
      {"fig2", [&] { arity(0); return figure2_graph(); }},
      {"fig3", [&] { arity(0); return figure3_graph(); }},
      {"fig4", [&] { arity(0); return figure4_tree(); }},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown generator '" + name + "'");
  return it->second();
}

}  // namespace pdom
