#include "pdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace pdom {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (bit(n) - 1);
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::first(int n) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("vertex count out of range");
  return VertexSet(low_mask(n));
}

bool VertexSet::contains(Vertex v) const {
  return v >= 0 && v < 64 && (bits_ & bit(v)) != 0;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= 64) throw std::invalid_argument("vertex index out of range");
  bits_ |= bit(v);
}

void VertexSet::erase(Vertex v) {
  if (v >= 0 && v < 64) bits_ &= ~bit(v);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b));
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (Vertex v : members()) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
  if (a.bits_ == b.bits_) return std::strong_ordering::equal;
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  const std::uint64_t lowest = diff & (~diff + 1);
  // Both share every member below `lowest`. The side holding `lowest` is
  // smaller unless the other side has run out of members.
  const std::uint64_t above = ~((lowest << 1) - 1);
  if (a.bits_ & lowest) {
    return (b.bits_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return (a.bits_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
}

Proportion::Proportion(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("proportion denominator must be positive");
  if (num < 0 || num > den) throw std::invalid_argument("proportion must lie in [0,1]");
  const long long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Proportion Proportion::parse(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    long long value = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("malformed proportion '" + text + "', expected num/den");
    }
    return value;
  };
  const std::string_view view(text);
  const auto slash = view.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("malformed proportion '" + text + "', expected num/den");
  }
  return Proportion(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

std::string Proportion::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Graph::Graph(int order, const std::vector<Edge>& edges) {
  if (order < 0) throw std::invalid_argument("negative graph order");
  if (order > kMaxOrder) {
    throw CapacityError("graph order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(kMaxOrder));
  }
  adj_.assign(order, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > kMaxOrder) throw CapacityError("graph order exceeds the vertex cap");
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = adjacency[v];
    if (row & ~low_mask(n)) throw std::invalid_argument("adjacency bit beyond graph order");
    if (row & bit(v)) throw std::invalid_argument("self-loop in adjacency");
    for (std::uint64_t b = row; b != 0; b &= b - 1) {
      if (!(adjacency[__builtin_ctzll(b)] & bit(v))) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    }
  }
  Graph g;
  g.adj_ = std::move(adjacency);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(order()));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & bit(v)) != 0;
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return VertexSet(adj_[v]);
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  check_vertex(v);
  return VertexSet(adj_[v] | bit(v));
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
  if (!s.is_subset_of(vertices())) throw std::invalid_argument("vertex set exceeds graph order");
  std::uint64_t out = s.bits();
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) out |= adj_[__builtin_ctzll(b)];
  return VertexSet(out);
}

VertexSet Graph::ball_two(Vertex v) const {
  return closed_neighborhood(closed_neighborhood(v));
}

VertexSet Graph::distance_two(Vertex v) const {
  return ball_two(v) - closed_neighborhood(v);
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return __builtin_popcountll(adj_[v]);
}

int Graph::max_degree() const {
  if (empty()) throw std::invalid_argument("max_degree of the empty graph");
  int best = 0;
  for (auto row : adj_) best = std::max(best, __builtin_popcountll(row));
  return best;
}

int Graph::min_degree() const {
  if (empty()) throw std::invalid_argument("min_degree of the empty graph");
  int best = kMaxOrder;
  for (auto row : adj_) best = std::min(best, __builtin_popcountll(row));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += __builtin_popcountll(row);
  return twice / 2;
}

bool Graph::connected() const {
  if (empty()) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= adj_[__builtin_ctzll(b)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == low_mask(order());
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (std::uint64_t b = adj_[u] & ~low_mask(u + 1); b != 0; b &= b - 1) {
      out.emplace_back(u, __builtin_ctzll(b));
    }
  }
  return out;
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  std::vector<Edge> mapped;
  for (auto [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return Graph(order(), mapped);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) throw std::invalid_argument("cartesian product of an empty graph");
  const long long order = static_cast<long long>(g.order()) * h.order();
  if (order > kMaxOrder) {
    throw CapacityError("product order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(kMaxOrder));
  }
  std::vector<Graph::Edge> edges;
  for (Vertex i = 0; i < g.order(); ++i) {
    for (auto [a, b] : h.edges()) {
      edges.emplace_back(product_vertex(h, i, a), product_vertex(h, i, b));
    }
  }
  for (auto [a, b] : g.edges()) {
    for (Vertex j = 0; j < h.order(); ++j) {
      edges.emplace_back(product_vertex(h, a, j), product_vertex(h, b, j));
    }
  }
  return Graph(static_cast<int>(order), edges);
}

}  // namespace pdom
