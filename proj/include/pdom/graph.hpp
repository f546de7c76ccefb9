// Core value types: vertex sets, exact proportions and simple graphs.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdom {

using Vertex = int;

/// Largest supported graph order. Neighborhoods are single 64-bit words.
inline constexpr int kMaxOrder = 64;

/// Raised when a graph (or a product of graphs) would exceed kMaxOrder.
class CapacityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of {0, ..., 63}.
///
/// Ordering is lexicographic on the ascending member sequence, so
/// {0,1} < {0,1,2} < {0,2} < {1}. This is the order in which minimum
/// sets are enumerated.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members);

  /// {0, ..., n-1}
  static VertexSet first(int n);

  constexpr std::uint64_t bits() const { return bits_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  /// "{0,3,5}"; "{}" when empty.
  std::string to_string() const;

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend bool operator==(VertexSet, VertexSet) = default;
  friend std::strong_ordering operator<=>(VertexSet a, VertexSet b);

 private:
  std::uint64_t bits_ = 0;
};

/// Exact rational p = num/den in [0, 1], kept in lowest terms.
class Proportion {
 public:
  constexpr Proportion() = default;
  Proportion(long long num, long long den);

  /// Accepts exactly "num/den" with decimal integers; "0.5" and "1" are rejected.
  static Proportion parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  std::string to_string() const;

  friend bool operator==(const Proportion&, const Proportion&) = default;
  friend std::strong_ordering operator<=>(const Proportion& a, const Proportion& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Immutable simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  Graph() = default;

  /// Throws std::invalid_argument on loops or out-of-range endpoints and
  /// CapacityError when order exceeds kMaxOrder. Repeated edges collapse.
  Graph(int order, const std::vector<Edge>& edges);

  /// Builds from raw adjacency words; validates symmetry and loop-freeness.
  static Graph from_adjacency(std::vector<std::uint64_t> adjacency);

  int order() const { return static_cast<int>(adj_.size()); }
  bool empty() const { return adj_.empty(); }
  VertexSet vertices() const { return VertexSet::first(order()); }

  bool adjacent(Vertex u, Vertex v) const;
  /// Open neighborhood N(v).
  VertexSet neighbors(Vertex v) const;
  /// N[v] = N(v) + v.
  VertexSet closed_neighborhood(Vertex v) const;
  /// N[S], the union of N[u] over u in S.
  VertexSet closed_neighborhood(VertexSet s) const;
  /// Vertices at distance exactly two from v, i.e. N(N[v]) minus N[v].
  VertexSet distance_two(Vertex v) const;
  /// Vertices within distance two of v, i.e. N[N[v]].
  VertexSet ball_two(Vertex v) const;

  int degree(Vertex v) const;
  int max_degree() const;
  int min_degree() const;
  int edge_count() const;
  bool connected() const;

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Image of the graph under the relabeling v -> perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> adj_;
};

/// G □ H with vertex (i, j) stored at index i * |H| + j.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Linear index of (i, j) in cartesian_product(g, h).
inline Vertex product_vertex(const Graph& h, Vertex i, Vertex j) {
  return i * h.order() + j;
}

}  // namespace pdom
