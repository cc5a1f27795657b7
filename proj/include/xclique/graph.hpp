#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xclique {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised when a graph would violate simplicity (self-loop, parallel edge,
// asymmetric adjacency) or an id is out of range.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by desk-scale exact procedures when an instance exceeds their budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unsorted per-vertex neighbor lists, the raw input to counting_sort_adjacency.
using AdjacencyLists = std::vector<std::vector<Vertex>>;

// Immutable simple undirected graph in compressed sparse row form.
// Every neighbor list is strictly ascending and adjacency is symmetric.
class Graph {
 public:
  Graph() = default;

  // Vertices 0..n-1; edges may be given in either orientation.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t max_degree() const;
  std::size_t min_degree() const;

  // Canonical edge list: u < v, lexicographically ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph counting_sort_adjacency(const AdjacencyLists& lists);

  void check(Vertex v) const {
    if (v >= order()) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// Builds a graph from arbitrary-order adjacency lists with one bucket pass:
// scanning sources in ascending order and appending each source to its
// targets' buckets leaves every bucket sorted. O(n + m).
// Throws GraphError if the lists are not a simple symmetric adjacency.
Graph counting_sort_adjacency(const AdjacencyLists& lists);

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Throws GraphError if some member is not a vertex of g.
  void validate(const Graph& g) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

std::size_t degree(const Graph& g, Vertex v);
bool is_adjacent(const Graph& g, Vertex u, Vertex v);

// Parts are sorted internally and ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<std::uint8_t> color;  // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_walk;     // closed walk v0 .. vk = v0 of odd length k otherwise
};

BipartiteResult is_bipartite(const Graph& g);

// True iff N[S] = V(g).
bool dominates(const Graph& g, const VertexSet& s);

// Small-graph support for exhaustive suites. A mask packs the upper triangle
// row by row: bit index of pair (i, j), i < j, is the position of (i, j) in
// the order (0,1), (0,2), .., (0,n-1), (1,2), ...
Graph graph_from_mask(int n, std::uint64_t mask);
bool mask_connected(int n, std::uint64_t mask);

// Calls `visit` on every labeled connected simple graph on n vertices
// (1 <= n <= 7) in ascending mask order. Returns the number visited.
std::size_t enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& visit);

}  // namespace xclique
