#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "xclique/graph.hpp"

namespace xclique {

// Clique size per root vertex. Valid for g when f(v) >= max(1, deg(v)).
struct ExpansionSpec {
  std::vector<std::uint32_t> f;

  static ExpansionSpec uniform(std::size_t n, std::uint32_t k) { return {std::vector<std::uint32_t>(n, k)}; }
  static ExpansionSpec degrees(const Graph& g);

  // Throws GraphError naming the first offending vertex.
  void validate(const Graph& g) const;
  bool valid_for(const Graph& g) const;

  friend bool operator==(const ExpansionSpec&, const ExpansionSpec&) = default;
};

// Role of an expanded-graph vertex inside its clique V_i.
struct Role {
  enum class Kind : std::uint8_t { Port, Simplicial };
  Kind kind = Kind::Simplicial;
  // Port: the root neighbor j this vertex is joined toward.
  // Simplicial: slot index 0..k_i-1.
  Vertex index = 0;

  static Role port(Vertex toward) { return {Kind::Port, toward}; }
  static Role simplicial(Vertex slot) { return {Kind::Simplicial, slot}; }
  bool is_port() const { return kind == Kind::Port; }

  friend bool operator==(const Role&, const Role&) = default;
};

struct PortPair {
  Vertex in_u;  // port of V_u toward v
  Vertex in_v;  // port of V_v toward u
};

struct ExpansionLabeling {
  std::vector<Vertex> clique_of;  // H-vertex -> root vertex
  std::vector<Role> role;         // H-vertex -> role within its clique
  std::vector<PortPair> port_of;  // aligned with root.edges(): edge (u,v), u < v
  std::vector<Vertex> first;      // V_i occupies [first[i], first[i+1])
};

struct Expansion {
  Graph graph;
  ExpansionLabeling labeling;
};

// Root vertex i becomes the contiguous block V_i of f(i) vertices: first the
// ports toward neighbors j1 < j2 < ..., then the simplicial slots.
Expansion expand(const Graph& g, const ExpansionSpec& spec);
// f = degree sequence; requires min degree >= 1.
Expansion inflate(const Graph& g);
// f == k; requires k >= max(1, max degree).
Expansion k_expand(const Graph& g, std::uint32_t k);

// Vertices are p-tuples over {1..q}; vertex id is the tuple read as a base-q
// number with digit d mapped to d-1, first coordinate most significant.
Graph sierpinski(int p, int q);
std::vector<int> sierpinski_tuple(Vertex id, int p, int q);

// Vertex e of the result is edge e of g.edges().
Graph line_graph(const Graph& g);
// Vertices 0..n-1 are g's; vertex n+e subdivides edge e of g.edges().
Graph subdivision(const Graph& g);
Graph subdivided_line_graph(const Graph& g);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
// Prism C_k x K_2: outer cycle 0..k-1, inner cycle k..2k-1, rung i -- k+i.
Graph circular_ladder(std::size_t k);
Graph empty_graph(std::size_t n);
// Vertex-disjoint union; b's ids are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace xclique
