#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xclique/graph.hpp"

namespace xclique {

// Brute-force detectors for the forbidden structures of expanded-clique
// graphs. Desk scale only: claw, diamond and C4 scans are O(n^4), butterfly
// O(n^5), odd holes exponential under a vertex budget.

enum class Pattern : std::uint8_t { Claw, Diamond, C4, Butterfly, OddHole, BadChain };

std::string to_string(Pattern pattern);

// Vertex order per kind:
//   Claw      center, leaves a < b < c
//   Diamond   chord endpoints x < y, then the two non-adjacent tips a < b
//   C4        cycle order a, b, c, d with a the smallest vertex and b < d
//   Butterfly center, first edge a < b, second edge c < d, a < c
//   OddHole   cycle order starting at its smallest vertex, second < last
//   BadChain  u1 .. uk with u1 <= uk
// Every detector returns the lexicographically first witness in that order.
struct ForbiddenWitness {
  Pattern kind;
  std::vector<Vertex> vertices;
};

inline constexpr std::size_t kDefaultOddHoleBudget = 12;

std::optional<ForbiddenWitness> find_claw(const Graph& h);
std::optional<ForbiddenWitness> find_diamond(const Graph& h);
std::optional<ForbiddenWitness> find_c4(const Graph& h);
std::optional<ForbiddenWitness> find_butterfly(const Graph& h);
// Shortest induced odd cycle of length >= 5. Throws BudgetExceeded if n > budget.
std::optional<ForbiddenWitness> find_odd_hole(const Graph& h, std::size_t budget = kDefaultOddHoleBudget);
// Maximal run of degree-2 vertices with an odd number of members whose two
// end neighbors both have degree >= 3. A single vertex whose two neighbors
// are adjacent is a triangle corner, not a bad chain.
std::optional<ForbiddenWitness> find_bad_chain(const Graph& h);

// Re-checks that the witness vertices induce exactly the named structure.
bool witness_valid(const Graph& h, const ForbiddenWitness& witness);

// The fixed four- and five-vertex patterns, for tests and witness checks.
Graph pattern_graph(Pattern pattern);

bool is_simplicial(const Graph& h, Vertex v);
// Smallest neighbor u with N(v) - u a clique and N(u) ∩ N(v) empty.
std::optional<Vertex> is_1simplicial(const Graph& h, Vertex v);

// Local characterization on a connected graph: a cycle is accepted iff it is
// C_3 or an even C_n with n >= 6; any other graph iff every vertex is
// simplicial or 1-simplicial, every chain is good and there is no induced C4.
bool characterization_accepts(const Graph& h);

// Accepts iff h is free of bad chains, butterflies, claws, C4, diamonds and
// odd holes.
bool corollary_accepts(const Graph& h, std::size_t budget = kDefaultOddHoleBudget);

}  // namespace xclique
