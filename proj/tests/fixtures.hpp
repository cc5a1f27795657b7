#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "xclique/builders.hpp"
#include "xclique/graph.hpp"

namespace fixtures {

using namespace xclique;

// a=0 b=1 c=2 d=3 e=4: ab, bd, de, ec, ac, bc.
inline Graph figure_graph() { return Graph(5, {{0, 1}, {1, 3}, {3, 4}, {4, 2}, {0, 2}, {1, 2}}); }

inline Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
inline Graph butterfly() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

// Triangles {0,1,2} and {4,5,6} joined by the chain 2 - 3 - 4.
inline Graph triangles_chain1() { return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}); }
// Triangles {0,1,2} and {5,6,7} joined by the chain 2 - 3 - 4 - 5.
inline Graph triangles_chain2() {
  return Graph(8, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
}

// f(v) uniform in [max(1, d), d + extra].
inline ExpansionSpec random_spec(const Graph& g, std::mt19937_64& rng, std::uint32_t extra = 2) {
  ExpansionSpec spec;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::uint32_t>(g.degree(v));
    const std::uint32_t lo = std::max<std::uint32_t>(1, d);
    spec.f.push_back(lo + static_cast<std::uint32_t>(rng() % (d + extra - lo + 1)));
  }
  return spec;
}

// Every connected labeled graph on 1..max_n vertices.
template <class Visit>
void for_connected_graphs(int max_n, Visit&& visit, int min_n = 1) {
  for (int n = min_n; n <= max_n; ++n) enumerate_connected_graphs(n, visit);
}

}  // namespace fixtures
