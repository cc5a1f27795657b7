#include "xclique/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace xclique {

ExpansionSpec ExpansionSpec::degrees(const Graph& g) {
  ExpansionSpec spec;
  spec.f.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) spec.f[v] = static_cast<std::uint32_t>(g.degree(v));
  return spec;
}

void ExpansionSpec::validate(const Graph& g) const {
  if (f.size() != g.order()) {
    throw GraphError("expansion spec has " + std::to_string(f.size()) + " entries for a graph of order " +
                     std::to_string(g.order()));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] == 0) throw GraphError("f(" + std::to_string(v) + ") = 0; clique sizes must be positive");
    if (f[v] < g.degree(v)) {
      throw GraphError("f(" + std::to_string(v) + ") = " + std::to_string(f[v]) + " is below deg = " +
                       std::to_string(g.degree(v)));
    }
  }
}

bool ExpansionSpec::valid_for(const Graph& g) const {
  if (f.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] == 0 || f[v] < g.degree(v)) return false;
  }
  return true;
}

Expansion expand(const Graph& g, const ExpansionSpec& spec) {
  spec.validate(g);
  const std::size_t n = g.order();
  Expansion out;
  ExpansionLabeling& lab = out.labeling;
  lab.first.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) lab.first[i + 1] = lab.first[i] + spec.f[i];
  const std::size_t total = lab.first[n];
  lab.clique_of.resize(total);
  lab.role.resize(total);

  std::vector<Edge> edges;
  std::size_t clique_edges = 0;
  for (std::size_t i = 0; i < n; ++i) clique_edges += std::size_t{spec.f[i]} * (spec.f[i] - 1) / 2;
  edges.reserve(clique_edges + g.size());

  for (Vertex i = 0; i < n; ++i) {
    const Vertex base = lab.first[i];
    const auto nbrs = g.neighbors(i);
    for (Vertex k = 0; k < spec.f[i]; ++k) {
      lab.clique_of[base + k] = i;
      lab.role[base + k] = k < nbrs.size() ? Role::port(nbrs[k]) : Role::simplicial(k - static_cast<Vertex>(nbrs.size()));
      for (Vertex l = k + 1; l < spec.f[i]; ++l) edges.push_back({base + k, base + l});
    }
  }
  for (const Edge& e : g.edges()) {
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    auto ku = static_cast<Vertex>(std::lower_bound(nu.begin(), nu.end(), e.v) - nu.begin());
    auto kv = static_cast<Vertex>(std::lower_bound(nv.begin(), nv.end(), e.u) - nv.begin());
    PortPair pp{lab.first[e.u] + ku, lab.first[e.v] + kv};
    lab.port_of.push_back(pp);
    edges.push_back({pp.in_u, pp.in_v});
  }
  out.graph = Graph(total, edges);
  return out;
}

Expansion inflate(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) throw GraphError("inflate: vertex " + std::to_string(v) + " is isolated");
  }
  return expand(g, ExpansionSpec::degrees(g));
}

Expansion k_expand(const Graph& g, std::uint32_t k) {
  if (k < 1 || k < g.max_degree()) {
    throw GraphError("k_expand: k = " + std::to_string(k) + " is below max(1, max degree = " +
                     std::to_string(g.max_degree()) + ")");
  }
  return expand(g, ExpansionSpec::uniform(g.order(), k));
}

Graph sierpinski(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("sierpinski: p and q must be >= 1");
  // powers[t] = q^t
  std::vector<std::uint64_t> powers{1};
  for (int t = 1; t <= p; ++t) {
    powers.push_back(powers.back() * static_cast<std::uint64_t>(q));
    if (powers.back() >= std::numeric_limits<Vertex>::max() / 2) {
      throw std::overflow_error("sierpinski: q^p exceeds the vertex id range");
    }
  }
  const std::uint64_t n = powers[p];
  std::vector<Edge> edges;
  // Position h (1-based) is the first coordinate where u and w differ, with
  // u = prefix . a . b^(p-h) and w = prefix . b . a^(p-h).
  for (int h = 1; h <= p; ++h) {
    const std::uint64_t tail = powers[p - h];
    const std::uint64_t repunit = q == 1 ? 0 : (tail - 1) / static_cast<std::uint64_t>(q - 1);
    for (std::uint64_t prefix = 0; prefix < powers[h - 1]; ++prefix) {
      const std::uint64_t head = prefix * powers[p - h + 1];
      for (int a = 0; a < q; ++a) {
        for (int b = a + 1; b < q; ++b) {
          auto u = static_cast<Vertex>(head + static_cast<std::uint64_t>(a) * tail + static_cast<std::uint64_t>(b) * repunit);
          auto w = static_cast<Vertex>(head + static_cast<std::uint64_t>(b) * tail + static_cast<std::uint64_t>(a) * repunit);
          edges.push_back({u, w});
        }
      }
    }
  }
  return Graph(n, edges);
}

std::vector<int> sierpinski_tuple(Vertex id, int p, int q) {
  std::vector<int> tuple(static_cast<std::size_t>(p));
  for (int t = p - 1; t >= 0; --t) {
    tuple[static_cast<std::size_t>(t)] = static_cast<int>(id % static_cast<Vertex>(q)) + 1;
    id /= static_cast<Vertex>(q);
  }
  return tuple;
}

Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw GraphError("line_graph: graph has no edges");
  const auto edges = g.edges();
  // incident[v] lists edge ids at v.
  std::vector<std::vector<Vertex>> incident(g.order());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(static_cast<Vertex>(e));
    incident[edges[e].v].push_back(static_cast<Vertex>(e));
  }
  std::vector<Edge> out;
  for (const auto& list : incident) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) out.push_back({list[a], list[b]});
    }
  }
  return Graph(edges.size(), out);
}

Graph subdivision(const Graph& g) {
  const auto edges = g.edges();
  std::vector<Edge> out;
  out.reserve(2 * edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto x = static_cast<Vertex>(g.order() + e);
    out.push_back({edges[e].u, x});
    out.push_back({edges[e].v, x});
  }
  return Graph(g.order() + edges.size(), out);
}

Graph subdivided_line_graph(const Graph& g) {
  if (g.size() == 0) throw GraphError("subdivided_line_graph: graph has no edges");
  return line_graph(subdivision(g));
}

Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return Graph(n, edges);
}

Graph circular_ladder(std::size_t k) {
  if (k < 3) throw std::invalid_argument("circular_ladder: k must be >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = static_cast<Vertex>(i), b = static_cast<Vertex>((i + 1) % k);
    edges.push_back({a, b});
    edges.push_back({static_cast<Vertex>(k + a), static_cast<Vertex>(k + b)});
    edges.push_back({a, static_cast<Vertex>(k + a)});
  }
  return Graph(2 * k, edges);
}

Graph empty_graph(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.order() + b.order(), edges);
}

}  // namespace xclique
