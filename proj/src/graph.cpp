#include "xclique/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace xclique {

namespace {

// num_pairs(n) masks fit a uint64 for n <= 11.
int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  AdjacencyLists lists(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    lists[e.u].push_back(e.v);
    lists[e.v].push_back(e.u);
  }
  *this = counting_sort_adjacency(lists);
}

Graph counting_sort_adjacency(const AdjacencyLists& lists) {
  const std::size_t n = lists.size();
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : lists[v]) {
      if (w >= n) throw GraphError("neighbor id " + std::to_string(w) + " out of range");
      if (w == v) throw GraphError("self-loop at vertex " + std::to_string(v));
      ++g.offsets_[w + 1];
    }
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(g.offsets_[n]);

  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : lists[v]) g.targets_[fill[w]++] = static_cast<Vertex>(v);
  }

  // Bucket w now holds every v listing w, ascending. Simplicity requires the
  // buckets to be duplicate-free and to coincide with the input lists as sets.
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    if (std::adjacent_find(first, last) != last) {
      throw GraphError("parallel edge at vertex " + std::to_string(v));
    }
    if (static_cast<std::size_t>(last - first) != lists[v].size()) {
      throw GraphError("asymmetric adjacency at vertex " + std::to_string(v));
    }
  }
  // Equal sizes plus duplicate-free buckets: u in bucket(v) iff v in list(u).
  // Check the converse membership list(v) ⊆ bucket(v).
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    for (Vertex w : lists[v]) {
      if (!std::binary_search(first, last, w)) {
        throw GraphError("asymmetric adjacency between " + std::to_string(v) + " and " +
                         std::to_string(w));
      }
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  check(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order(); ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::size_t Graph::min_degree() const {
  if (order() == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < order(); ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::validate(const Graph& g) const {
  if (!members_.empty() && members_.back() >= g.order()) {
    throw GraphError("vertex set member " + std::to_string(members_.back()) + " out of range");
  }
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

bool is_adjacent(const Graph& g, Vertex u, Vertex v) { return g.adjacent(u, v); }

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> parts;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> part;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    parts.emplace_back(std::move(part));
  }
  return parts;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.order(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = local[w];
      if (j != kNoVertex && i < j) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  return Graph(vertices.size(), edges);
}

BipartiteResult is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  BipartiteResult result;
  std::vector<std::int8_t> color(n, -1);
  std::vector<Vertex> parent(n, kNoVertex);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = static_cast<std::int8_t>(1 - color[v]);
          parent[w] = v;
          queue.push(w);
        } else if (color[w] == color[v]) {
          // Same BFS layer parity: tree paths to the common ancestor plus vw
          // close an odd walk.
          std::vector<Vertex> up_v{v}, up_w{w};
          std::vector<bool> on_v(n, false);
          for (Vertex x = v; x != kNoVertex; x = parent[x]) on_v[x] = true;
          Vertex meet = w;
          while (!on_v[meet]) meet = parent[meet];
          up_v.clear();
          for (Vertex x = v; x != meet; x = parent[x]) up_v.push_back(x);
          up_v.push_back(meet);
          up_w.clear();
          for (Vertex x = w; x != meet; x = parent[x]) up_w.push_back(x);
          // walk: meet .. v (reverse of up_v), then w .. back to meet
          std::vector<Vertex> walk(up_v.rbegin(), up_v.rend());
          walk.insert(walk.end(), up_w.begin(), up_w.end());
          walk.push_back(meet);
          result.odd_walk = std::move(walk);
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  result.color.assign(color.begin(), color.end());
  return result;
}

bool dominates(const Graph& g, const VertexSet& s) {
  s.validate(g);
  std::vector<bool> covered(g.order(), false);
  for (Vertex v : s) {
    covered[v] = true;
    for (Vertex w : g.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

bool mask_connected(int n, std::uint64_t mask) {
  if (n <= 1) return true;
  std::uint32_t rows[16] = {};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (mask >> pair_index(n, i, j) & 1U) {
        rows[i] |= 1U << j;
        rows[j] |= 1U << i;
      }
    }
  }
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier >> v & 1U) next |= rows[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1U << n) - 1;
}

std::size_t enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_connected_graphs: n must be in 1..7");
  const int pairs = n * (n - 1) / 2;
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (!mask_connected(n, mask)) continue;
    visit(graph_from_mask(n, mask));
    ++count;
  }
  return count;
}

}  // namespace xclique
