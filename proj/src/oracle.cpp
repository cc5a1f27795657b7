#include "xclique/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xclique {

std::string to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::Claw: return "claw";
    case Pattern::Diamond: return "diamond";
    case Pattern::C4: return "c4";
    case Pattern::Butterfly: return "butterfly";
    case Pattern::OddHole: return "odd_hole";
    case Pattern::BadChain: return "bad_chain";
  }
  return "unknown";
}

namespace {

// Dense adjacency bit matrix.
class BitMatrix {
 public:
  explicit BitMatrix(const Graph& g) : n_(g.order()), words_((n_ + 63) / 64), bits_(n_ * words_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g.neighbors(u)) bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  bool operator()(Vertex u, Vertex v) const { return bits_[u * words_ + v / 64] >> (v % 64) & 1U; }

 private:
  std::size_t n_, words_;
  std::vector<std::uint64_t> bits_;
};

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b) {
  auto na = g.neighbors(a), nb = g.neighbors(b);
  std::vector<Vertex> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

bool is_cycle_graph(const Graph& h) {
  if (h.order() < 3) return false;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) != 2) return false;
  }
  return is_connected(h);
}

}  // namespace

std::optional<ForbiddenWitness> find_claw(const Graph& h) {
  const BitMatrix adj(h);
  for (Vertex v = 0; v < h.order(); ++v) {
    auto nv = h.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        if (adj(nv[i], nv[j])) continue;
        for (std::size_t k = j + 1; k < nv.size(); ++k) {
          if (!adj(nv[i], nv[k]) && !adj(nv[j], nv[k])) {
            return ForbiddenWitness{Pattern::Claw, {v, nv[i], nv[j], nv[k]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_diamond(const Graph& h) {
  const BitMatrix adj(h);
  for (const Edge& e : h.edges()) {
    const auto common = common_neighbors(h, e.u, e.v);
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (!adj(common[i], common[j])) return ForbiddenWitness{Pattern::Diamond, {e.u, e.v, common[i], common[j]}};
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_c4(const Graph& h) {
  const BitMatrix adj(h);
  for (Vertex a = 0; a < h.order(); ++a) {
    auto na = h.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      const Vertex b = na[i];
      if (b < a) continue;
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        const Vertex d = na[j];
        if (adj(b, d)) continue;
        for (Vertex c : common_neighbors(h, b, d)) {
          if (c > a && !adj(a, c)) return ForbiddenWitness{Pattern::C4, {a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_butterfly(const Graph& h) {
  const BitMatrix adj(h);
  for (Vertex v = 0; v < h.order(); ++v) {
    auto nv = h.neighbors(v);
    if (nv.size() < 4) continue;
    // edges inside N(v), lexicographic
    std::vector<Edge> inner;
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        if (adj(nv[i], nv[j])) inner.push_back({nv[i], nv[j]});
      }
    }
    for (std::size_t x = 0; x < inner.size(); ++x) {
      for (std::size_t y = x + 1; y < inner.size(); ++y) {
        const Edge p = inner[x], q = inner[y];
        if (q.u <= p.u || q.u == p.v || q.v == p.v) continue;
        if (adj(p.u, q.u) || adj(p.u, q.v) || adj(p.v, q.u) || adj(p.v, q.v)) continue;
        return ForbiddenWitness{Pattern::Butterfly, {v, p.u, p.v, q.u, q.v}};
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_odd_hole(const Graph& h, std::size_t budget) {
  const std::size_t n = h.order();
  if (n > budget) {
    throw BudgetExceeded("find_odd_hole: order " + std::to_string(n) + " exceeds budget " + std::to_string(budget));
  }
  const BitMatrix adj(h);
  std::vector<Vertex> path;
  // Extends an induced path from path[0] (its smallest vertex) to exactly
  // `len` vertices whose last vertex closes back to path[0].
  auto extend = [&](auto&& self, std::size_t len) -> bool {
    const std::size_t k = path.size();
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex x : h.neighbors(last)) {
      if (x <= s) continue;
      if (std::find(path.begin(), path.end(), x) != path.end()) continue;
      bool ok = true;
      // x may touch only `last` among path[1..k-2]; it must touch s iff it closes.
      for (std::size_t i = 1; i + 1 < k && ok; ++i) ok = !adj(x, path[i]);
      if (!ok) continue;
      const bool closes = k >= 2 && adj(x, s);
      if (k + 1 == len) {
        if (!closes || k == 1 || x < path[1]) continue;
        path.push_back(x);
        return true;
      }
      if (closes) continue;
      path.push_back(x);
      if (self(self, len)) return true;
      path.pop_back();
    }
    return false;
  };
  for (std::size_t len = 5; len <= n; len += 2) {
    for (Vertex s = 0; s < n; ++s) {
      path.assign(1, s);
      if (extend(extend, len)) return ForbiddenWitness{Pattern::OddHole, path};
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_bad_chain(const Graph& h) {
  const std::size_t n = h.order();
  std::vector<bool> seen(n, false);
  std::optional<ForbiddenWitness> best;
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] || h.degree(v) != 2) continue;
    // Grow the run of degree-2 vertices through v in both directions.
    std::vector<Vertex> ends[2];
    Vertex terminal[2] = {kNoVertex, kNoVertex};
    bool looped = false;
    seen[v] = true;
    for (int side = 0; side < 2 && !looped; ++side) {
      Vertex prev = v, cur = h.neighbors(v)[side];
      while (true) {
        if (cur == v) {
          looped = true;
          break;
        }
        if (h.degree(cur) != 2) {
          terminal[side] = cur;
          break;
        }
        seen[cur] = true;
        ends[side].push_back(cur);
        auto nc = h.neighbors(cur);
        const Vertex next = nc[0] == prev ? nc[1] : nc[0];
        prev = cur;
        cur = next;
      }
    }
    if (looped) continue;  // a cycle component has no terminals
    const std::size_t internal = 1 + ends[0].size() + ends[1].size();
    if (internal % 2 == 0 || h.degree(terminal[0]) < 3 || h.degree(terminal[1]) < 3) continue;
    // the degree-2 corner of a triangle lies in its terminals' clique
    if (internal == 1 && h.adjacent(terminal[0], terminal[1])) continue;
    std::vector<Vertex> chain{terminal[0]};
    chain.insert(chain.end(), ends[0].rbegin(), ends[0].rend());
    chain.push_back(v);
    chain.insert(chain.end(), ends[1].begin(), ends[1].end());
    chain.push_back(terminal[1]);
    if (chain.back() < chain.front()) std::reverse(chain.begin(), chain.end());
    if (!best || chain < best->vertices) best = ForbiddenWitness{Pattern::BadChain, std::move(chain)};
  }
  return best;
}

Graph pattern_graph(Pattern pattern) {
  switch (pattern) {
    case Pattern::Claw: return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    case Pattern::Diamond: return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case Pattern::C4: return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case Pattern::Butterfly: return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    default: throw std::invalid_argument("pattern_graph: " + to_string(pattern) + " has no fixed shape");
  }
}

bool witness_valid(const Graph& h, const ForbiddenWitness& w) {
  const auto& vs = w.vertices;
  for (Vertex v : vs) {
    if (v >= h.order()) return false;
  }
  if (w.kind == Pattern::BadChain) {
    // the two terminals may coincide
    const std::size_t k = vs.size();
    if (k < 3 || k % 2 == 0) return false;
    if (VertexSet(std::vector<Vertex>(vs.begin(), vs.end() - 1)).size() != k - 1) return false;
    if (vs.back() != vs.front() && VertexSet(std::vector<Vertex>(vs.begin() + 1, vs.end())).size() != k - 1) return false;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (!h.adjacent(vs[i], vs[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < k; ++i) {
      if (h.degree(vs[i]) != 2) return false;
    }
    if (k == 3 && h.adjacent(vs.front(), vs.back())) return false;
    return h.degree(vs.front()) >= 3 && h.degree(vs.back()) >= 3;
  }
  if (VertexSet(vs).size() != vs.size()) return false;
  const Graph induced = induced_subgraph(h, vs);

  if (w.kind == Pattern::OddHole) {
    if (vs.size() < 5 || vs.size() % 2 == 0) return false;
    for (Vertex v = 0; v < induced.order(); ++v) {
      if (induced.degree(v) != 2) return false;
    }
    return is_connected(induced);
  }

  const Graph target = pattern_graph(w.kind);
  if (target.order() != induced.order() || target.size() != induced.size()) return false;
  std::vector<Vertex> perm(target.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (const Edge& e : target.edges()) {
      if (!induced.adjacent(perm[e.u], perm[e.v])) {
        same = false;
        break;
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_simplicial(const Graph& h, Vertex v) {
  auto nv = h.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      if (!h.adjacent(nv[i], nv[j])) return false;
    }
  }
  return true;
}

std::optional<Vertex> is_1simplicial(const Graph& h, Vertex v) {
  auto nv = h.neighbors(v);
  for (Vertex u : nv) {
    bool ok = true;
    for (std::size_t i = 0; i < nv.size() && ok; ++i) {
      if (nv[i] == u) continue;
      if (h.adjacent(u, nv[i])) ok = false;
      for (std::size_t j = i + 1; j < nv.size() && ok; ++j) {
        if (nv[j] != u && !h.adjacent(nv[i], nv[j])) ok = false;
      }
    }
    if (ok) return u;
  }
  return std::nullopt;
}

bool characterization_accepts(const Graph& h) {
  if (!is_connected(h)) throw std::invalid_argument("characterization_accepts: graph must be connected");
  if (is_cycle_graph(h)) {
    const std::size_t n = h.order();
    return n == 3 || (n % 2 == 0 && n >= 6);
  }
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!is_simplicial(h, v) && !is_1simplicial(h, v)) return false;
  }
  return !find_bad_chain(h) && !find_c4(h);
}

bool corollary_accepts(const Graph& h, std::size_t budget) {
  return !find_bad_chain(h) && !find_butterfly(h) && !find_claw(h) && !find_c4(h) && !find_diamond(h) &&
         !find_odd_hole(h, budget);
}

}  // namespace xclique
