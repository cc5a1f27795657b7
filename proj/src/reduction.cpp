#include "xclique/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "xclique/recognizer.hpp"

namespace xclique {

namespace {

bool in_gadget(Vertex h, Vertex u) { return h / 9 == u; }

// Vertex of H_u adjacent to a vertex of H_v, v a neighbor of u.
Vertex gadget_port(const ReductionInstance& inst, Vertex u, Vertex v) {
  for (Vertex h : inst.gadget_index[u]) {
    for (Vertex w : inst.h.neighbors(h)) {
      if (in_gadget(w, v)) return h;
    }
  }
  throw std::logic_error("gadget_port: gadgets are not joined");
}

}  // namespace

ReductionInstance build_reduction(const Graph& g, std::size_t ell) {
  if (g.max_degree() > 3) throw std::invalid_argument("build_reduction: maximum degree exceeds 3");
  ReductionInstance inst;
  inst.source = g;
  inst.ell = ell;
  Expansion first = k_expand(g, 3);
  Expansion second = k_expand(first.graph, 3);
  inst.gprime = std::move(first.graph);
  inst.first_labeling = std::move(first.labeling);
  inst.h = std::move(second.graph);
  inst.second_labeling = std::move(second.labeling);
  inst.ell_prime = 2 * g.order() + ell;
  inst.gadget_index.resize(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex k = 0; k < 9; ++k) inst.gadget_index[u][k] = 9 * u + k;
  }
  return inst;
}

std::array<Vertex, 3> outer_vertices(const ReductionInstance& inst, Vertex u) {
  std::array<Vertex, 3> out{};
  std::size_t count = 0;
  for (Vertex h : inst.gadget_index.at(u)) {
    const Role role = inst.second_labeling.role[h];
    const bool inner = role.is_port() && inst.first_labeling.clique_of[role.index] == u;
    if (!inner) out.at(count++) = h;
  }
  return out;
}

VertexSet forward_map(const ReductionInstance& inst, const VertexSet& d) {
  const Graph& g = inst.source;
  d.validate(g);
  if (!dominates(g, d)) throw std::invalid_argument("forward_map: set does not dominate the source graph");
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (d.contains(u)) {
      for (Vertex h : outer_vertices(inst, u)) out.push_back(h);
      continue;
    }
    Vertex dominator = kNoVertex;
    for (Vertex v : g.neighbors(u)) {
      if (d.contains(v)) {
        dominator = v;
        break;
      }
    }
    if (dominator == kNoVertex) throw std::logic_error("forward_map: no dominator edge");
    const Vertex x = gadget_port(inst, u, dominator);
    std::vector<Vertex> near{x};
    for (Vertex w : inst.h.neighbors(x)) {
      if (in_gadget(w, u)) near.push_back(w);
    }
    std::vector<Vertex> far;
    for (std::size_t i = 1; i < near.size(); ++i) {
      for (Vertex w : inst.h.neighbors(near[i])) {
        if (in_gadget(w, u) && std::find(near.begin(), near.end(), w) == near.end() &&
            std::find(far.begin(), far.end(), w) == far.end()) {
          far.push_back(w);
        }
      }
    }
    if (far.size() != 2) throw std::logic_error("forward_map: gadget shape is broken");
    out.insert(out.end(), far.begin(), far.end());
  }
  return VertexSet(std::move(out));
}

VertexSet backward_extract(const ReductionInstance& inst, const VertexSet& dprime) {
  dprime.validate(inst.h);
  if (!dominates(inst.h, dprime)) throw std::invalid_argument("backward_extract: set does not dominate H");
  std::vector<std::size_t> count(inst.source.order(), 0);
  for (Vertex h : dprime) ++count[h / 9];
  std::vector<Vertex> out;
  for (Vertex u = 0; u < inst.source.order(); ++u) {
    if (count[u] >= 3) out.push_back(u);
  }
  return VertexSet(std::move(out));
}

ReductionReport verify_reduction_identity(const Graph& g, std::size_t budget) {
  const ReductionInstance inst = build_reduction(g, 0);
  const std::size_t n = g.order();
  ReductionReport r;
  const DominationResult source = dominate_exact(g, budget);
  const DominationResult target = dominate_exact(inst.h, budget);
  r.gamma_source = source.size;
  r.gamma_h = target.size;
  r.expected = 2 * n + source.size;
  r.identity = r.gamma_h == r.expected;

  const VertexSet forward = forward_map(inst, source.set);
  r.forward_size = forward.size();
  r.forward_ok = dominates(inst.h, forward) && r.forward_size == 2 * n + source.size;

  const VertexSet back = backward_extract(inst, target.set);
  r.backward_ok = dominates(g, back) && back.size() + 2 * n <= target.size;
  return r;
}

GadgetReport check_gadget_claims(const ReductionInstance& inst, std::size_t budget, std::size_t max_sets) {
  GadgetReport r;
  r.isolated_gamma = dominate_exact(k_expand(complete(3), 3).graph, budget).size;
  const auto sets = all_minimum_dominating_sets(inst.h, budget, max_sets);
  r.sets_checked = sets.size();
  r.counts_ok = true;
  r.spillover_ok = true;
  const std::size_t n = inst.source.order();
  for (const VertexSet& s : sets) {
    std::vector<std::size_t> count(n, 0);
    for (Vertex h : s) ++count[h / 9];
    for (Vertex u = 0; u < n; ++u) {
      if (count[u] < 2) r.counts_ok = false;
      if (count[u] != 2) continue;
      // vertices of H_u not dominated from inside H_u
      std::vector<Vertex> missed;
      for (Vertex h : inst.gadget_index[u]) {
        bool inside = s.contains(h);
        for (Vertex w : inst.h.neighbors(h)) inside = inside || (in_gadget(w, u) && s.contains(w));
        if (!inside) missed.push_back(h);
      }
      bool spilled = missed.size() == 1;
      if (spilled) {
        spilled = false;
        for (Vertex w : inst.h.neighbors(missed[0])) {
          if (!in_gadget(w, u) && s.contains(w) && count[w / 9] >= 3) spilled = true;
        }
      }
      if (!spilled) r.spillover_ok = false;
    }
  }
  return r;
}

BipartitePreimage bipartite_preimage(const Graph& root, const ExpansionLabeling& labeling) {
  const std::size_t n = root.order();
  const std::vector<Edge> root_edges = root.edges();
  const std::size_t h_order = labeling.clique_of.size();
  std::vector<Edge> b_edges(h_order);
  Vertex next_slot = static_cast<Vertex>(n + root_edges.size());
  for (Vertex h = 0; h < h_order; ++h) {
    const Vertex i = labeling.clique_of[h];
    const Role role = labeling.role[h];
    if (role.is_port()) {
      const Edge e{std::min(i, role.index), std::max(i, role.index)};
      const auto at = std::lower_bound(root_edges.begin(), root_edges.end(), e) - root_edges.begin();
      b_edges[h] = {i, static_cast<Vertex>(n + at)};
    } else {
      b_edges[h] = {i, next_slot++};
    }
  }
  BipartitePreimage out;
  out.b = Graph(next_slot, b_edges);
  const std::vector<Edge> canonical = out.b.edges();
  out.edge_of.resize(h_order);
  for (Vertex h = 0; h < h_order; ++h) {
    out.edge_of[h] = std::lower_bound(canonical.begin(), canonical.end(), b_edges[h]) - canonical.begin();
  }
  return out;
}

StructuralReport check_structural_claims(const ReductionInstance& inst) {
  StructuralReport r;
  const Graph& h = inst.h;
  r.h_bipartite = is_bipartite(h).bipartite;

  const BipartitePreimage pre = bipartite_preimage(inst.gprime, inst.second_labeling);
  const Graph line = line_graph(pre.b);
  bool same = is_bipartite(pre.b).bipartite && line.order() == h.order() && line.size() == h.size();
  for (const Edge& e : h.edges()) {
    if (!same) break;
    same = line.adjacent(static_cast<Vertex>(pre.edge_of[e.u]), static_cast<Vertex>(pre.edge_of[e.v]));
  }
  r.line_of_bipartite = same;

  const Graph& g = inst.source;
  r.source_cubic = g.order() > 0 && g.min_degree() == 3 && g.max_degree() == 3;
  r.h_cubic = h.order() > 0 && h.min_degree() == 3 && h.max_degree() == 3;

  const Recognition rec = recognize(h);
  if (accepted(rec)) {
    const auto& cert = std::get<RootCertificate>(rec);
    r.recognized = verify_certificate(h, cert) &&
                   std::all_of(cert.f.f.begin(), cert.f.f.end(), [](std::uint32_t k) { return k == 3; });
  }
  return r;
}

}  // namespace xclique
