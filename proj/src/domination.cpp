#include "xclique/domination.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace xclique {

std::string to_string(DominationMethod method) {
  switch (method) {
    case DominationMethod::Exhaustive: return "exhaustive";
    case DominationMethod::BranchAndBound: return "branch_and_bound";
    case DominationMethod::Greedy: return "greedy";
    case DominationMethod::CliqueHeuristic: return "clique_heuristic";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

void check_budget(const Graph& g, std::size_t budget, const char* who) {
  const std::size_t limit = std::min(budget, kMaxSolverOrder);
  if (g.order() > limit) {
    throw BudgetExceeded(std::string(who) + ": order " + std::to_string(g.order()) + " exceeds budget " +
                         std::to_string(limit));
  }
}

Mask bit(Vertex v) { return Mask{1} << v; }

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> closed(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    closed[v] = bit(v);
    for (Vertex w : g.neighbors(v)) closed[v] |= bit(w);
  }
  return closed;
}

VertexSet set_of(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return VertexSet(std::move(out));
}

Mask greedy_mask(const std::vector<Mask>& closed, Mask full) {
  Mask dominated = 0, chosen = 0;
  while (dominated != full) {
    Vertex best = 0;
    int gain = -1;
    for (Vertex v = 0; v < closed.size(); ++v) {
      const int c = std::popcount(closed[v] & ~dominated);
      if (c > gain) {
        gain = c;
        best = v;
      }
    }
    chosen |= bit(best);
    dominated |= closed[best];
  }
  return chosen;
}

// Next k-subset in colexicographic order (Gosper).
Mask next_combination(Mask x) {
  const Mask c = x & -x;
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : closed_(closed_masks(g)), full_(full_mask(g.order())) {
    ball2_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      Mask m = 0;
      for (Mask c = closed_[v]; c; c &= c - 1) m |= closed_[std::countr_zero(c)];
      ball2_[v] = m;
    }
    best_ = greedy_mask(closed_, full_);
    best_size_ = std::popcount(best_);
  }

  Mask solve() {
    search(0, 0, 0);
    return best_;
  }

  // Visits every dominating set of exactly `target` vertices once: the branch
  // taking candidate c excludes the candidates tried before it.
  template <class Visit>
  void enumerate(int target, Visit&& visit) {
    collect(0, 0, 0, 0, target, visit);
  }

 private:
  int lower_bound(Mask undominated) const {
    int cover = 0;
    for (Mask c = undominated; c; c &= c - 1) {
      // a dominator of u lies in N[u]; any vertex reaches at most |N[x]| of U
      const Vertex u = std::countr_zero(c);
      for (Mask d = closed_[u]; d; d &= d - 1) cover = std::max(cover, std::popcount(closed_[std::countr_zero(d)] & undominated));
    }
    const int count = std::popcount(undominated);
    const int by_cover = (count + cover - 1) / cover;
    int packing = 0;
    for (Mask rest = undominated; rest; ++packing) rest &= ~ball2_[std::countr_zero(rest)];
    return std::max(by_cover, packing);
  }

  void search(Mask dominated, Mask chosen, int count) {
    if (dominated == full_) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    const Mask undominated = full_ & ~dominated;
    if (count + lower_bound(undominated) >= best_size_) return;
    const Vertex v = std::countr_zero(undominated);
    Vertex candidates[64];
    int gains[64];
    int k = 0;
    for (Mask c = closed_[v]; c; c &= c - 1) {
      candidates[k] = std::countr_zero(c);
      gains[k] = std::popcount(closed_[candidates[k]] & undominated);
      ++k;
    }
    // stable by gain descending, lowest id first among equals
    for (int i = 1; i < k; ++i) {
      for (int j = i; j > 0 && gains[j] > gains[j - 1]; --j) {
        std::swap(gains[j], gains[j - 1]);
        std::swap(candidates[j], candidates[j - 1]);
      }
    }
    for (int i = 0; i < k; ++i) {
      search(dominated | closed_[candidates[i]], chosen | bit(candidates[i]), count + 1);
    }
  }

  template <class Visit>
  void collect(Mask dominated, Mask chosen, Mask forbidden, int count, int target, Visit& visit) {
    if (dominated == full_) {
      if (count == target) visit(chosen);
      return;
    }
    if (count + lower_bound(full_ & ~dominated) > target) return;
    const Vertex v = std::countr_zero(full_ & ~dominated);
    Mask tried = 0;
    for (Mask c = closed_[v] & ~forbidden; c; c &= c - 1) {
      const Vertex x = std::countr_zero(c);
      collect(dominated | closed_[x], chosen | bit(x), forbidden | tried, count + 1, target, visit);
      tried |= bit(x);
    }
  }

  std::vector<Mask> closed_;
  std::vector<Mask> ball2_;
  Mask full_;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

DominationResult dominate_exact(const Graph& g, std::size_t budget) {
  check_budget(g, budget, "dominate_exact");
  if (g.order() == 0) return {VertexSet{}, 0, true, DominationMethod::BranchAndBound};
  const Mask best = BranchAndBound(g).solve();
  return {set_of(best), static_cast<std::size_t>(std::popcount(best)), true, DominationMethod::BranchAndBound};
}

DominationResult dominate_exhaustive(const Graph& g, std::size_t budget) {
  check_budget(g, budget, "dominate_exhaustive");
  const std::size_t n = g.order();
  if (n == 0) return {VertexSet{}, 0, true, DominationMethod::Exhaustive};
  const auto closed = closed_masks(g);
  const Mask full = full_mask(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Mask last = full & ~(full >> k);
    for (Mask s = full_mask(k);; s = next_combination(s)) {
      Mask covered = 0;
      for (Mask c = s; c; c &= c - 1) covered |= closed[std::countr_zero(c)];
      if (covered == full) return {set_of(s), k, true, DominationMethod::Exhaustive};
      if (s == last) break;
    }
  }
  throw std::logic_error("dominate_exhaustive: V itself dominates");
}

DominationResult dominate_greedy(const Graph& g) {
  check_budget(g, kMaxSolverOrder, "dominate_greedy");
  const Mask chosen = greedy_mask(closed_masks(g), full_mask(g.order()));
  return {set_of(chosen), static_cast<std::size_t>(std::popcount(chosen)), false, DominationMethod::Greedy};
}

std::vector<VertexSet> all_minimum_dominating_sets(const Graph& g, std::size_t budget, std::size_t max_sets) {
  const std::size_t gamma = dominate_exact(g, budget).size;
  if (g.order() == 0) return {VertexSet{}};
  BranchAndBound search(g);
  std::vector<VertexSet> out;
  search.enumerate(static_cast<int>(gamma), [&](Mask s) {
    if (out.size() == max_sets) throw BudgetExceeded("all_minimum_dominating_sets: more than max_sets sets");
    out.push_back(set_of(s));
  });
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
  return out;
}

CliqueView CliqueView::of(const ExpansionLabeling& labeling) {
  return {labeling.clique_of, labeling.role, labeling.first.empty() ? 0 : labeling.first.size() - 1};
}

CliqueView CliqueView::of(const RootCertificate& cert) { return {cert.clique_of, cert.role, cert.cliques.size()}; }

VertexSet canonicalize_dominating_set(const Graph& h, const CliqueView& view, const VertexSet& s) {
  s.validate(h);
  if (view.clique_of.size() != h.order() || view.role.size() != h.order()) {
    throw std::invalid_argument("canonicalize_dominating_set: clique view does not match the graph");
  }
  if (!dominates(h, s)) throw std::invalid_argument("canonicalize_dominating_set: set does not dominate");

  std::map<std::pair<Vertex, Vertex>, Vertex> port;  // (part, toward) -> vertex
  for (Vertex v = 0; v < h.order(); ++v) {
    if (view.role[v].is_port()) port[{view.clique_of[v], view.role[v].index}] = v;
  }
  std::vector<std::vector<Vertex>> chosen(view.parts);
  for (Vertex v : s) chosen[view.clique_of[v]].push_back(v);

  for (std::size_t i = 0; i < view.parts; ++i) {
    auto& here = chosen[i];
    while (here.size() >= 2) {
      auto simplicial = std::find_if(here.begin(), here.end(), [&](Vertex v) { return !view.role[v].is_port(); });
      if (simplicial != here.end()) {
        here.erase(simplicial);
        continue;
      }
      auto covered = std::find_if(here.begin(), here.end(), [&](Vertex v) { return !chosen[view.role[v].index].empty(); });
      if (covered != here.end()) {
        here.erase(covered);
        continue;
      }
      const Vertex x = here.front();
      const Vertex j = view.role[x].index;
      here.erase(here.begin());
      chosen[j].push_back(port.at({j, static_cast<Vertex>(i)}));
    }
  }
  std::vector<Vertex> out;
  for (const auto& part : chosen) out.insert(out.end(), part.begin(), part.end());
  return VertexSet(std::move(out));
}

VertexSet canonicalize_dominating_set(const Graph& h, const ExpansionLabeling& labeling, const VertexSet& s) {
  return canonicalize_dominating_set(h, CliqueView::of(labeling), s);
}

VertexSet canonicalize_dominating_set(const Graph& h, const RootCertificate& cert, const VertexSet& s) {
  return canonicalize_dominating_set(h, CliqueView::of(cert), s);
}

DominationResult clique_heuristic(const Graph& h, const RootCertificate& cert) {
  if (!verify_certificate(h, cert)) throw CertificateError("clique_heuristic: certificate is not valid for the graph");
  std::vector<Vertex> pick;
  for (const auto& part : cert.cliques) {
    auto it = std::find_if(part.begin(), part.end(), [&](Vertex v) { return !cert.role[v].is_port(); });
    pick.push_back(it != part.end() ? *it : part.front());
  }
  VertexSet set(std::move(pick));
  const std::size_t size = set.size();
  return {std::move(set), size, false, DominationMethod::CliqueHeuristic};
}

bool is_two_independent(const Graph& g, const ExpansionSpec& spec, const VertexSet& s) {
  for (Vertex v : s) {
    if (v >= g.order() || spec.f.at(v) != g.degree(v)) return false;
  }
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w)) return false;
      for (Vertex x : g.neighbors(w)) {
        if (x != v && s.contains(x)) return false;
      }
    }
  }
  return true;
}

TwoIndependenceResult alpha2(const Graph& g, const ExpansionSpec& spec, std::size_t budget) {
  check_budget(g, budget, "alpha2");
  if (spec.f.size() != g.order()) throw std::invalid_argument("alpha2: spec size does not match the graph");
  const auto closed = closed_masks(g);
  Mask eligible = 0;
  std::vector<Mask> conflict(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (spec.f[v] == g.degree(v)) eligible |= bit(v);
    for (Mask c = closed[v]; c; c &= c - 1) conflict[v] |= closed[std::countr_zero(c)];
  }
  Mask best = 0;
  auto search = [&](auto&& self, Mask candidates, Mask current) -> void {
    if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best)) return;
    if (!candidates) {
      best = current;
      return;
    }
    const Vertex v = std::countr_zero(candidates);
    self(self, candidates & ~conflict[v], current | bit(v));
    self(self, candidates & ~bit(v), current);
  };
  search(search, eligible, 0);
  return {set_of(best), static_cast<std::size_t>(std::popcount(best))};
}

GammaAlphaReport check_gamma_alpha_identity(const Graph& g, const ExpansionSpec& spec, std::size_t budget) {
  const Expansion ex = expand(g, spec);
  const ExpansionLabeling& lab = ex.labeling;
  GammaAlphaReport r;
  r.root_order = g.order();
  const auto minimum = dominate_exact(ex.graph, budget);
  r.gamma = minimum.size;
  r.minimum = minimum.set;
  const auto two = alpha2(g, spec, budget);
  r.alpha2 = two.size;
  r.identity = r.gamma + r.alpha2 == r.root_order;

  r.canonical = canonicalize_dominating_set(ex.graph, lab, r.minimum);
  std::vector<std::size_t> hits(g.order(), 0);
  for (Vertex v : r.canonical) ++hits[lab.clique_of[v]];
  r.canonical_ok = dominates(ex.graph, r.canonical) && r.canonical.size() <= r.gamma &&
                   std::all_of(hits.begin(), hits.end(), [](std::size_t c) { return c <= 1; });

  std::vector<Vertex> missed;
  for (Vertex i = 0; i < g.order(); ++i) {
    if (hits[i] == 0) missed.push_back(i);
  }
  r.independent_from_canonical = VertexSet(std::move(missed));
  r.independent_ok = is_two_independent(g, spec, r.independent_from_canonical) &&
                     r.independent_from_canonical.size() == r.root_order - r.gamma;

  // T -> S: ports facing T, plus one vertex of every clique not next to T.
  std::vector<Vertex> built;
  std::vector<bool> near(g.order(), false);
  for (Vertex t : two.set) {
    near[t] = true;
    for (Vertex j : g.neighbors(t)) {
      near[j] = true;
      for (Vertex h = lab.first[j]; h < lab.first[j + 1]; ++h) {
        if (lab.role[h] == Role::port(t)) built.push_back(h);
      }
    }
  }
  for (Vertex j = 0; j < g.order(); ++j) {
    if (!near[j]) built.push_back(lab.first[j]);
  }
  r.dominating_from_independent = VertexSet(std::move(built));
  r.dominating_ok = dominates(ex.graph, r.dominating_from_independent) &&
                    r.dominating_from_independent.size() == r.root_order - r.alpha2;
  return r;
}

DeltaBoundsReport check_delta_bounds(const Graph& g, std::size_t budget) {
  const std::size_t delta = g.max_degree();
  if (delta == 0) throw std::invalid_argument("check_delta_bounds: graph needs an edge");
  const Expansion ex = k_expand(g, static_cast<std::uint32_t>(delta));
  DeltaBoundsReport r;
  r.root_order = g.order();
  r.delta = delta;
  r.gamma = dominate_exact(ex.graph, budget).size;
  const Recognition rec = recognize(ex.graph);
  if (!accepted(rec)) throw std::logic_error("check_delta_bounds: expansion was not recognized");
  r.heuristic = clique_heuristic(ex.graph, std::get<RootCertificate>(rec)).size;
  r.lower = r.root_order * delta <= r.gamma * (delta + 1);
  r.upper = r.gamma <= r.root_order;
  r.ratio = r.heuristic * delta <= r.gamma * (delta + 1);
  return r;
}

K2FormulaReport check_k2_formula(const Graph& g, std::size_t budget) {
  const std::size_t n = g.order();
  const bool shape = n >= 4 && is_connected(g) && g.max_degree() <= 2 && (g.size() == n - 1 || g.size() == n);
  if (!shape) throw std::invalid_argument("check_k2_formula: expected a path or cycle on at least 4 vertices");
  const Expansion ex = k_expand(g, 2);
  K2FormulaReport r;
  r.expanded_order = ex.graph.order();
  r.gamma = dominate_exact(ex.graph, budget).size;
  r.expected = (r.expanded_order + 2) / 3;
  r.holds = r.gamma == r.expected;
  return r;
}

}  // namespace xclique
