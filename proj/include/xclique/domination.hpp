#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xclique/builders.hpp"
#include "xclique/graph.hpp"
#include "xclique/recognizer.hpp"

namespace xclique {

enum class DominationMethod : std::uint8_t { Exhaustive, BranchAndBound, Greedy, CliqueHeuristic };

std::string to_string(DominationMethod method);

struct DominationResult {
  VertexSet set;
  std::size_t size = 0;
  bool exact = false;  // no smaller dominating set exists
  DominationMethod method = DominationMethod::BranchAndBound;
};

struct TwoIndependenceResult {
  VertexSet set;
  std::size_t size = 0;
};

inline constexpr std::size_t kDefaultExactBudget = 30;
inline constexpr std::size_t kDefaultExhaustiveBudget = 22;
inline constexpr std::size_t kDefaultAlpha2Budget = 30;
// Bitset solvers work on one machine word.
inline constexpr std::size_t kMaxSolverOrder = 64;

// Branch-and-bound minimum dominating set. Branches on the lowest
// undominated vertex over its closed neighborhood; prunes with a greedy
// upper bound and the larger of ceil(|U| / max coverage) and a distance-3
// packing of undominated vertices. Throws BudgetExceeded if n > budget.
DominationResult dominate_exact(const Graph& g, std::size_t budget = kDefaultExactBudget);
// Subsets in increasing size; the independent cross-check of dominate_exact.
DominationResult dominate_exhaustive(const Graph& g, std::size_t budget = kDefaultExhaustiveBudget);
// Repeatedly takes the vertex covering most undominated vertices, lowest id on ties.
DominationResult dominate_greedy(const Graph& g);

// Every dominating set of size gamma(g), ordered lexicographically by members.
// Throws BudgetExceeded if n > budget or there are more than `max_sets`.
std::vector<VertexSet> all_minimum_dominating_sets(const Graph& g, std::size_t budget = kDefaultExactBudget,
                                                   std::size_t max_sets = 1'000'000);

// Clique structure shared by labelings and certificates: part of each vertex
// and, for ports, the root neighbor it faces.
struct CliqueView {
  std::vector<Vertex> clique_of;
  std::vector<Role> role;
  std::size_t parts = 0;

  static CliqueView of(const ExpansionLabeling& labeling);
  static CliqueView of(const RootCertificate& cert);
};

// Rewrites a dominating set of h into one with at most one vertex per part and
// no more vertices: while some part holds two or more, drop a simplicial
// member, else drop a port v_ij whose partner clique V_j is already hit, else
// replace v_ij by v_ji. Throws std::invalid_argument if s does not dominate h.
VertexSet canonicalize_dominating_set(const Graph& h, const CliqueView& view, const VertexSet& s);
VertexSet canonicalize_dominating_set(const Graph& h, const ExpansionLabeling& labeling, const VertexSet& s);
VertexSet canonicalize_dominating_set(const Graph& h, const RootCertificate& cert, const VertexSet& s);

// One vertex per part: the lowest simplicial member, else the lowest member.
// Throws CertificateError if cert is not valid for h.
DominationResult clique_heuristic(const Graph& h, const RootCertificate& cert);

// Pairwise G-distance >= 3 and f(v) = deg(v) for every member.
bool is_two_independent(const Graph& g, const ExpansionSpec& spec, const VertexSet& s);
// Maximum independent set of the distance-2 conflict graph over eligible vertices.
TwoIndependenceResult alpha2(const Graph& g, const ExpansionSpec& spec, std::size_t budget = kDefaultAlpha2Budget);

struct GammaAlphaReport {
  std::size_t root_order = 0;
  std::size_t gamma = 0;
  std::size_t alpha2 = 0;
  VertexSet minimum;            // in H
  VertexSet canonical;          // canonicalized minimum, in H
  VertexSet independent_from_canonical;  // parts missed by `canonical`, in G
  VertexSet dominating_from_independent; // built from the alpha2 set, in H
  bool identity = false;        // gamma + alpha2 == |V(G)|
  bool canonical_ok = false;    // dominates, one per part, |canonical| <= gamma
  bool independent_ok = false;  // 2-independent, f = d, size |V(G)| - gamma
  bool dominating_ok = false;   // dominates H, size |V(G)| - alpha2
  bool passed() const { return identity && canonical_ok && independent_ok && dominating_ok; }
};

GammaAlphaReport check_gamma_alpha_identity(const Graph& g, const ExpansionSpec& spec,
                                            std::size_t budget = kMaxSolverOrder);

struct DeltaBoundsReport {
  std::size_t root_order = 0;
  std::size_t delta = 0;
  std::size_t gamma = 0;
  std::size_t heuristic = 0;
  bool lower = false;      // n * delta <= gamma * (delta + 1)
  bool upper = false;      // gamma <= n
  bool ratio = false;      // heuristic * delta <= gamma * (delta + 1)
  bool passed() const { return lower && upper && ratio; }
};

// H = k_expand(g, delta(g)); requires delta(g) >= 1.
DeltaBoundsReport check_delta_bounds(const Graph& g, std::size_t budget = kMaxSolverOrder);

struct K2FormulaReport {
  std::size_t expanded_order = 0;
  std::size_t gamma = 0;
  std::size_t expected = 0;  // ceil(|V(H)| / 3)
  bool holds = false;
};

// g must be a path or a cycle with at least 4 vertices.
K2FormulaReport check_k2_formula(const Graph& g, std::size_t budget = kMaxSolverOrder);

}  // namespace xclique
