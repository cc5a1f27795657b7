#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "xclique/builders.hpp"
#include "xclique/graph.hpp"

namespace xclique {

enum class RejectionReason : std::uint8_t { BadChain, NotSimplicialOr1Simplicial, OddCycle, C4Cycle };

std::string to_string(RejectionReason reason);

struct Rejection {
  RejectionReason reason;
  std::vector<Vertex> location;  // offending vertex, chain or cycle, in H ids
};

// Root (G, f) recovered from H together with the vertex correspondence.
struct RootCertificate {
  std::vector<std::vector<Vertex>> cliques;  // part i = V_i, ascending, parts ordered by smallest member
  Graph quotient;                            // G
  ExpansionSpec f;                           // f(i) = |V_i|
  std::vector<Vertex> clique_of;             // H-vertex -> root vertex
  std::vector<Role> role;                    // H-vertex -> Port(j) | Simplicial(slot)
};

using Recognition = std::variant<RootCertificate, Rejection>;

inline bool accepted(const Recognition& r) { return std::holds_alternative<RootCertificate>(r); }

struct RecognitionStats {
  std::uint64_t steps = 0;  // adjacency entries and vertices touched
  std::uint64_t marks = 0;  // false -> true transitions of `marked`
};

struct VertexState {
  bool marked = false;
  Vertex outsider = kNoVertex;
  std::size_t current = 0;  // cursor into the sorted adjacency list; only advances
};

// Private working state of one recognition run.
class RecognitionState {
 public:
  explicit RecognitionState(const Graph& h);

  std::vector<VertexState> vertex;
  std::vector<Vertex> part_of;              // kNoVertex until assigned
  std::vector<std::vector<Vertex>> parts;   // discovery order
  std::optional<Rejection> rejection;
  RecognitionStats stats;

  void mark(Vertex v);
  void add_part(std::vector<Vertex> members);
  bool reject(RejectionReason reason, std::vector<Vertex> location);
};

// Decides whether h is expanded-clique in O(n + m). Total on every graph;
// disconnected inputs are handled component by component.
Recognition recognize(const Graph& h);
Recognition recognize(const Graph& h, RecognitionStats& stats);

// Clique discovery for an unmarked vertex u with deg(u) >= 3: finds u's
// outsider (if any), checks that N[u] minus the outsider is a clique whose
// members each have at most one further neighbor, records those neighbors as
// outsiders and marks the clique. False (with state.rejection set) iff some
// involved vertex is neither simplicial nor 1-simplicial or the clique
// overlaps one found earlier.
bool is_simp_or_1simp(const Graph& h, Vertex u, RecognitionState& state);

// Walks the maximal run of unmarked degree <= 2 vertices through u (deg(u) <= 2,
// u unmarked), pairs them into cliques and marks them. A run closed on itself
// is a cycle component and follows the cycle rule (C_3 and even C_n, n >= 6).
// False iff the chain is bad or the cycle is C_4 / odd.
bool is_good_chain(const Graph& h, Vertex u, RecognitionState& state);

class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checks every certificate invariant and that expanding (quotient, f) and
// mapping through the witness reproduces E(h) exactly. Throws
// CertificateError when the parts are not a partition of V(h).
bool verify_certificate(const Graph& h, const RootCertificate& cert);

// Rebuilds quotient, f and roles from a claimed partition of V(h); rejects
// like recognize when the parts do not form an expanded-clique structure.
// Throws CertificateError when the parts are not a partition of V(h).
Recognition certificate_from_parts(const Graph& h, const std::vector<std::vector<Vertex>>& parts);

// Certificate for H = expand(root, spec) taken directly from its labeling.
RootCertificate certificate_from_expansion(const Graph& root, const ExpansionSpec& spec,
                                           const Expansion& expansion);

struct ComponentRecognition {
  VertexSet component;  // H ids
  Recognition result;   // in the component's local ids (component.members()[i] is local i)
};

struct MultiRecognition {
  bool accepted = false;
  std::vector<ComponentRecognition> components;
  // Union of the component roots in H ids, present iff every component is accepted.
  std::optional<RootCertificate> root;
};

MultiRecognition recognize_multi(const Graph& h);

}  // namespace xclique
