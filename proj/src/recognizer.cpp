#include "xclique/recognizer.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace xclique {

std::string to_string(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::BadChain: return "BadChain";
    case RejectionReason::NotSimplicialOr1Simplicial: return "NotSimplicialOr1Simplicial";
    case RejectionReason::OddCycle: return "OddCycle";
    case RejectionReason::C4Cycle: return "C4Cycle";
  }
  return "Unknown";
}

RecognitionState::RecognitionState(const Graph& h)
    : vertex(h.order()), part_of(h.order(), kNoVertex) {}

void RecognitionState::mark(Vertex v) {
  if (vertex[v].marked) throw std::logic_error("vertex " + std::to_string(v) + " marked twice");
  vertex[v].marked = true;
  ++stats.marks;
}

void RecognitionState::add_part(std::vector<Vertex> members) {
  const auto id = static_cast<Vertex>(parts.size());
  for (Vertex v : members) {
    mark(v);
    part_of[v] = id;
  }
  parts.push_back(std::move(members));
}

bool RecognitionState::reject(RejectionReason reason, std::vector<Vertex> location) {
  rejection = Rejection{reason, std::move(location)};
  return false;
}

namespace {

bool probe_adjacent(const Graph& h, Vertex a, Vertex b, RecognitionStats& stats) {
  stats.steps += static_cast<std::uint64_t>(std::bit_width(h.degree(a) + 1));
  return h.adjacent(a, b);
}

// Pairs consecutive vertices of `seq` into 2-cliques; an odd tail is a singleton.
void pair_up(const std::vector<Vertex>& seq, RecognitionState& st) {
  std::size_t i = 0;
  for (; i + 1 < seq.size(); i += 2) st.add_part({seq[i], seq[i + 1]});
  if (i < seq.size()) st.add_part({seq[i]});
}

bool apply_cycle_rule(const std::vector<Vertex>& seq, RecognitionState& st) {
  const std::size_t len = seq.size();
  if (len == 3) {
    st.add_part(seq);
    return true;
  }
  if (len == 4) return st.reject(RejectionReason::C4Cycle, seq);
  if (len % 2 == 1) return st.reject(RejectionReason::OddCycle, seq);
  pair_up(seq, st);
  return true;
}

// Partition is complete: reorder parts by smallest member, check each part
// is a clique with at most one outside neighbor per member and at most one
// edge toward any other part, and emit the certificate.
Recognition finalize(const Graph& h, RecognitionState& st) {
  const std::size_t n = h.order();
  std::vector<Vertex> renumber(st.parts.size(), kNoVertex);
  RootCertificate cert;
  for (Vertex v = 0; v < n; ++v) {
    Vertex& id = renumber[st.part_of[v]];
    if (id == kNoVertex) {
      id = static_cast<Vertex>(cert.cliques.size());
      cert.cliques.emplace_back();
    }
    cert.cliques[id].push_back(v);
  }
  cert.clique_of.resize(n);
  for (Vertex v = 0; v < n; ++v) cert.clique_of[v] = renumber[st.part_of[v]];
  st.stats.steps += n;

  const std::size_t parts = cert.cliques.size();
  std::vector<Vertex> outside(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = cert.clique_of[v];
    std::size_t inside = 0;
    for (Vertex w : h.neighbors(v)) {
      ++st.stats.steps;
      if (cert.clique_of[w] == p) {
        ++inside;
      } else if (outside[v] == kNoVertex) {
        outside[v] = w;
      } else {
        st.reject(RejectionReason::NotSimplicialOr1Simplicial, {v, outside[v], w});
        return *st.rejection;
      }
    }
    if (inside + 1 != cert.cliques[p].size()) {
      st.reject(RejectionReason::NotSimplicialOr1Simplicial, {v});
      return *st.rejection;
    }
  }

  std::vector<Vertex> stamp(parts, kNoVertex), via_inner(parts), via_outer(parts);
  std::vector<Edge> quotient_edges;
  cert.role.resize(n);
  cert.f.f.resize(parts);
  for (Vertex p = 0; p < parts; ++p) {
    cert.f.f[p] = static_cast<std::uint32_t>(cert.cliques[p].size());
    Vertex slot = 0;
    for (Vertex a : cert.cliques[p]) {
      ++st.stats.steps;
      const Vertex b = outside[a];
      if (b == kNoVertex) {
        cert.role[a] = Role::simplicial(slot++);
        continue;
      }
      const Vertex q = cert.clique_of[b];
      if (stamp[q] == p) {
        // a1 - a (same part), a - b, b - b1 (same part), b1 - a1
        st.reject(RejectionReason::C4Cycle, {via_inner[q], a, b, via_outer[q]});
        return *st.rejection;
      }
      stamp[q] = p;
      via_inner[q] = a;
      via_outer[q] = b;
      cert.role[a] = Role::port(q);
      if (p < q) quotient_edges.push_back({p, q});
    }
  }
  cert.quotient = Graph(parts, quotient_edges);
  return cert;
}

}  // namespace

bool is_simp_or_1simp(const Graph& h, Vertex u, RecognitionState& st) {
  const auto nu = h.neighbors(u);
  const std::size_t d = nu.size();
  if (d < 3 || st.vertex[u].marked) {
    throw std::logic_error("is_simp_or_1simp requires an unmarked vertex of degree >= 3");
  }
  auto& stats = st.stats;
  stats.steps += 3;

  // The outsider is the unique neighbor adjacent to no other neighbor.
  Vertex outsider = kNoVertex;
  const Vertex w1 = nu[0], w2 = nu[1], w3 = nu[2];
  if (!probe_adjacent(h, w1, w2, stats)) {
    outsider = probe_adjacent(h, w1, w3, stats) ? w2 : w1;
  } else {
    // w1 is in u's clique, so deg(w1) <= |clique| <= d + 1 and the outsider
    // is the only neighbor of u missing from N(w1).
    const auto n1 = h.neighbors(w1);
    if (n1.size() > d + 1) return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {u, w1});
    std::size_t j = 0;
    for (Vertex w : nu) {
      ++stats.steps;
      if (w == w1) continue;
      while (j < n1.size() && n1[j] < w) {
        ++j;
        ++stats.steps;
      }
      if (j == n1.size() || n1[j] != w) {
        if (outsider != kNoVertex) return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {u});
        outsider = w;
      }
    }
  }

  std::vector<Vertex> clique;
  clique.reserve(d + 1);
  bool placed = false;
  for (Vertex w : nu) {
    if (!placed && u < w) {
      clique.push_back(u);
      placed = true;
    }
    if (w != outsider) clique.push_back(w);
  }
  if (!placed) clique.push_back(u);
  stats.steps += d;

  // Each member must see the rest of the clique plus at most one extra vertex.
  for (Vertex z : clique) {
    if (st.vertex[z].marked) return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {z, u});
    const auto nz = h.neighbors(z);
    if (nz.size() + 1 < clique.size() || nz.size() > clique.size()) {
      return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {z});
    }
    std::size_t& cur = st.vertex[z].current;
    std::size_t k = 0;
    Vertex extra = kNoVertex;
    for (; cur < nz.size(); ++cur) {
      const Vertex x = nz[cur];
      ++stats.steps;
      for (; k < clique.size() && clique[k] < x; ++k) {
        if (clique[k] != z) return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {z});
      }
      if (k < clique.size() && clique[k] == x) {
        ++k;
      } else if (extra == kNoVertex) {
        extra = x;
      } else {
        return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {z});
      }
    }
    for (; k < clique.size(); ++k) {
      if (clique[k] != z) return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {z});
    }
    if (extra == kNoVertex) continue;
    if (z != u && extra == outsider) {
      // the outsider has a neighbor inside N(u)
      return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {u, outsider, z});
    }
    Vertex& zo = st.vertex[z].outsider;
    if (zo != kNoVertex && zo != extra) return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {z});
    zo = extra;
    // an extra of degree <= 2 is settled by its chain
    if (h.degree(extra) < 3) continue;
    Vertex& xo = st.vertex[extra].outsider;
    if (xo != kNoVertex && xo != z) return st.reject(RejectionReason::NotSimplicialOr1Simplicial, {extra});
    xo = z;
  }
  st.add_part(std::move(clique));
  return true;
}

bool is_good_chain(const Graph& h, Vertex u, RecognitionState& st) {
  const auto nu = h.neighbors(u);
  if (nu.size() > 2 || st.vertex[u].marked) {
    throw std::logic_error("is_good_chain requires an unmarked vertex of degree <= 2");
  }
  ++st.stats.steps;
  if (nu.empty()) {
    st.add_part({u});
    return true;
  }

  struct Side {
    std::vector<Vertex> run;  // free vertices in walk order
    Vertex terminal = kNoVertex;
    bool looped = false;
  };
  auto walk = [&](Vertex first) {
    Side side;
    Vertex prev = u, cur = first;
    while (true) {
      ++st.stats.steps;
      if (cur == u) {
        side.looped = true;
        return side;
      }
      if (st.vertex[cur].marked || h.degree(cur) >= 3) {
        side.terminal = cur;
        return side;
      }
      side.run.push_back(cur);
      const auto nc = h.neighbors(cur);
      if (nc.size() == 1) return side;
      const Vertex next = nc[0] == prev ? nc[1] : nc[0];
      prev = cur;
      cur = next;
    }
  };

  Side left = walk(nu[0]);
  if (left.looped) {
    std::vector<Vertex> seq{u};
    seq.insert(seq.end(), left.run.begin(), left.run.end());
    return apply_cycle_rule(seq, st);
  }
  Side right;
  if (nu.size() == 2) right = walk(nu[1]);

  std::vector<Vertex> seq(left.run.rbegin(), left.run.rend());
  seq.push_back(u);
  seq.insert(seq.end(), right.run.begin(), right.run.end());
  const bool left_anchored = left.terminal != kNoVertex;
  const bool right_anchored = right.terminal != kNoVertex;

  if (left_anchored && right_anchored && seq.size() % 2 == 1) {
    std::vector<Vertex> chain{left.terminal};
    chain.insert(chain.end(), seq.begin(), seq.end());
    chain.push_back(right.terminal);
    return st.reject(RejectionReason::BadChain, std::move(chain));
  }
  // Pairing is forced from an anchored end; a bare path pairs from its
  // smaller-id end.
  const bool from_left = left_anchored || (!right_anchored && seq.front() <= seq.back());
  if (!from_left) std::reverse(seq.begin(), seq.end());
  pair_up(seq, st);
  return true;
}

Recognition recognize(const Graph& h, RecognitionStats& stats) {
  RecognitionState st(h);
  const std::size_t n = h.order();
  for (Vertex u = 0; u < n; ++u) {
    ++st.stats.steps;
    if (!st.vertex[u].marked && h.degree(u) >= 3 && !is_simp_or_1simp(h, u, st)) {
      stats = st.stats;
      return *st.rejection;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    ++st.stats.steps;
    if (!st.vertex[u].marked && !is_good_chain(h, u, st)) {
      stats = st.stats;
      return *st.rejection;
    }
  }
  Recognition result = finalize(h, st);
  stats = st.stats;
  return result;
}

Recognition recognize(const Graph& h) {
  RecognitionStats stats;
  return recognize(h, stats);
}

Recognition certificate_from_parts(const Graph& h, const std::vector<std::vector<Vertex>>& parts) {
  RecognitionState st(h);
  for (const auto& part : parts) {
    for (Vertex v : part) {
      if (v >= h.order()) throw CertificateError("part member " + std::to_string(v) + " out of range");
      if (st.vertex[v].marked) throw CertificateError("vertex " + std::to_string(v) + " in two parts");
    }
    st.add_part(part);
  }
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!st.vertex[v].marked) throw CertificateError("vertex " + std::to_string(v) + " in no part");
  }
  return finalize(h, st);
}

RootCertificate certificate_from_expansion(const Graph& root, const ExpansionSpec& spec,
                                           const Expansion& expansion) {
  const auto& lab = expansion.labeling;
  RootCertificate cert;
  cert.quotient = root;
  cert.f = spec;
  cert.clique_of = lab.clique_of;
  cert.role = lab.role;
  cert.cliques.resize(root.order());
  for (Vertex i = 0; i < root.order(); ++i) {
    for (Vertex h = lab.first[i]; h < lab.first[i + 1]; ++h) cert.cliques[i].push_back(h);
  }
  return cert;
}

bool verify_certificate(const Graph& h, const RootCertificate& cert) {
  const std::size_t n = h.order();
  const std::size_t parts = cert.cliques.size();
  if (cert.clique_of.size() != n || cert.role.size() != n) {
    throw CertificateError("witness map does not cover every vertex of H");
  }
  std::vector<Vertex> part_of(n, kNoVertex);
  for (Vertex p = 0; p < parts; ++p) {
    if (cert.cliques[p].empty()) throw CertificateError("empty part " + std::to_string(p));
    for (Vertex v : cert.cliques[p]) {
      if (v >= n) throw CertificateError("part member " + std::to_string(v) + " out of range");
      if (part_of[v] != kNoVertex) throw CertificateError("vertex " + std::to_string(v) + " in two parts");
      part_of[v] = p;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part_of[v] == kNoVertex) throw CertificateError("vertex " + std::to_string(v) + " in no part");
  }

  if (cert.quotient.order() != parts || cert.f.f.size() != parts) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (cert.clique_of[v] != part_of[v]) return false;
  }

  // Cliques, at most one outside neighbor, at most one edge per part pair.
  std::vector<Vertex> outside(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t inside = 0;
    for (Vertex w : h.neighbors(v)) {
      if (part_of[w] == part_of[v]) {
        ++inside;
      } else if (outside[v] == kNoVertex) {
        outside[v] = w;
      } else {
        return false;
      }
    }
    if (inside + 1 != cert.cliques[part_of[v]].size()) return false;
  }
  std::size_t crossing = 0;
  for (Vertex p = 0; p < parts; ++p) {
    const std::size_t deg_q = cert.quotient.degree(p);
    if (cert.f.f[p] != cert.cliques[p].size() || cert.f.f[p] < deg_q || cert.f.f[p] == 0) return false;
    std::vector<Vertex> seen_parts;
    std::vector<Vertex> slots;
    for (Vertex a : cert.cliques[p]) {
      const Vertex b = outside[a];
      const Role& r = cert.role[a];
      if (b == kNoVertex) {
        if (r.is_port()) return false;
        slots.push_back(r.index);
        continue;
      }
      const Vertex q = part_of[b];
      if (!r.is_port() || r.index != q) return false;
      if (!cert.quotient.adjacent(p, q)) return false;
      seen_parts.push_back(q);
      ++crossing;
    }
    std::sort(seen_parts.begin(), seen_parts.end());
    if (std::adjacent_find(seen_parts.begin(), seen_parts.end()) != seen_parts.end()) return false;
    if (seen_parts.size() != deg_q) return false;
    std::sort(slots.begin(), slots.end());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k] != k) return false;
    }
  }
  if (crossing != 2 * cert.quotient.size()) return false;

  // Re-expand and map back through the witness.
  const Expansion re = expand(cert.quotient, cert.f);
  std::map<std::pair<Vertex, std::pair<int, Vertex>>, Vertex> locate;
  for (Vertex v = 0; v < n; ++v) {
    locate[{cert.clique_of[v], {static_cast<int>(cert.role[v].kind), cert.role[v].index}}] = v;
  }
  const std::size_t total = re.graph.order();
  if (total != n) return false;
  std::vector<Vertex> image(total);
  std::vector<bool> hit(n, false);
  for (Vertex x = 0; x < total; ++x) {
    const Role& r = re.labeling.role[x];
    auto it = locate.find({re.labeling.clique_of[x], {static_cast<int>(r.kind), r.index}});
    if (it == locate.end() || hit[it->second]) return false;
    hit[it->second] = true;
    image[x] = it->second;
  }
  if (re.graph.size() != h.size()) return false;
  for (const Edge& e : re.graph.edges()) {
    if (!h.adjacent(image[e.u], image[e.v])) return false;
  }
  return true;
}

MultiRecognition recognize_multi(const Graph& h) {
  MultiRecognition out;
  out.accepted = true;
  for (VertexSet& comp : connected_components(h)) {
    const Graph sub = induced_subgraph(h, comp.members());
    Recognition r = recognize(sub);
    out.accepted = out.accepted && accepted(r);
    out.components.push_back({std::move(comp), std::move(r)});
  }
  if (!out.accepted) return out;

  // Gather parts in H ids, then order them by smallest member.
  struct Piece {
    std::vector<Vertex> members;
    std::size_t comp;
    Vertex local;
  };
  std::vector<Piece> pieces;
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    const auto& ids = out.components[c].component.members();
    const auto& cert = std::get<RootCertificate>(out.components[c].result);
    for (Vertex p = 0; p < cert.cliques.size(); ++p) {
      std::vector<Vertex> members;
      for (Vertex v : cert.cliques[p]) members.push_back(ids[v]);
      pieces.push_back({std::move(members), c, p});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.members.front() < b.members.front(); });
  std::vector<std::vector<Vertex>> global(out.components.size());
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    global[c].resize(std::get<RootCertificate>(out.components[c].result).cliques.size());
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) global[pieces[i].comp][pieces[i].local] = static_cast<Vertex>(i);

  RootCertificate root;
  root.clique_of.resize(h.order());
  root.role.resize(h.order());
  root.f.f.resize(pieces.size());
  std::vector<Edge> quotient_edges;
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    const auto& ids = out.components[c].component.members();
    const auto& cert = std::get<RootCertificate>(out.components[c].result);
    for (Vertex v = 0; v < ids.size(); ++v) {
      root.clique_of[ids[v]] = global[c][cert.clique_of[v]];
      Role r = cert.role[v];
      if (r.is_port()) r.index = global[c][r.index];
      root.role[ids[v]] = r;
    }
    for (Vertex p = 0; p < cert.cliques.size(); ++p) root.f.f[global[c][p]] = cert.f.f[p];
    for (const Edge& e : cert.quotient.edges()) quotient_edges.push_back({global[c][e.u], global[c][e.v]});
  }
  for (Piece& piece : pieces) root.cliques.push_back(std::move(piece.members));
  root.quotient = Graph(pieces.size(), quotient_edges);
  out.root = std::move(root);
  return out;
}

}  // namespace xclique
