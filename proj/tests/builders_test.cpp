#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "xclique/builders.hpp"

using namespace xclique;

namespace {

void check_labeling(const Graph& g, const ExpansionSpec& spec, const Expansion& ex) {
  const Graph& h = ex.graph;
  const auto& lab = ex.labeling;
  for (Vertex i = 0; i < g.order(); ++i) {
    CHECK(lab.first[i + 1] - lab.first[i] == spec.f[i]);
    for (Vertex a = lab.first[i]; a < lab.first[i + 1]; ++a) {
      CHECK(lab.clique_of[a] == i);
      for (Vertex b = a + 1; b < lab.first[i + 1]; ++b) CHECK(h.adjacent(a, b));
    }
  }
  for (Vertex x = 0; x < h.order(); ++x) {
    const Vertex i = lab.clique_of[x];
    std::vector<Vertex> outside;
    for (Vertex y : h.neighbors(x)) {
      if (lab.clique_of[y] != i) outside.push_back(y);
    }
    if (lab.role[x].is_port()) {
      REQUIRE(outside.size() == 1);
      CHECK(lab.clique_of[outside[0]] == lab.role[x].index);
    } else {
      CHECK(outside.empty());
    }
    CHECK((h.degree(x) == spec.f[i] - 1 || h.degree(x) == spec.f[i]));
  }
  const auto edges = g.edges();
  REQUIRE(lab.port_of.size() == edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    CHECK(h.adjacent(lab.port_of[e].in_u, lab.port_of[e].in_v));
    CHECK(lab.clique_of[lab.port_of[e].in_u] == edges[e].u);
    CHECK(lab.clique_of[lab.port_of[e].in_v] == edges[e].v);
  }
}

}  // namespace

TEST_CASE("expand examples") {
  CHECK(expand(empty_graph(1), {{3}}).graph == complete(3));
  CHECK(expand(complete(3), ExpansionSpec::uniform(3, 2)).graph.order() == 6);
  const Graph c6 = expand(complete(3), ExpansionSpec::uniform(3, 2)).graph;
  CHECK(c6.size() == 6);
  CHECK(c6.max_degree() == 2);
  CHECK(is_connected(c6));
  const Graph p4 = expand(complete(2), {{2, 2}}).graph;
  CHECK(p4.size() == 3);
  CHECK(p4.min_degree() == 1);
  CHECK(is_connected(p4));
}

TEST_CASE("expand rejects bad specs") {
  CHECK_THROWS_AS(expand(complete(3), {{2, 1, 2}}), GraphError);
  CHECK_THROWS_AS(expand(empty_graph(1), {{0}}), GraphError);
  CHECK_THROWS_AS(expand(path(3), {{1, 2}}), GraphError);
}

TEST_CASE("port order is ascending then slots") {
  const Expansion ex = expand(complete(3), {{4, 2, 2}});
  CHECK(ex.labeling.role[0] == Role::port(1));
  CHECK(ex.labeling.role[1] == Role::port(2));
  CHECK(ex.labeling.role[2] == Role::simplicial(0));
  CHECK(ex.labeling.role[3] == Role::simplicial(1));
  CHECK(ex.labeling.role[4] == Role::port(0));
}

TEST_CASE("inflate and k_expand") {
  CHECK(inflate(complete(3)).graph == expand(complete(3), ExpansionSpec::uniform(3, 2)).graph);
  const Graph p4 = inflate(path(3)).graph;
  CHECK(p4.order() == 4);
  CHECK(p4.size() == 3);
  const Graph k4 = inflate(complete(4)).graph;
  CHECK(k4.order() == 12);
  CHECK(k4.min_degree() == 3);
  CHECK(k4.max_degree() == 3);
  CHECK(std::all_of(inflate(complete(4)).labeling.role.begin(), inflate(complete(4)).labeling.role.end(),
                    [](const Role& r) { return r.is_port(); }));
  CHECK_THROWS_AS(inflate(empty_graph(2)), GraphError);

  const Graph gadget = k_expand(complete(3), 3).graph;
  CHECK(gadget.order() == 9);
  CHECK(gadget.size() == 12);
  const Graph c8 = k_expand(cycle(4), 2).graph;
  CHECK(c8.order() == 8);
  CHECK(c8.max_degree() == 2);
  CHECK(c8.min_degree() == 2);
  CHECK(is_connected(c8));
  CHECK(k_expand(complete(2), 1).graph == complete(2));
  CHECK_THROWS_AS(k_expand(complete(4), 2), GraphError);
}

TEST_CASE("expansion edge count and labeling on small graphs") {
  std::mt19937_64 rng(17);
  fixtures::for_connected_graphs(6, [&](const Graph& g) {
    const ExpansionSpec spec = fixtures::random_spec(g, rng);
    const Expansion ex = expand(g, spec);
    std::size_t expected = g.size();
    for (auto k : spec.f) expected += std::size_t{k} * (k - 1) / 2;
    CHECK(ex.graph.size() == expected);
    if (g.order() <= 5) check_labeling(g, spec, ex);
  });
}

TEST_CASE("sierpinski") {
  CHECK(sierpinski(1, 3) == complete(3));
  const Graph s23 = sierpinski(2, 3);
  CHECK(s23.order() == 9);
  CHECK(s23.size() == 12);
  for (int p = 1; p <= 4; ++p) CHECK(sierpinski(p, 1).order() == 1);
  CHECK(sierpinski_tuple(5, 2, 3) == std::vector<int>{2, 3});
  CHECK_THROWS_AS(sierpinski(40, 3), std::overflow_error);
}

TEST_CASE("sierpinski(p, q) is the q-expansion of sierpinski(p-1, q)") {
  for (int q = 1; q <= 3; ++q) {
    for (int p = 2; p <= 4; ++p) {
      const Graph s = sierpinski(p, q);
      const Graph base = sierpinski(p - 1, q);
      const Expansion ex = k_expand(base, static_cast<std::uint32_t>(q));
      // t.a lies in clique t; its role follows its outside neighbor.
      std::vector<Vertex> to(s.order());
      for (Vertex x = 0; x < s.order(); ++x) {
        const Vertex clique = x / static_cast<Vertex>(q);
        Vertex toward = kNoVertex;
        for (Vertex y : s.neighbors(x)) {
          if (y / static_cast<Vertex>(q) != clique) toward = y / static_cast<Vertex>(q);
        }
        const Vertex begin = ex.labeling.first[clique], end = ex.labeling.first[clique + 1];
        Vertex target = kNoVertex;
        if (toward != kNoVertex) {
          for (Vertex h = begin; h < end; ++h) {
            if (ex.labeling.role[h] == Role::port(toward)) target = h;
          }
        } else {
          // simplicial slots in ascending last coordinate
          Vertex slot = 0;
          for (Vertex z = clique * q; z < x; ++z) {
            bool inner = true;
            for (Vertex y : s.neighbors(z)) inner = inner && y / static_cast<Vertex>(q) == clique;
            slot += inner;
          }
          for (Vertex h = begin; h < end; ++h) {
            if (ex.labeling.role[h] == Role::simplicial(slot)) target = h;
          }
        }
        REQUIRE(target != kNoVertex);
        to[x] = target;
      }
      CHECK(s.size() == ex.graph.size());
      for (const Edge& e : s.edges()) CHECK(ex.graph.adjacent(to[e.u], to[e.v]));
    }
  }
}

TEST_CASE("line_graph and subdivision") {
  CHECK(line_graph(path(3)) == complete(2));
  CHECK(line_graph(complete(3)) == complete(3));
  CHECK_THROWS_AS(line_graph(empty_graph(3)), std::invalid_argument);
  CHECK(subdivision(complete(2)).order() == 3);
  CHECK(subdivision(complete(2)).size() == 2);
  const Graph sc3 = subdivision(complete(3));
  CHECK(sc3.order() == 6);
  CHECK(sc3.max_degree() == 2);
  CHECK(is_connected(sc3));
  const Graph g = fixtures::figure_graph();
  CHECK(subdivision(g).order() == 11);
  CHECK(line_graph(subdivision(g)).order() == 12);
}

TEST_CASE("subdivided_line_graph") {
  const Graph c6 = subdivided_line_graph(complete(3));
  CHECK(c6.order() == 6);
  CHECK(c6.max_degree() == 2);
  CHECK(is_connected(c6));
  CHECK(subdivided_line_graph(complete(2)) == complete(2));
  CHECK_THROWS_AS(subdivided_line_graph(empty_graph(2)), std::invalid_argument);
}

TEST_CASE("subdivided_line_graph equals inflate under the edge-port correspondence") {
  fixtures::for_connected_graphs(6, [&](const Graph& g) {
    const Graph lsg = subdivided_line_graph(g);
    const Expansion ex = inflate(g);
    const Graph sg = subdivision(g);
    // edge (u, x_uv) of S(g) <-> port of V_u toward v
    const auto sedges = sg.edges();
    const auto gedges = g.edges();
    std::vector<Vertex> to(sedges.size());
    for (std::size_t k = 0; k < sedges.size(); ++k) {
      const Vertex u = sedges[k].u;
      const Edge e = gedges[sedges[k].v - g.order()];
      const Vertex v = e.u == u ? e.v : e.u;
      auto nu = g.neighbors(u);
      to[k] = ex.labeling.first[u] + static_cast<Vertex>(std::lower_bound(nu.begin(), nu.end(), v) - nu.begin());
    }
    CHECK(lsg.size() == ex.graph.size());
    for (const Edge& e : lsg.edges()) CHECK(ex.graph.adjacent(to[e.u], to[e.v]));
  }, 2);
}

TEST_CASE("basic families") {
  CHECK(path(2) == complete(2));
  CHECK(cycle(3) == complete(3));
  CHECK(complete(4).size() == 6);
  CHECK_THROWS_AS(path(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
  const Graph prism = circular_ladder(4);
  CHECK(prism.order() == 8);
  CHECK(prism.size() == 12);
  CHECK(prism.min_degree() == 3);
  CHECK(disjoint_union(cycle(3), path(2)).order() == 5);
}
