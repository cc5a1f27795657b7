#include "doctest.h"
#include "fixtures.hpp"
#include "xclique/oracle.hpp"
#include "xclique/recognizer.hpp"

using namespace xclique;

TEST_CASE("fixed pattern detectors") {
  const auto claw = find_claw(fixtures::claw());
  REQUIRE(claw);
  CHECK(claw->vertices == std::vector<Vertex>{0, 1, 2, 3});
  const auto diamond = find_diamond(fixtures::diamond());
  REQUIRE(diamond);
  CHECK(diamond->vertices == std::vector<Vertex>{0, 1, 2, 3});
  const auto c4 = find_c4(cycle(4));
  REQUIRE(c4);
  CHECK(c4->vertices == std::vector<Vertex>{0, 1, 2, 3});
  const auto bf = find_butterfly(fixtures::butterfly());
  REQUIRE(bf);
  CHECK(bf->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  for (const Graph& g : {cycle(6), sierpinski(2, 3)}) {
    CHECK_FALSE(find_claw(g));
    CHECK_FALSE(find_diamond(g));
    CHECK_FALSE(find_c4(g));
    CHECK_FALSE(find_butterfly(g));
  }
  CHECK_FALSE(find_claw(fixtures::diamond()));
  CHECK_FALSE(find_c4(fixtures::diamond()));
}

TEST_CASE("odd holes") {
  const auto c5 = find_odd_hole(cycle(5));
  REQUIRE(c5);
  CHECK(c5->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  const auto c7 = find_odd_hole(cycle(7));
  REQUIRE(c7);
  CHECK(c7->vertices.size() == 7);
  CHECK_FALSE(find_odd_hole(sierpinski(2, 3)));
  CHECK_FALSE(find_odd_hole(cycle(6)));
  CHECK_FALSE(find_odd_hole(complete(5)));
  // C7 plus a chord 0-3 leaves the hole 0,3,4,5,6
  const Graph chord(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}});
  const auto w = find_odd_hole(chord);
  REQUIRE(w);
  CHECK(w->vertices == std::vector<Vertex>{0, 3, 4, 5, 6});
  CHECK_THROWS_AS(find_odd_hole(cycle(13)), BudgetExceeded);
  CHECK(find_odd_hole(cycle(13), 13));
}

TEST_CASE("bad chains") {
  const auto chain = find_bad_chain(fixtures::triangles_chain1());
  REQUIRE(chain);
  CHECK(chain->vertices == std::vector<Vertex>{2, 3, 4});
  CHECK_FALSE(find_bad_chain(fixtures::triangles_chain2()));
  CHECK_FALSE(find_bad_chain(path(7)));
  for (std::size_t n = 3; n <= 9; ++n) CHECK_FALSE(find_bad_chain(cycle(n)));
  // a loop of three through one degree-4 vertex: 0 - 1 - 2 - 3 - 0 plus a triangle at 0
  const Graph loop(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}, {4, 5}});
  const auto l = find_bad_chain(loop);
  REQUIRE(l);
  CHECK(l->vertices == std::vector<Vertex>{0, 1, 2, 3, 0});
  CHECK(witness_valid(loop, *l));
}

TEST_CASE("witnesses revalidate") {
  const std::vector<Graph> hosts{fixtures::claw(), fixtures::diamond(), cycle(4), fixtures::butterfly(),
                                 cycle(5), fixtures::triangles_chain1(), fixtures::figure_graph()};
  int checked = 0;
  for (const Graph& g : hosts) {
    for (auto w : {find_claw(g), find_diamond(g), find_c4(g), find_butterfly(g), find_odd_hole(g), find_bad_chain(g)}) {
      if (!w) continue;
      CHECK(witness_valid(g, *w));
      ++checked;
    }
  }
  CHECK(checked >= 7);
  CHECK_FALSE(witness_valid(cycle(4), {Pattern::Claw, {0, 1, 2, 3}}));
  CHECK_FALSE(witness_valid(cycle(6), {Pattern::OddHole, {0, 1, 2, 3, 4}}));
}

TEST_CASE("simplicial and 1-simplicial") {
  CHECK(is_simplicial(complete(4), 0));
  const Graph s = sierpinski(2, 3);
  CHECK_FALSE(is_simplicial(s, 1));
  CHECK(is_1simplicial(s, 1) == std::optional<Vertex>(3));
  CHECK_FALSE(is_simplicial(fixtures::butterfly(), 0));
  CHECK_FALSE(is_1simplicial(fixtures::butterfly(), 0));
}

TEST_CASE("characterization and corollary examples") {
  CHECK_FALSE(characterization_accepts(cycle(4)));
  CHECK(characterization_accepts(path(4)));
  CHECK_FALSE(characterization_accepts(fixtures::diamond()));
  CHECK(corollary_accepts(cycle(6)));
  CHECK_FALSE(corollary_accepts(fixtures::butterfly()));
  CHECK_THROWS_AS(characterization_accepts(empty_graph(2)), std::invalid_argument);
}

TEST_CASE("a triangle corner between two degree-3 vertices is not a bad chain") {
  // triangle 0,1,2 with pendants 3 on 1 and 4 on 0: root is a star, f = (3, 1, 1)
  const Graph g(5, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}});
  CHECK_FALSE(find_bad_chain(g));
  CHECK_FALSE(witness_valid(g, {Pattern::BadChain, {0, 2, 1}}));
  CHECK(characterization_accepts(g));
  CHECK(corollary_accepts(g));
  CHECK(accepted(recognize(g)));
}

TEST_CASE("two cliques joined twice") {
  // {0,1} and the K4 {2,3,4,5} joined by 0-2 and 1-3: every vertex is
  // simplicial or 1-simplicial and no chain is bad, yet 0,1,3,2 is an induced C4
  const Graph g(6, {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {0, 2}, {1, 3}});
  for (Vertex v = 0; v < 6; ++v) CHECK((is_simplicial(g, v) || is_1simplicial(g, v)));
  CHECK_FALSE(find_bad_chain(g));
  CHECK(find_c4(g));
  CHECK_FALSE(characterization_accepts(g));
  CHECK_FALSE(corollary_accepts(g));
  CHECK_FALSE(accepted(recognize(g)));
}

TEST_CASE("three-way agreement up to six vertices") {
  std::size_t agreed = 0;
  fixtures::for_connected_graphs(6, [&](const Graph& g) {
    const bool rec = accepted(recognize(g));
    const bool chr = characterization_accepts(g);
    const bool cor = corollary_accepts(g);
    CHECK(rec == chr);
    CHECK(chr == cor);
    if (rec) {
      CHECK_FALSE(find_c4(g));
      CHECK_FALSE(find_odd_hole(g));
    }
    ++agreed;
  });
  CHECK(agreed > 26000);
}
