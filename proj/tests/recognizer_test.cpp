#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "xclique/oracle.hpp"
#include "xclique/recognizer.hpp"

using namespace xclique;

namespace {

RootCertificate accept(const Recognition& r) {
  REQUIRE(accepted(r));
  return std::get<RootCertificate>(r);
}

Rejection reject(const Recognition& r) {
  REQUIRE_FALSE(accepted(r));
  return std::get<Rejection>(r);
}

std::vector<std::uint32_t> sorted_sizes(const RootCertificate& cert) {
  auto f = cert.f.f;
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

TEST_CASE("recognize examples") {
  CHECK(reject(recognize(cycle(4))).reason == RejectionReason::C4Cycle);
  CHECK(reject(recognize(cycle(5))).reason == RejectionReason::OddCycle);
  CHECK(reject(recognize(fixtures::claw())).reason == RejectionReason::NotSimplicialOr1Simplicial);

  const auto c6 = accept(recognize(cycle(6)));
  CHECK(c6.quotient.order() == 3);
  CHECK(c6.quotient.size() == 3);
  CHECK(c6.f == ExpansionSpec::uniform(3, 2));
  CHECK(verify_certificate(cycle(6), c6));

  const Graph s23 = sierpinski(2, 3);
  const auto s = accept(recognize(s23));
  CHECK(s.quotient == complete(3));
  CHECK(s.f == ExpansionSpec::uniform(3, 3));
  CHECK(verify_certificate(s23, s));

  const auto p5 = accept(recognize(path(5)));
  CHECK(p5.quotient == path(3));
  CHECK(p5.f.f == std::vector<std::uint32_t>{2, 2, 1});

  const Rejection bad = reject(recognize(fixtures::triangles_chain1()));
  CHECK(bad.reason == RejectionReason::BadChain);
  CHECK(bad.location == std::vector<Vertex>{2, 3, 4});
  const auto oracle = find_bad_chain(fixtures::triangles_chain1());
  REQUIRE(oracle);
  CHECK(oracle->vertices == bad.location);
}

TEST_CASE("tiny inputs") {
  const auto k1 = accept(recognize(empty_graph(1)));
  CHECK(k1.quotient.order() == 1);
  CHECK(k1.f.f == std::vector<std::uint32_t>{1});
  const auto k2 = accept(recognize(complete(2)));
  CHECK(k2.quotient.order() == 1);
  CHECK(k2.f.f == std::vector<std::uint32_t>{2});
  const auto k3 = accept(recognize(complete(3)));
  CHECK(k3.f.f == std::vector<std::uint32_t>{3});
}

TEST_CASE("is_simp_or_1simp") {
  SUBCASE("hub of K4") {
    const Graph k4 = complete(4);
    RecognitionState st(k4);
    CHECK(is_simp_or_1simp(k4, 0, st));
    for (Vertex v = 0; v < 4; ++v) CHECK(st.vertex[v].marked);
    REQUIRE(st.parts.size() == 1);
    CHECK(st.parts[0] == std::vector<Vertex>{0, 1, 2, 3});
  }
  SUBCASE("butterfly center") {
    const Graph b = fixtures::butterfly();
    RecognitionState st(b);
    CHECK_FALSE(is_simp_or_1simp(b, 0, st));
    REQUIRE(st.rejection);
    CHECK(st.rejection->reason == RejectionReason::NotSimplicialOr1Simplicial);
  }
  SUBCASE("degree-3 vertex of S(2,3)") {
    const Graph s = sierpinski(2, 3);
    RecognitionState st(s);
    // (1,2) = 1 sees (1,1), (1,3) and its outsider (2,1) = 3
    CHECK(is_simp_or_1simp(s, 1, st));
    CHECK(st.vertex[1].outsider == 3);
    CHECK(st.parts[0] == std::vector<Vertex>{0, 1, 2});
  }
  SUBCASE("precondition") {
    const Graph p3 = path(3);
    RecognitionState st(p3);
    CHECK_THROWS_AS(is_simp_or_1simp(p3, 1, st), std::logic_error);
  }
}

TEST_CASE("is_good_chain") {
  SUBCASE("pendant path on a triangle") {
    for (std::size_t len = 1; len <= 5; ++len) {
      std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
      for (std::size_t i = 0; i < len; ++i) edges.push_back({static_cast<Vertex>(i == 0 ? 2 : 2 + i), static_cast<Vertex>(3 + i)});
      const Graph g(3 + len, edges);
      RecognitionState st(g);
      CHECK(is_good_chain(g, 3, st));
      CHECK(accepted(recognize(g)));
    }
  }
  SUBCASE("one internal vertex") {
    const Graph g = fixtures::triangles_chain1();
    RecognitionState st(g);
    CHECK_FALSE(is_good_chain(g, 3, st));
    CHECK(st.rejection->reason == RejectionReason::BadChain);
  }
  SUBCASE("two internal vertices") {
    const Graph g = fixtures::triangles_chain2();
    RecognitionState st(g);
    CHECK(is_good_chain(g, 3, st));
    CHECK(accepted(recognize(g)));
  }
}

TEST_CASE("verify_certificate") {
  const Graph c6 = cycle(6);
  RootCertificate cert = accept(recognize(c6));
  CHECK(verify_certificate(c6, cert));

  // P4 as two parts joined by two edges is not a simple quotient
  const Graph c4 = cycle(4);
  RootCertificate doubled;
  doubled.cliques = {{0, 1}, {2, 3}};
  doubled.quotient = complete(2);
  doubled.f = {{2, 2}};
  doubled.clique_of = {0, 0, 1, 1};
  doubled.role = {Role::port(1), Role::port(1), Role::port(0), Role::port(0)};
  CHECK_FALSE(verify_certificate(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), doubled));
  CHECK_FALSE(verify_certificate(c4, doubled));

  RootCertificate overlap = cert;
  overlap.cliques[1].push_back(overlap.cliques[0][0]);
  CHECK_THROWS_AS(verify_certificate(c6, overlap), CertificateError);

  RootCertificate wrong_f = cert;
  wrong_f.f.f[0] = 3;
  CHECK_FALSE(verify_certificate(c6, wrong_f));
}

TEST_CASE("certificates from expansions verify") {
  std::mt19937_64 rng(23);
  fixtures::for_connected_graphs(6, [&](const Graph& g) {
    const ExpansionSpec spec = fixtures::random_spec(g, rng);
    const Expansion ex = expand(g, spec);
    CHECK(verify_certificate(ex.graph, certificate_from_expansion(g, spec, ex)));
  });
}

TEST_CASE("round trip through recognize") {
  std::mt19937_64 rng(29);
  fixtures::for_connected_graphs(5, [&](const Graph& g) {
    for (int s = 0; s < 3; ++s) {
      const ExpansionSpec spec = fixtures::random_spec(g, rng);
      const Graph h = expand(g, spec).graph;
      const Recognition r = recognize(h);
      REQUIRE(accepted(r));
      const auto& cert = std::get<RootCertificate>(r);
      CHECK(verify_certificate(h, cert));
      std::uint64_t total = 0;
      for (auto k : cert.f.f) total += k;
      CHECK(total == h.order());
    }
  });
}

TEST_CASE("cycles") {
  for (std::size_t n = 3; n <= 20; ++n) {
    const Recognition r = recognize(cycle(n));
    CHECK(accepted(r) == (n == 3 || (n % 2 == 0 && n >= 6)));
  }
}

TEST_CASE("marks happen once and steps stay linear") {
  for (const Graph& g : {sierpinski(4, 3), path(1000), subdivided_line_graph(circular_ladder(50))}) {
    RecognitionStats stats;
    REQUIRE(accepted(recognize(g, stats)));
    CHECK(stats.marks == g.order());
    CHECK(stats.steps <= 16 * (g.order() + g.size()));
  }
  const Graph g = path(4);
  RecognitionState st(g);
  st.mark(0);
  CHECK_THROWS_AS(st.mark(0), std::logic_error);
}

TEST_CASE("recognize_multi") {
  const auto both = recognize_multi(disjoint_union(cycle(6), complete(3)));
  CHECK(both.accepted);
  REQUIRE(both.root);
  CHECK(both.root->quotient.order() == 4);
  CHECK(both.root->quotient.size() == 3);
  CHECK(sorted_sizes(*both.root) == std::vector<std::uint32_t>{2, 2, 2, 3});
  CHECK(verify_certificate(disjoint_union(cycle(6), complete(3)), *both.root));

  const auto bad = recognize_multi(disjoint_union(cycle(6), cycle(4)));
  CHECK_FALSE(bad.accepted);
  REQUIRE(bad.components.size() == 2);
  CHECK(accepted(bad.components[0].result));
  CHECK_FALSE(accepted(bad.components[1].result));
  CHECK_FALSE(bad.root);

  const auto k1 = recognize_multi(empty_graph(1));
  CHECK(k1.accepted);
  CHECK(k1.root->f.f == std::vector<std::uint32_t>{1});
}

TEST_CASE("n = 1 components inside a disconnected recognize") {
  const Graph g = disjoint_union(empty_graph(2), cycle(6));
  const auto cert = accept(recognize(g));
  CHECK(cert.quotient.order() == 5);
  CHECK(verify_certificate(g, cert));
}

TEST_CASE("certificate_from_parts") {
  const Graph h = cycle(6);
  const auto from_recognize = accept(recognize(h));
  const auto rebuilt = accept(certificate_from_parts(h, from_recognize.cliques));
  CHECK(rebuilt.quotient == from_recognize.quotient);
  CHECK(rebuilt.role == from_recognize.role);
  CHECK(verify_certificate(h, rebuilt));

  CHECK(reject(certificate_from_parts(h, {{0, 2}, {1, 3}, {4, 5}})).reason ==
        RejectionReason::NotSimplicialOr1Simplicial);
  CHECK_THROWS_AS(certificate_from_parts(h, {{0, 1}, {2, 3}}), CertificateError);
  CHECK_THROWS_AS(certificate_from_parts(h, {{0, 1}, {1, 2}, {3, 4, 5}}), CertificateError);
  CHECK_THROWS_AS(certificate_from_parts(h, {{0, 1, 9}}), CertificateError);
}
