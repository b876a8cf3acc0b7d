#include <doctest.h>

#include <random>

#include "corpus_set.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pmsat/graph.hpp"
#include "pmsat/reduce.hpp"

using namespace pmsat;

namespace {

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph k33() {
  Graph g(6);
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 3; v < 6; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph wheel(std::size_t rim) {
  Graph g = cycle(rim);
  Graph w(rim + 1);
  for (auto [u, v] : g.edges()) w.add_edge(u, v);
  for (Vertex v = 0; v < rim; ++v) w.add_edge(rim, v);
  return w;
}

Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Graph g(n);
  for (std::size_t i = 0; i < m * 4 && g.num_edges() < m; ++i) {
    const Vertex u = rng() % n, v = rng() % n;
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("incidence graph shape") {
  SUBCASE("one clause is a star centred on the clause") {
    const auto g = incidence_graph(make(3, {{1, 2, 3}}));
    CHECK(g.graph.num_vertices() == 4);
    CHECK(g.graph.num_edges() == 3);
    CHECK(g.graph.degree(g.clause_vertex(0)) == 3);
  }
  SUBCASE("repeated literals add one edge") {
    const auto g = incidence_graph(make(1, {{1, 1, 1}}, ClauseMode::multiset));
    CHECK(g.graph.num_vertices() == 2);
    CHECK(g.graph.num_edges() == 1);
  }
  SUBCASE("replacement of {x,y} has 9 vertices and 12 edges") {
    const auto out = r1_replace(make(2, {{1, 2}}), 0).instance;
    const auto g = incidence_graph(out);
    CHECK(g.graph.num_vertices() == 9);
    CHECK(g.graph.num_edges() == 12);
  }
  SUBCASE("ignores polarity and literal order") {
    const auto a = incidence_graph(make(3, {{1, -2, 3}, {-1, 2}}));
    const auto b = incidence_graph(make(3, {{3, 2, -1}, {2, 1}}));
    CHECK(a.graph.edges().size() == b.graph.edges().size());
    for (auto [u, v] : a.graph.edges()) CHECK(b.graph.has_edge(u, v));
  }
  SUBCASE("bipartite") {
    for (const auto& item : testing_corpus::base()) {
      const auto g = incidence_graph(item.instance);
      for (auto [u, v] : g.graph.edges()) CHECK(g.is_variable(u) != g.is_variable(v));
    }
  }
}

TEST_CASE("planarity on known graphs") {
  const auto r33 = is_planar(k33());
  CHECK_FALSE(r33.planar);
  CHECK(r33.witness_kind == KuratowskiKind::k33);
  CHECK(kuratowski_kind(r33.witness) == KuratowskiKind::k33);

  const auto r5 = is_planar(complete(5));
  CHECK_FALSE(r5.planar);
  CHECK(r5.witness_kind == KuratowskiKind::k5);

  Graph tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  CHECK(is_planar(tree).planar);
  CHECK(is_planar(complete(4)).planar);
  CHECK(is_planar(wheel(5)).planar);
}

TEST_CASE("replacement of {x,y} is non-planar with a checkable witness") {
  const auto g = incidence_graph(r1_replace(make(2, {{1, 2}}), 0).instance);
  const auto r = is_planar(g);
  REQUIRE_FALSE(r.planar);
  CHECK(r.witness_kind == KuratowskiKind::k33);
  CHECK_FALSE(oracle::planar(from_edges(g.graph.num_vertices(), r.witness)));
  CHECK_FALSE(oracle::planar(g.graph));
}

TEST_CASE("planarity agrees with the rotation-system oracle on random small graphs") {
  std::mt19937_64 rng(7);
  int nonplanar = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 5 + rng() % 4;
    const Graph g = random_graph(rng, n, n + 2 + rng() % 6);
    bool feasible = true;
    double combos = 1;
    for (Vertex v = 0; v < n; ++v) {
      for (std::size_t k = 2; k < g.degree(v); ++k) combos *= static_cast<double>(k);
    }
    feasible = combos <= 2e5;
    if (!feasible) continue;
    const auto r = is_planar(g);
    CAPTURE(i);
    CHECK(r.planar == oracle::planar(g));
    if (r.planar) {
      CHECK(satisfies_euler(g, r.embedding));
    } else {
      ++nonplanar;
      CHECK(kuratowski_kind(r.witness) == r.witness_kind);
      CHECK(r.witness_kind != KuratowskiKind::none);
      for (auto [u, v] : r.witness) CHECK(g.has_edge(u, v));
      CHECK_FALSE(oracle::planar(from_edges(n, r.witness)));
    }
  }
  CHECK(nonplanar > 10);
}

TEST_CASE("embeddings of corpus graphs satisfy Euler's formula") {
  for (const auto& item : testing_corpus::with_intermediates()) {
    const auto g = incidence_graph(item.instance);
    const auto r = is_planar(g);
    CAPTURE(item.name);
    if (r.planar) {
      CHECK(satisfies_euler(g.graph, r.embedding));
      for (Vertex v = 0; v < g.graph.num_vertices(); ++v) CHECK(r.embedding[v].size() == g.graph.degree(v));
    }
  }
}

TEST_CASE("biconnectivity") {
  CHECK_FALSE(is_biconnected(Graph(2, {{0, 1}})));
  CHECK(is_biconnected(cycle(6)));
  Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK_FALSE(is_biconnected(bowtie));
  CHECK(articulation_points(bowtie) == std::vector<Vertex>{2});

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + rng() % 8;
    const Graph g = random_graph(rng, n, n + rng() % n);
    CHECK(is_biconnected(g) == oracle::biconnected(g));
  }
}

TEST_CASE("triconnectivity") {
  CHECK(is_triconnected(complete(4)));
  for (std::size_t n = 4; n <= 8; ++n) CHECK_FALSE(is_triconnected(cycle(n)));
  CHECK(is_triconnected(wheel(5)));
  CHECK(oracle::triconnected(wheel(5)));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 4 + rng() % 6;
    const Graph g = random_graph(rng, n, n + rng() % (2 * n));
    CHECK(is_triconnected(g) == oracle::triconnected(g));
  }
}

TEST_CASE("graph helpers") {
  Graph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK_FALSE(g.add_edge(2, 2));
  CHECK(g.num_edges() == 1);
  CHECK(connected_components(g) == 2);
  CHECK_FALSE(is_connected(g));
  CHECK(kuratowski_name(KuratowskiKind::k33) == "K3,3");
}
