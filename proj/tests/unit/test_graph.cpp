#include <gtest/gtest.h>

#include <random>

#include "latmono/graph.hpp"

using namespace latmono;

namespace {

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph cube() {
  Graph g(8);
  for (std::size_t v = 0; v < 8; ++v)
    for (std::size_t bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
  return g;
}

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Permutation::Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Permutation::Point>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
  return Permutation(img);
}

bool is_isomorphism(const Graph& a, const Graph& b, const Permutation& p) {
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v)
      if (u != v && a.adjacent(u, v) != b.adjacent(p[u], p[v])) return false;
  return true;
}

}  // namespace

TEST(Graph, BasicStructure) {
  const Graph p = petersen();
  EXPECT_EQ(p.edge_count(), 15u);
  EXPECT_EQ(p.regular_degree(), std::optional<std::size_t>(3));
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  g.add_edge(0, 1);
  EXPECT_FALSE(g.regular_degree().has_value());
  EXPECT_EQ(g.complement().edge_count(), 2u);
}

TEST(Graph, AdjacencyListFormat) {
  Graph g(3, {"a", "b", "c"});
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  EXPECT_EQ(g.adjacency_list(), "a: 2\nb: 2\nc: 0 1\n");
}

TEST(Automorphisms, KnownOrders) {
  EXPECT_EQ(automorphism_group(petersen()).order, 120);
  EXPECT_EQ(automorphism_group(cube()).order, 48);
  EXPECT_EQ(automorphism_group(complete_graph(6)).order, 720);
  EXPECT_EQ(automorphism_group(Graph(5)).order, 120);
  for (std::size_t n = 3; n <= 12; ++n)
    EXPECT_EQ(automorphism_group(cycle_graph(n)).order, Integer(static_cast<unsigned long>(2 * n))) << n;
}

TEST(Automorphisms, GeneratorsAreAutomorphisms) {
  const Graph p = petersen();
  const AutomorphismResult r = automorphism_group(p);
  for (const auto& g : r.group.generators()) EXPECT_TRUE(p.is_automorphism(g));
  EXPECT_EQ(r.group.order(), r.order);
  EXPECT_TRUE(r.group.is_transitive());
}

TEST(Automorphisms, DisjointUnion) {
  // C5 + C5: (10·10)·2
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 1) % 5);
  }
  EXPECT_EQ(automorphism_group(g).order, 200);
}

TEST(Isomorphism, RelabeledCopies) {
  std::mt19937 rng(99);
  for (const Graph& g : {petersen(), cube(), cycle_graph(9)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Graph h = g.relabeled(random_perm(rng, g.size()));
      const auto iso = find_isomorphism(g, h);
      ASSERT_TRUE(iso.has_value());
      EXPECT_TRUE(is_isomorphism(g, h, *iso));
    }
  }
}

TEST(Isomorphism, NonIsomorphicPairs) {
  // Petersen vs the 5-prism: both cubic on 10 vertices.
  Graph prism(10);
  for (std::size_t i = 0; i < 5; ++i) {
    prism.add_edge(i, (i + 1) % 5);
    prism.add_edge(i, i + 5);
    prism.add_edge(5 + i, 5 + (i + 1) % 5);
  }
  EXPECT_FALSE(are_isomorphic(petersen(), prism));
  // C6 vs two triangles
  Graph tri(6);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  tri.add_edge(3, 4);
  tri.add_edge(4, 5);
  tri.add_edge(3, 5);
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), tri));
}

TEST(IntersectionGraph, EdgeValue) {
  const std::vector<IntVector> v{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}, {Integer(1), Integer(1)}};
  const Graph g = intersection_graph(v, IntMatrix::identity(2), Integer(1));
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(Neighborhood, OfPetersenVertex) {
  const Graph n = neighborhood_subgraph(petersen(), 0);
  EXPECT_EQ(n.size(), 3u);
  EXPECT_EQ(n.edge_count(), 0u);
}
