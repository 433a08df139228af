#include <gtest/gtest.h>

#include "quintic/abelian.hpp"
#include "quintic/constructions.hpp"
#include "quintic/error.hpp"
#include "quintic/graph.hpp"

using namespace quintic;

namespace {

using Edges = std::vector<std::pair<int, int>>;

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph k6() {
  const auto g = GroupSpec::parse("Z6");
  return cayley(g, g.parse_element_list("(1);(2);(3);(4);(5)"));
}

}  // namespace

TEST(Cayley, CompleteGraphOnZ6) {
  const auto g = k6();
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.regular_degree(), 5);
  EXPECT_EQ(g.edge_count(), 15u);
  EXPECT_TRUE(is_connected(g));
}

TEST(Cayley, CycleAndDisconnected) {
  const auto z6 = GroupSpec::parse("Z6");
  const auto c6 = cayley(z6, z6.parse_element_list("(1);(5)"));
  EXPECT_EQ(c6.regular_degree(), 2);
  EXPECT_TRUE(is_connected(c6));
  const auto triangles = cayley(z6, z6.parse_element_list("(2);(4)"));
  EXPECT_EQ(triangles.regular_degree(), 2);
  EXPECT_FALSE(is_connected(triangles));
}

TEST(Cayley, RejectsBadConnectionSets) {
  const auto z6 = GroupSpec::parse("Z6");
  EXPECT_THROW(cayley(z6, z6.parse_element_list("(1);(2)")), Error);
  EXPECT_THROW(cayley(z6, z6.parse_element_list("(0);(1);(5)")), Error);
}

TEST(Cayley, TranslationsAreAutomorphisms) {
  for (const auto &[group, set] :
       std::vector<std::pair<const char *, const char *>>{
           {"Z12", "(1);(11);(2);(10);(6)"},
           {"Z6xZ2", "(1,0);(5,0);(2,0);(4,0);(0,1)"},
           {"Z4xZ6", "(1,1);(3,5);(0,2);(0,4);(2,3)"}}) {
    const auto g = GroupSpec::parse(group);
    const auto graph = cayley(g, g.parse_element_list(set));
    for (const auto &shift : g.elements()) {
      std::vector<int> map;
      for (const auto &x : g.elements())
        map.push_back(static_cast<int>(g.index_of(add(g, x, shift))));
      EXPECT_TRUE(is_isomorphism(graph, graph, map)) << group << ' ' << format_element(shift);
    }
  }
}

TEST(Graph, RejectsLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph::from_edges(3, Edges{{0, 0}}), Error);
  EXPECT_THROW(Graph::from_edges(3, Edges{{0, 3}}), Error);
  const auto g = Graph::from_edges(3, Edges{{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_FALSE(g.regular_degree().has_value());
}

TEST(CartesianK2, DoublesVerticesAndAddsMatching) {
  const auto prism = cartesian_k2(cycle(6));
  EXPECT_EQ(prism.vertex_count(), 12);
  EXPECT_EQ(prism.regular_degree(), 3);
  EXPECT_EQ(prism.edge_count(), cycle(6).edge_count() * 2 + 6);

  const auto k = cartesian_k2(k6());
  EXPECT_EQ(k.vertex_count(), 12);
  EXPECT_EQ(k.regular_degree(), 6);

  const auto q = cartesian_k2(gamma(6, 1, 4));
  EXPECT_EQ(q.vertex_count(), 12);
  EXPECT_EQ(q.regular_degree(), 5);
}

TEST(PerfectCode, Examples) {
  const auto k = k6();
  EXPECT_TRUE(is_perfect_code(k, VertexSet({0})));
  EXPECT_FALSE(is_perfect_code(k, VertexSet({0, 3})));

  const auto q = cartesian_k2(gamma(6, 1, 4));
  const auto u = q.find_label({0, 0, 0});
  const auto v = q.find_label({3, 0, 1});
  ASSERT_TRUE(u && v);
  EXPECT_TRUE(is_perfect_code(q, VertexSet({*u, *v})));
}

TEST(PerfectCode, CountingCondition) {
  const auto q = cartesian_k2(gamma(6, 1, 4));
  const int n = q.vertex_count();
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) members.push_back(v);
    if (is_perfect_code(q, VertexSet(members))) {
      EXPECT_EQ(members.size() * 6, static_cast<std::size_t>(n));
      EXPECT_TRUE(is_independent(q, VertexSet(members)));
    }
  }
}

TEST(Independent, Examples) {
  const auto c6 = cycle(6);
  EXPECT_TRUE(is_independent(c6, VertexSet({0, 3})));
  EXPECT_FALSE(is_independent(c6, VertexSet({0, 1})));
  EXPECT_TRUE(is_independent(c6, VertexSet(std::vector<int>{})));
}

TEST(Export, EdgeListAndDot) {
  EXPECT_EQ(export_graph(cycle(3), ExportFormat::EdgeList), "0 1\n0 2\n1 2\n");
  const auto edge = Graph::from_edges(2, Edges{{1, 0}});
  EXPECT_NE(export_graph(edge, ExportFormat::Dot).find("0 -- 1"), std::string::npos);
  const auto empty = Graph::from_edges(2, Edges{});
  EXPECT_EQ(export_graph(empty, ExportFormat::EdgeList), "");
  EXPECT_EQ(export_graph(empty, ExportFormat::Dot).find("--"), std::string::npos);
}

TEST(Export, DotCarriesLabels) {
  const auto dot = export_graph(gamma(6, 1, 4), ExportFormat::Dot);
  EXPECT_EQ(dot.rfind("graph G {\n", 0), 0u);
  EXPECT_NE(dot.find("[label=\"(5,0)\"]"), std::string::npos);
}

TEST(Isomorphism, FindsRelabelling) {
  const auto z12 = GroupSpec::parse("Z12");
  const auto a = cayley(z12, z12.parse_element_list("(1);(11);(6)"));
  const auto b = cayley(z12, z12.parse_element_list("(5);(7);(6)"));
  const auto map = find_isomorphism(a, b, std::pair{0, 0});
  ASSERT_TRUE(map);
  EXPECT_TRUE(is_isomorphism(a, b, *map));
  EXPECT_EQ((*map)[0], 0);
}

TEST(Isomorphism, RejectsNonIsomorphic) {
  const auto z6 = GroupSpec::parse("Z6");
  const auto c6 = cayley(z6, z6.parse_element_list("(1);(5)"));
  const auto triangles = cayley(z6, z6.parse_element_list("(2);(4)"));
  EXPECT_FALSE(find_isomorphism(c6, triangles));
  EXPECT_FALSE(is_isomorphism(c6, c6, std::vector<int>{0, 0, 1, 2, 3, 4}));
}
