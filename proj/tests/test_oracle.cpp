#include <gtest/gtest.h>

#include "quintic/abelian.hpp"
#include "quintic/constructions.hpp"
#include "quintic/error.hpp"
#include "quintic/oracle.hpp"

using namespace quintic;

namespace {

Graph k6() {
  const auto g = GroupSpec::parse("Z6");
  return cayley(g, g.parse_element_list("(1);(2);(3);(4);(5)"));
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST(FindPerfectCode, CompleteGraph) {
  EXPECT_EQ(find_perfect_code(k6()), VertexSet({0}));
}

TEST(FindPerfectCode, QuinticPrism) {
  const auto g = cartesian_k2(gamma(6, 1, 4));
  const auto code = find_perfect_code(g);
  ASSERT_TRUE(code);
  EXPECT_EQ(code->size(), 2u);
  EXPECT_TRUE(is_perfect_code(g, *code));
}

TEST(FindPerfectCode, CountingReject) {
  EXPECT_FALSE(find_perfect_code(cycle(5)));
  EXPECT_FALSE(find_perfect_code(cycle(7)));
  EXPECT_TRUE(find_perfect_code(cycle(9)));
}

TEST(FindPerfectCode, NoCodeOnZ12Instance) {
  const auto z12 = GroupSpec::parse("Z12");
  EXPECT_FALSE(find_perfect_code(cayley(z12, z12.parse_element_list("(1);(11);(2);(10);(6)"))));
}

TEST(Enumerate, CompleteGraph) {
  const auto g = k6();
  EXPECT_EQ(enumerate_perfect_codes(g, 0), std::vector<VertexSet>{VertexSet({0})});
  const auto all = enumerate_perfect_codes(g);
  ASSERT_EQ(all.size(), 6u);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(all[v], VertexSet({v}));
}

TEST(Enumerate, TwistedPrismContainsHandCode) {
  const auto g = gamma_dprime(6, 2, 4);
  const auto codes = enumerate_perfect_codes(g, *g.find_label({0, 0}));
  const VertexSet hand({*g.find_label({0, 0}), *g.find_label({3, 0})});
  EXPECT_NE(std::find(codes.begin(), codes.end(), hand), codes.end());
  for (const auto &c : codes) EXPECT_TRUE(is_perfect_code(g, c));
}

TEST(Enumerate, RestrictionCommutesWithFilter) {
  for (const auto &g : {cartesian_k2(gamma(6, 3, 0)), gamma_prime(12, 2, 2),
                        gamma_dprime(6, 4, 0), cycle(12)}) {
    const auto all = enumerate_perfect_codes(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<VertexSet> filtered;
      for (const auto &c : all)
        if (c.contains(v)) filtered.push_back(c);
      EXPECT_EQ(enumerate_perfect_codes(g, v), filtered);
    }
  }
}

TEST(Enumerate, MatchesNaiveOnSmallGraphs) {
  for (const auto &g : {k6(), cartesian_k2(gamma(6, 1, 4)), gamma(6, 3, 0),
                        gamma_prime(6, 3, 0), gamma_dprime(6, 2, 4), cycle(9),
                        cycle(8)}) {
    EXPECT_EQ(enumerate_perfect_codes(g), enumerate_perfect_codes_naive(g));
  }
}

TEST(Naive, RejectsIrregularAndLarge) {
  EXPECT_THROW(enumerate_perfect_codes_naive(
                   Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}})),
               Error);
  EXPECT_THROW(enumerate_perfect_codes_naive(cycle(66)), Error);
}

TEST(Enumerate, InvalidContainingVertex) {
  EXPECT_THROW(enumerate_perfect_codes(k6(), 6), Error);
}
