#include <gtest/gtest.h>

#include <algorithm>

#include "quintic/abelian.hpp"
#include "quintic/error.hpp"

using namespace quintic;

namespace {

ErrorKind kind_of(const auto &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::InternalAssertion;
}

}  // namespace

TEST(GroupSpec, ParsesCaseInsensitively) {
  const auto g = GroupSpec::parse("z6XZ2");
  EXPECT_EQ(g.factors(), (std::vector<std::int64_t>{6, 2}));
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.to_string(), "Z6xZ2");
}

TEST(GroupSpec, RejectsBadText) {
  EXPECT_EQ(kind_of([] { GroupSpec::parse("Z6x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { GroupSpec::parse("6xZ2"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { GroupSpec::parse("Z1"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { GroupSpec(std::vector<std::int64_t>{6, 1}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { GroupSpec(std::vector<std::int64_t>{}); }), ErrorKind::InvalidInput);
}

TEST(GroupSpec, ParseErrorNamesPosition) {
  try {
    GroupSpec::parse("Z6xQ2");
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
}

TEST(GroupSpec, ElementLiterals) {
  const auto g = GroupSpec::parse("Z6xZ2");
  EXPECT_EQ(g.parse_element("(5,1)"), g.make({5, 1}));
  EXPECT_EQ(g.parse_element("( -1 , 3 )"), g.make({5, 1}));
  EXPECT_EQ(kind_of([&] { g.parse_element("(1)"); }), ErrorKind::DimensionMismatch);
  const auto list = g.parse_element_list("(1,0);(5,0);(0,1)");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[2], g.make({0, 1}));
}

TEST(GroupSpec, IndexRoundTrip) {
  const auto g = GroupSpec::parse("Z3xZ4xZ2");
  const auto all = g.elements();
  ASSERT_EQ(all.size(), 24u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(g.index_of(all[i]), i);
}

TEST(Arithmetic, Add) {
  const auto g = GroupSpec::parse("Z6xZ2");
  EXPECT_EQ(add(g, g.make({5, 1}), g.make({2, 1})), g.make({1, 0}));
  EXPECT_EQ(add(g, g.identity(), g.make({4, 1})), g.make({4, 1}));
  const auto z4 = GroupSpec::parse("Z4");
  EXPECT_EQ(add(z4, z4.make({3}), z4.make({3})), z4.make({2}));
}

TEST(Arithmetic, Scale) {
  const auto g = GroupSpec::parse("Z6xZ2");
  EXPECT_EQ(scale(g, 3, g.make({1, 1})), g.make({3, 1}));
  EXPECT_EQ(scale(g, 0, g.make({1, 1})), g.identity());
  const auto z6 = GroupSpec::parse("Z6");
  EXPECT_EQ(scale(z6, -1, z6.make({2})), z6.make({4}));
}

TEST(Arithmetic, Order) {
  const auto z6 = GroupSpec::parse("Z6");
  EXPECT_EQ(order_of(z6, z6.make({2})), 3);
  const auto g = GroupSpec::parse("Z6xZ2");
  EXPECT_EQ(order_of(g, g.make({3, 1})), 2);
  EXPECT_EQ(order_of(g, g.identity()), 1);
}

TEST(Arithmetic, LagrangeOnSmallGroups) {
  for (const char *text : {"Z12", "Z6xZ2", "Z2xZ2xZ3", "Z4xZ6", "Z3xZ3xZ2"}) {
    const auto g = GroupSpec::parse(text);
    for (const auto &x : g.elements()) {
      const auto o = order_of(g, x);
      EXPECT_EQ(g.order() % o, 0);
      EXPECT_EQ(scale(g, o, x), g.identity());
    }
  }
}

TEST(Span, Examples) {
  const auto z6 = GroupSpec::parse("Z6");
  const std::vector<Element> two{z6.make({2})};
  EXPECT_EQ(span(z6, two),
            (std::vector<Element>{z6.make({0}), z6.make({2}), z6.make({4})}));
  const auto g = GroupSpec::parse("Z6xZ2");
  const std::vector<Element> basis{g.make({1, 0}), g.make({0, 1})};
  EXPECT_EQ(span(g, basis).size(), 12u);
  EXPECT_EQ(span(g, std::vector<Element>{}), std::vector<Element>{g.identity()});
}

TEST(Span, ClosedSubgroup) {
  const auto g = GroupSpec::parse("Z4xZ6");
  const std::vector<Element> gens{g.make({2, 3}), g.make({0, 4})};
  const auto h = span(g, gens);
  EXPECT_TRUE(std::binary_search(h.begin(), h.end(), g.identity()));
  for (const auto &x : h) {
    EXPECT_TRUE(std::binary_search(h.begin(), h.end(), negate(g, x)));
    for (const auto &y : h)
      EXPECT_TRUE(std::binary_search(h.begin(), h.end(), add(g, x, y)));
  }
}

TEST(Involutions, Examples) {
  const auto z6 = GroupSpec::parse("Z6");
  EXPECT_EQ(involutions(z6), std::vector<Element>{z6.make({3})});
  const auto g = GroupSpec::parse("Z6xZ2");
  EXPECT_EQ(involutions(g), (std::vector<Element>{g.make({0, 1}), g.make({3, 0}),
                                                  g.make({3, 1})}));
  EXPECT_TRUE(involutions(GroupSpec::parse("Z5")).empty());
}

TEST(ConnectionSet, Validation) {
  const auto z6 = GroupSpec::parse("Z6");
  const auto full = validate_connection_set(z6, z6.parse_element_list("(1);(2);(3);(4);(5)"));
  EXPECT_TRUE(full.inverse_closed);
  EXPECT_TRUE(full.excludes_identity);
  EXPECT_TRUE(full.generates);
  EXPECT_EQ(full.involution_count, 1);
  EXPECT_EQ(full.distinct_count, 5);
  EXPECT_FALSE(validate_connection_set(z6, z6.parse_element_list("(1);(2)")).inverse_closed);
  EXPECT_FALSE(validate_connection_set(z6, z6.parse_element_list("(0);(1);(5);(2);(4)"))
                   .excludes_identity);
  EXPECT_FALSE(validate_connection_set(z6, z6.parse_element_list("(2);(4)")).generates);
}

TEST(ConnectionSet, InverseClosedMultisetIsSymmetric) {
  const auto g = GroupSpec::parse("Z6xZ2");
  auto s = g.parse_element_list("(1,0);(5,0);(2,1);(4,1);(3,0)");
  ASSERT_TRUE(validate_connection_set(g, s).inverse_closed);
  std::vector<Element> negated;
  for (const auto &x : s) negated.push_back(negate(g, x));
  std::sort(s.begin(), s.end());
  std::sort(negated.begin(), negated.end());
  EXPECT_EQ(s, negated);
}
