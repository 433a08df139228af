#include <gtest/gtest.h>

#include "quintic/sweep.hpp"

using namespace quintic;

TEST(Factorizations, Examples) {
  EXPECT_EQ(factorizations(12), (std::vector<std::vector<std::int64_t>>{
                                    {2, 2, 3}, {2, 6}, {3, 4}, {12}}));
  EXPECT_EQ(factorizations(7), (std::vector<std::vector<std::int64_t>>{{7}}));
  EXPECT_TRUE(factorizations(1).empty());
}

TEST(Instances, CompleteGraphIsTheOnlyZ6Instance) {
  const auto list = quintic_instances(GroupSpec::parse("Z6"), InvolutionFilter::All);
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0].involution_count, 1);
  EXPECT_EQ(describe(list[0]), "Z6 {(1);(2);(3);(4);(5)}");
}

TEST(Instances, FilterSelectsInvolutionCount) {
  const auto g = GroupSpec::parse("Z2xZ2xZ6");
  const auto all = quintic_instances(g, InvolutionFilter::All);
  std::size_t by_count[6] = {};
  for (const auto &inst : all) {
    EXPECT_EQ(inst.set.size(), 5u);
    ++by_count[inst.involution_count];
  }
  EXPECT_EQ(quintic_instances(g, InvolutionFilter::One).size(), by_count[1]);
  EXPECT_EQ(quintic_instances(g, InvolutionFilter::Three).size(), by_count[3]);
  EXPECT_EQ(quintic_instances(g, InvolutionFilter::Five).size(), by_count[5]);
  EXPECT_EQ(by_count[1] + by_count[3] + by_count[5], all.size());
}

TEST(Sweep, SmallOrdersPassAndAreDeterministic) {
  SweepOptions opt;
  opt.max_order = 18;
  opt.threads = 1;
  const auto one = run_sweep(opt);
  EXPECT_TRUE(one.pass()) << format_summary(one);
  EXPECT_GT(one.admitting, 0u);
  EXPECT_GT(one.completeness_checked, 0u);
  opt.threads = 3;
  const auto three = run_sweep(opt);
  EXPECT_EQ(format_summary(one), format_summary(three));
}

TEST(Sweep, FamilyAndPhiSweepsOnSmallRange) {
  EXPECT_TRUE(code_family_sweep(CodeFamily::Prism, {6}, 3).pass());
  EXPECT_TRUE(code_family_sweep(CodeFamily::Antipodal, {6}, 3).pass());
  EXPECT_TRUE(code_family_sweep(CodeFamily::HalfTurn, {6}, 4).pass());
  EXPECT_TRUE(phi_sweep({6}, 3).pass());
}

TEST(InvolutionFilter, Parse) {
  EXPECT_EQ(parse_involution_filter("3"), InvolutionFilter::Three);
  EXPECT_EQ(parse_involution_filter("all"), InvolutionFilter::All);
  EXPECT_FALSE(parse_involution_filter("2"));
}
