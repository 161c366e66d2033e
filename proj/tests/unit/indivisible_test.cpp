#include <gtest/gtest.h>

#include "examples.hpp"
#include "random_instances.hpp"
#include "sortcut/analysis.hpp"
#include "sortcut/errors.hpp"
#include "sortcut/sortcut.hpp"

using namespace sortcut;
using namespace sortcut::testing;

TEST(Indivisible, FourBidders) {
  const Outcome o = allocate_indivisible(four_bidders_profile());
  ASSERT_TRUE(o.cut);
  EXPECT_EQ(o.cut->x, 121);
  EXPECT_EQ(o.cut->k, 2u);
  EXPECT_EQ(o.cut->residual, 34);
  const std::vector<Rational> y{8, 11, 0, 0, 0};
  EXPECT_EQ(o.units, y);
  EXPECT_EQ(o.payments[0], 52);
  // bidder 2 buys her last two units from the dummy
  EXPECT_EQ(o.payments[1], Rational(2901, 50));
  EXPECT_EQ(o.dummy_tier_payments[1], Rational(1, 50));
  EXPECT_EQ(o.payments[1] - o.dummy_tier_payments[1], 58);
  EXPECT_EQ(o.revenue, Rational(5501, 50));
  EXPECT_EQ(o.revenue_excluding_dummy_tier(), 110);
  EXPECT_EQ(o.mode, Mode::kIndivisible);
}

TEST(Indivisible, TrialCutAt92) {
  const Outcome o = indivisible_at(four_bidders_profile(), 92);
  EXPECT_EQ(o.units[0], 7);
  EXPECT_EQ(o.payments[0], 53);
  EXPECT_EQ(o.units_sold(), 12);
}

TEST(Indivisible, ParetoOnFourBidders) {
  const BidProfile p = four_bidders_profile();
  EXPECT_TRUE(is_pareto_indivisible(p, allocate_indivisible(p)).is_pareto);
}

TEST(Indivisible, RejectsFractionalSupply) {
  EXPECT_THROW(allocate_indivisible(BidProfile::truthful(four_bidders(Rational(19, 2)))), InvalidInstanceError);
}

// With one unit, the unit goes to the first bidder i whose budget covers
// v_j, where j is the first position having such an i before it.
TEST(Indivisible, SingleUnitGoesToFirstAffordingBidder) {
  const Instance in = normalize(Instance{1, {{"a", 10, 3}, {"b", 8, 9}, {"c", 5, 20}, {"d", 4, 30}}, kEps});
  const Outcome o = allocate_indivisible(BidProfile::truthful(in));
  const std::vector<Rational> y{0, 1, 0, 0, 0};
  EXPECT_EQ(o.units, y);
  EXPECT_EQ(o.payments[1], 5);
}

TEST(Indivisible, SingleUnitWithoutBudgetLimitsIsSecondPrice) {
  const Instance in = normalize(Instance{1, {{"a", 10, 100}, {"b", 8, 100}, {"c", 5, 100}}, kEps});
  const Outcome o = allocate_indivisible(BidProfile::truthful(in));
  EXPECT_EQ(o.units[0], 1);
  EXPECT_EQ(o.payments[0], 8);
}

TEST(Indivisible, RandomInstances) {
  RandomInstanceOptions opts;
  opts.integer_supply = true;
  InstanceGenerator gen(31337, opts);
  int cleared = 0;
  for (int t = 0; t < 300; ++t) {
    const Instance in = gen.next();
    const BidProfile p = BidProfile::truthful(in);
    Outcome o;
    try {
      o = allocate_indivisible(p);
    } catch (const IndivisibleClearingError& e) {
      EXPECT_LE(e.x_low, e.x_high);
      Rational low;
      Rational high;
      for (const auto& u : e.units_low) low += u;
      for (const auto& u : e.units_high) high += u;
      EXPECT_LT(low, in.supply);
      continue;
    }
    ++cleared;
    EXPECT_EQ(o.units_sold(), in.supply);
    Rational revenue;
    for (std::size_t i = 0; i < in.size(); ++i) {
      EXPECT_TRUE(o.units[i].is_integer());
      EXPECT_LE(o.payments[i], in.bidders[i].budget);
      EXPECT_LE(o.dummy_tier_payments[i], o.payments[i]);
      revenue += o.payments[i];
    }
    EXPECT_EQ(revenue, o.revenue);
    // the returned cut is the first candidate that sells everything
    const Outcome again = indivisible_at(p, o.cut->x);
    EXPECT_EQ(again.units, o.units);
  }
  EXPECT_GT(cleared, 200);
}
