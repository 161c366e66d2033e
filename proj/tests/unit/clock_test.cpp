#include <gtest/gtest.h>

#include "examples.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"
#include "sortcut/clock.hpp"

using namespace sortcut;
using namespace sortcut::testing;

TEST(Clock, FourBidders) {
  const ClockResult r = clearing_price(four_bidders_profile());
  EXPECT_EQ(r.clearing_price, 7);
  EXPECT_EQ(r.r_star, 133);
  EXPECT_EQ(r.marginal_index, 2u);
  EXPECT_TRUE(r.partial);
  const std::vector<Rational> y{Rational(55, 7), Rational(60, 7), Rational(18, 7), 0, 0};
  const std::vector<Rational> pay{55, 60, 18, 0, 0};
  EXPECT_EQ(r.outcome.units, y);
  EXPECT_EQ(r.outcome.payments, pay);
  EXPECT_EQ(r.outcome.revenue, 133);
  EXPECT_FALSE(r.outcome.cut);
  EXPECT_EQ(apa_allocate(four_bidders_profile()).units, y);
}

TEST(Clock, TwoBidders) {
  const ClockResult rich = clearing_price(BidProfile::truthful(two_bidders(20)));
  EXPECT_EQ(rich.clearing_price, 3);
  EXPECT_EQ(rich.r_star, 15);
  EXPECT_TRUE(rich.partial);
  EXPECT_EQ(rich.outcome.units[0], 5);
  EXPECT_EQ(rich.outcome.units[1], 0);

  const ClockResult poor = clearing_price(BidProfile::truthful(two_bidders(2)));
  EXPECT_EQ(poor.clearing_price, 1);
  EXPECT_EQ(poor.r_star, 5);
  EXPECT_EQ(poor.outcome.units[0], 2);
  EXPECT_EQ(poor.outcome.units[1], 3);
}

TEST(Clock, LoneBidderInterior) {
  const ClockResult r = clearing_price(BidProfile::truthful(lone_bidder()));
  EXPECT_EQ(r.clearing_price, 5);
  EXPECT_EQ(r.r_star, 10);
  EXPECT_EQ(r.outcome.units[0], 2);
  EXPECT_EQ(r.outcome.payments[0], 10);
}

TEST(Clock, HugeSupplyFallsToDummyTier) {
  // real money exactly covers the supply at the dummy price
  const Instance in = normalize(Instance{3000, {{"a", 5, 10}, {"b", 3, 20}}, kEps});
  const ClockResult r = clearing_price(BidProfile::truthful(in));
  EXPECT_EQ(r.clearing_price, kEps);
  EXPECT_EQ(r.outcome.payments[0], 10);
  EXPECT_EQ(r.outcome.payments[1], 20);
  EXPECT_EQ(r.outcome.units[0], 1000);
  EXPECT_EQ(r.outcome.units[2], 0);
  EXPECT_EQ(r.r_star, 30);
}

TEST(Clock, TiedMarginalBiddersFillInOrder) {
  // tier at 4 holds 30 of money but only 5 units * 4 = 20 clear there
  const Instance in = normalize(Instance{5, {{"a", 4, 10}, {"b", 4, 20}, {"c", 1, 5}}, kEps});
  const ClockResult r = clearing_price(BidProfile::truthful(in));
  EXPECT_EQ(r.clearing_price, 4);
  EXPECT_EQ(r.outcome.payments[0], 20);  // b ranks first on budget
  EXPECT_EQ(r.outcome.units[0], 5);
  EXPECT_EQ(r.outcome.units[1], 0);
}

TEST(ClockProperties, RandomInstances) {
  InstanceGenerator gen(8080);
  const Rational step(1, 64);
  for (int t = 0; t < 300; ++t) {
    const Instance in = gen.next();
    const ClockResult r = clearing_price(BidProfile::truthful(in));
    const Rational& v = r.clearing_price;
    EXPECT_EQ(r.r_star, in.supply * v);
    EXPECT_EQ(r.outcome.revenue, r.r_star);
    EXPECT_EQ(r.outcome.units_sold(), in.supply);

    Rational winners_money;
    for (std::size_t i = 0; i < in.size(); ++i) {
      const Bidder& b = in.bidders[i];
      EXPECT_LE(r.outcome.payments[i], b.budget);
      if (b.value < v) EXPECT_EQ(r.outcome.units[i], 0);
      if (b.value >= v) winners_money += b.budget;
      if (r.outcome.units[i].sign() > 0) EXPECT_EQ(r.outcome.payments[i], r.outcome.units[i] * v);
    }
    EXPECT_LE(r.r_star, winners_money);

    if (v > in.dummy_value) {
      const auto g = oracle_clock_bracket(in, step);
      ASSERT_TRUE(g);
      EXPECT_LE(*g, v);
      EXPECT_LE(v, *g + step);
    }
  }
}
