#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "examples.hpp"
#include "random_instances.hpp"
#include "sortcut/analysis.hpp"
#include "sortcut/clock.hpp"
#include "sortcut/sortcut.hpp"

using namespace sortcut;
using namespace sortcut::testing;

namespace {

const Utility kZero = Utility::finite({});

// One unit; the loser b profits by claiming a's value.
Instance loser_witness() { return normalize(Instance{1, {{"a", 4, 2}, {"b", 2, 2}}, kEps}); }

}  // namespace

TEST(Pareto, SortCutOutcomes) {
  const BidProfile p = four_bidders_profile();
  EXPECT_TRUE(is_pareto_divisible(p, allocate_divisible(p)).is_pareto);
  EXPECT_TRUE(is_pareto_indivisible(p, allocate_indivisible(p)).is_pareto);
  EXPECT_TRUE(is_pareto_divisible(p, apa_allocate(p)).is_pareto);
}

TEST(Pareto, WithheldUnit) {
  const BidProfile p = four_bidders_profile();
  Outcome o = allocate_indivisible(p);
  o.units[1] -= 1;
  const ParetoReport r = is_pareto_indivisible(p, o);
  EXPECT_FALSE(r.is_pareto);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(std::get<UnsoldUnits>(*r.witness).amount, 1);
  EXPECT_EQ(describe(*r.witness), "unsold units = 1");
  EXPECT_TRUE(witness_holds(p, o, *r.witness, Mode::kIndivisible));
}

TEST(Pareto, HigherBidderKeepsBudget) {
  const BidProfile p = four_bidders_profile();
  Outcome o = allocate_divisible(p);
  // move a sliver of bidder 1's units, and her payment, to bidder 2
  o.units[0] -= Rational(1, 10);
  o.units[1] += Rational(1, 10);
  o.payments[0] -= 1;
  const ParetoReport r = is_pareto_divisible(p, o);
  EXPECT_FALSE(r.is_pareto);
  ASSERT_TRUE(r.witness);
  const auto slack = std::get<BudgetSlack>(*r.witness);
  EXPECT_EQ(slack.higher, 0u);
  EXPECT_EQ(slack.allocated, 1u);
  EXPECT_TRUE(witness_holds(p, o, *r.witness, Mode::kDivisible));
  EXPECT_FALSE(witness_holds(p, allocate_divisible(p), *r.witness, Mode::kDivisible));
}

TEST(Pareto, IndivisibleSlackNeedsAWholeUnit) {
  const BidProfile p = four_bidders_profile();
  Outcome o = allocate_indivisible(p);
  // bidder 1 keeps 3 unspent < v_2 = 9: fine. With 9 unspent she could buy.
  o.payments[0] -= 6;
  const ParetoReport r = is_pareto_indivisible(p, o);
  EXPECT_FALSE(r.is_pareto);
  EXPECT_EQ(std::get<BudgetSlack>(*r.witness), (BudgetSlack{0, 1}));
}

TEST(Pareto, AllToTopBidder) {
  const Instance in = normalize(Instance{2, {{"a", 9, 100}, {"b", 5, 100}}, kEps});
  const BidProfile p = BidProfile::truthful(in);
  Outcome o;
  o.units = {2, 0, 0};
  o.payments = {10, 0, 0};
  EXPECT_TRUE(is_pareto_indivisible(p, o).is_pareto);
}

TEST(Pareto, RandomSortCutOutcomes) {
  InstanceGenerator gen(55);
  for (int t = 0; t < 300; ++t) {
    const BidProfile p = BidProfile::truthful(gen.next());
    EXPECT_TRUE(is_pareto_divisible(p, allocate_divisible(p)).is_pareto);
  }
}

TEST(Revenue, FourBidders) {
  const RevenueGap g = revenue_gap(four_bidders());
  EXPECT_EQ(g.revenue, Rational(1108, 9));
  EXPECT_EQ(g.r_star, 133);
  EXPECT_EQ(g.b_max, 60);
  EXPECT_GE(g.revenue, g.r_star - g.b_max);
}

TEST(Revenue, LoneBidderIsTight) {
  const RevenueGap g = revenue_gap(lone_bidder());
  EXPECT_EQ(g.revenue, Rational(1, 50));
  EXPECT_EQ(g.r_star, 10);
  EXPECT_EQ(g.b_max, 10);
  EXPECT_EQ(g.r_star - g.b_max, 0);
}

TEST(Revenue, IdenticalRichBiddersReachClockRevenue) {
  const RevenueGap g = revenue_gap(normalize(Instance{10, {{"a", 5, 1000}, {"b", 5, 1000}, {"c", 5, 1000}}, kEps}));
  EXPECT_EQ(g.r_star, 50);
  EXPECT_EQ(g.revenue, 50);
}

TEST(Revenue, RandomBounds) {
  InstanceGenerator gen(66);
  for (int t = 0; t < 300; ++t) {
    const RevenueGap g = revenue_gap(gen.next());
    EXPECT_LE(g.r_star - g.b_max, g.revenue);
    EXPECT_LE(g.revenue, g.r_star);
  }
}

TEST(Utility, Arithmetic) {
  const Utility two = Utility::finite(2);
  EXPECT_EQ(Utility::neg_inf() - two, Utility::neg_inf());
  EXPECT_EQ(two - Utility::neg_inf(), Utility::pos_inf());
  EXPECT_EQ(Utility::neg_inf() - Utility::neg_inf(), Utility::neg_inf());
  EXPECT_EQ(two - Utility::finite(3), Utility::finite(-1));
  EXPECT_LT(Utility::neg_inf(), Utility::finite(-1000000));
  EXPECT_LT(Utility::finite(1000000), Utility::pos_inf());
  EXPECT_EQ(Utility::neg_inf().to_string(), "-inf");
  EXPECT_EQ(Utility::finite(Rational(1, 2)).to_string(), "1/2");
}

TEST(Deviation, Classify) {
  const Bid truth{5, 10};
  EXPECT_EQ(classify(truth, truth), DeviationClass::kNone);
  EXPECT_EQ(classify(truth, {6, 10}), DeviationClass::kValueOver);
  EXPECT_EQ(classify(truth, {6, 5}), DeviationClass::kValueOver);
  EXPECT_EQ(classify(truth, {5, 12}), DeviationClass::kBudgetOver);
  EXPECT_EQ(classify(truth, {4, 8}), DeviationClass::kBudgetUnder);
  EXPECT_EQ(classify(truth, {4, 10}), DeviationClass::kValueUnder);
  EXPECT_EQ(to_string(DeviationClass::kBudgetOver), "budget-over");
}

TEST(Deviation, OverstatedBudgetIsMinusInfinity) {
  const BidProfile p = four_bidders_profile().with_bid(2, Bid{7, 41});
  EXPECT_EQ(expected_utility(p, allocate_divisible(p), 2), Utility::neg_inf());
  // not paying anything keeps the lie harmless
  const BidProfile q = four_bidders_profile().with_bid(3, Bid{6, 31});
  EXPECT_EQ(expected_utility(q, allocate_divisible(q), 3), kZero);
}

TEST(Deviation, GridContents) {
  const Instance in = four_bidders();
  const DeviationGrid g = default_grid(in, 2);
  EXPECT_GE(g.values.size(), 25u);
  EXPECT_GE(g.budgets.size(), 25u);
  auto has = [](const std::vector<Rational>& xs, const Rational& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };
  EXPECT_TRUE(has(g.values, 7));
  EXPECT_TRUE(has(g.values, 10));
  EXPECT_TRUE(has(g.values, 6));
  for (const Rational f : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1), Rational(5, 4)}) {
    EXPECT_TRUE(has(g.budgets, f * 40)) << f;
  }
  for (const auto& v : g.values) EXPECT_GT(v, in.dummy_value);
  EXPECT_THROW(default_grid(in, 4), std::out_of_range);
}

TEST(Deviation, TruthGainsNothing) {
  const Instance in = four_bidders();
  const DeviationGrid g{{in.bidders[1].value}, {in.bidders[1].budget}};
  const DeviationReport r = best_deviation(in, 1, g);
  EXPECT_EQ(r.gain, kZero);
  EXPECT_EQ(r.deviation_class, DeviationClass::kNone);
}

TEST(Deviation, LoserOverstatesValue) {
  const Instance in = loser_witness();
  const BidProfile p = BidProfile::truthful(in);
  ASSERT_EQ(allocate_divisible(p).units[1], 0);
  const BidProfile lie = p.with_bid(1, Bid{4, 2});
  EXPECT_EQ(expected_utility(lie, allocate_divisible(lie), 1), Utility::finite(Rational(398, 799)));

  const DeviationSearch s = search_deviations(p, 1, default_grid(in, 1));
  const auto& over = s.of(DeviationClass::kValueOver);
  ASSERT_TRUE(over);
  EXPECT_GT(over->gain, kZero);
  EXPECT_FALSE(is_equilibrium(p).is_equilibrium);
}

TEST(Deviation, SemiTruthfulOnRandomInstances) {
  RandomInstanceOptions opts;
  opts.max_bidders = 4;
  InstanceGenerator gen(12, opts);
  for (int t = 0; t < 25; ++t) {
    const Instance in = gen.next();
    const BidProfile p = BidProfile::truthful(in);
    for (std::size_t i = 0; i < in.dummy_index(); ++i) {
      const DeviationSearch s = search_deviations(p, i, default_grid(in, i, 12));
      for (const auto c : {DeviationClass::kBudgetUnder, DeviationClass::kBudgetOver, DeviationClass::kValueUnder}) {
        if (s.of(c)) EXPECT_LE(s.of(c)->gain, kZero) << to_string(c) << " instance " << t << " bidder " << i;
      }
    }
  }
}

// Weak dominance is checked against random opponent bids too.
TEST(Deviation, SemiTruthfulAgainstRandomOpponents) {
  RandomInstanceOptions opts;
  opts.max_bidders = 4;
  InstanceGenerator gen(13, opts);
  std::uniform_int_distribution<int> scale(1, 200);
  for (int t = 0; t < 4; ++t) {
    const Instance in = gen.next();
    const std::size_t me = 0;
    for (int r = 0; r < 20; ++r) {
      BidProfile base = BidProfile::truthful(in);
      for (std::size_t j = 1; j < in.dummy_index(); ++j) {
        const Bidder& b = in.bidders[j];
        base = base.with_bid(j, Bid{max(b.value * Rational(scale(gen.rng()), 100), in.dummy_value * 2),
                                    b.budget * Rational(scale(gen.rng()), 100)});
      }
      const DeviationSearch s = search_deviations(base, me, default_grid(in, me, 8));
      for (const auto c : {DeviationClass::kBudgetUnder, DeviationClass::kBudgetOver, DeviationClass::kValueUnder}) {
        if (s.of(c)) EXPECT_LE(s.of(c)->gain, kZero) << to_string(c);
      }
    }
  }
}

TEST(Equilibrium, LosersJustBelowClearingPrice) {
  // one rich winner, two losers; sum of budgets far above 2 R*
  const Instance in = normalize(Instance{10, {{"a", 10, 50}, {"b", 3, 200}, {"c", 2, 200}}, kEps});
  const Rational v_star = clearing_price(BidProfile::truthful(in)).clearing_price;
  ASSERT_EQ(v_star, 5);
  const Rational below = v_star - Rational(1, 100);
  const BidProfile stated = BidProfile::truthful(in).with_bid(1, Bid{below, 200}).with_bid(2, Bid{below, 200});
  const Outcome o = allocate_divisible(stated);
  EXPECT_EQ(o.units[0], 10);
  EXPECT_EQ(o.payments[0], 10 * below);
  EXPECT_EQ(o.units[1], 0);
  EXPECT_EQ(o.units[2], 0);
  EXPECT_TRUE(is_equilibrium(stated, 10).is_equilibrium);
}

// With a single loser the same construction fails: bidding just under the
// winner makes her the boundary, and she buys the leftover units from the
// dummy at its price.
TEST(Equilibrium, SingleLoserOutbidsTheConstruction) {
  const Instance in = normalize(Instance{10, {{"A", 10, 50}, {"L", 3, 200}}, kEps});
  const BidProfile stated = BidProfile::truthful(in).with_bid(1, Bid{5 - Rational(1, 100), 200});
  const EquilibriumReport r = is_equilibrium(stated, 25);
  EXPECT_FALSE(r.is_equilibrium);
  ASSERT_TRUE(r.worst);
  EXPECT_EQ(r.worst->bidder, 1u);
  EXPECT_EQ(r.worst->deviation_class, DeviationClass::kValueOver);

  const BidProfile high = stated.with_bid(1, Bid{Rational(999, 100), 200});
  const Outcome o = allocate_divisible(high);
  EXPECT_GT(o.units[1], 0);
  EXPECT_EQ(o.payments[1], o.dummy_tier_payments[1]);
}

TEST(Equilibrium, LoneBidder) {
  const BidProfile p = BidProfile::truthful(lone_bidder());
  EXPECT_TRUE(is_equilibrium(p).is_equilibrium);
}
