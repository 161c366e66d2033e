#include <algorithm>
#include <stdexcept>

#include "market.hpp"
#include "sortcut/sortcut.hpp"

namespace sortcut {

namespace {

using detail::Market;

struct Tier {
  const Rational* price;
  Rational count;  // whole units on offer
  bool at_dummy;
};

// Tiers are consumed in order. A tier the bidder can only partly afford ends
// her walk, even when cheaper tiers follow.
detail::Purchase integer_walk(Rational money, const std::vector<Tier>& tiers, Rational& supply_left) {
  detail::Purchase p;
  for (const auto& tier : tiers) {
    if (supply_left.sign() <= 0) break;
    if (tier.count.sign() == 0) continue;
    const Rational affordable = (money / *tier.price).floor();
    const Rational take = min(min(affordable, tier.count), supply_left);
    const Rational cost = take * *tier.price;
    p.units += take;
    p.spent += cost;
    if (tier.at_dummy) p.dummy_spent += cost;
    money -= cost;
    supply_left -= take;
    if (affordable < tier.count) break;
  }
  return p;
}

struct IntegerAllocation {
  CutPoint cut;
  std::vector<detail::Purchase> by_rank;
  Rational allocated;
};

IntegerAllocation allocate_at(const Market& market, const Rational& x) {
  IntegerAllocation out;
  const std::size_t k = market.boundary_rank(x);
  const std::size_t dummy = market.dummy_rank();
  out.cut.x = x;
  out.cut.k = k;
  out.cut.bidder = market.bidder[k];
  out.cut.residual = market.prefix[k + 1] - x;

  std::vector<Tier> tiers;
  tiers.reserve(market.size() - k);
  tiers.push_back({&market.value[k], (out.cut.residual / market.value[k]).floor(), k == dummy});
  for (std::size_t j = k + 1; j < market.size(); ++j) {
    tiers.push_back({&market.value[j], (market.budget[j] / market.value[j]).floor(), j == dummy});
  }

  Rational supply_left = market.supply;
  out.by_rank.resize(k + 1);
  for (std::size_t r = 0; r < k; ++r) out.by_rank[r] = integer_walk(market.budget[r], tiers, supply_left);
  tiers.erase(tiers.begin());
  out.by_rank[k] = integer_walk(x - market.prefix[k], tiers, supply_left);
  out.allocated = market.supply - supply_left;
  return out;
}

// Every x at which the integer allocation can change: region starts, the
// boundary residual crossing a multiple of the boundary's value, and the
// boundary's spend crossing a whole-unit threshold of its ladder.
std::vector<Rational> candidate_cuts(const Market& market) {
  std::vector<Rational> points;
  for (std::size_t k = 0; k < market.size(); ++k) {
    const Rational& lo = market.prefix[k];
    const Rational& hi = market.prefix[k + 1];
    if (market.budget[k].sign() == 0) continue;
    points.push_back(lo);

    const Rational steps = (market.budget[k] / market.value[k]).floor();
    for (Rational c = 1; c <= steps; c += 1) {
      Rational x = hi - c * market.value[k];
      if (x > lo) points.push_back(std::move(x));
    }

    Rational base;
    for (std::size_t j = k + 1; j < market.size() && lo + base < hi; ++j) {
      const Rational count = (market.budget[j] / market.value[j]).floor();
      for (Rational u = 1; u <= count; u += 1) {
        Rational x = lo + base + u * market.value[j];
        if (x >= hi) break;
        points.push_back(std::move(x));
      }
      base += count * market.value[j];
    }
  }
  points.push_back(market.total());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<Rational> units_by_bidder(const Market& market, const IntegerAllocation& a) {
  std::vector<Rational> units(market.size());
  for (std::size_t r = 0; r < a.by_rank.size(); ++r) units[market.bidder[r]] = a.by_rank[r].units;
  return units;
}

Outcome to_outcome(const Market& market, const IntegerAllocation& a) {
  Outcome out = detail::blank_outcome(market, Mode::kIndivisible);
  for (std::size_t r = 0; r < a.by_rank.size(); ++r) {
    const std::size_t i = market.bidder[r];
    out.units[i] = a.by_rank[r].units;
    out.payments[i] = a.by_rank[r].spent;
    out.dummy_tier_payments[i] = a.by_rank[r].dummy_spent;
    out.revenue += a.by_rank[r].spent;
  }
  out.cut = a.cut;
  return out;
}

Market integer_market(const BidProfile& profile) {
  Market market = detail::order_bids(profile);
  if (!market.supply.is_integer()) {
    throw InvalidInstanceError("indivisible supply must be a positive integer, got " +
                               market.supply.to_string());
  }
  return market;
}

}  // namespace

Outcome indivisible_at(const BidProfile& profile, const Rational& x) {
  const Market market = integer_market(profile);
  if (x.sign() < 0 || x > market.total()) throw std::out_of_range("cut point outside [0, B]");
  return to_outcome(market, allocate_at(market, x));
}

Outcome allocate_indivisible(const BidProfile& profile) {
  const Market market = integer_market(profile);

  std::optional<IntegerAllocation> below;
  std::optional<IntegerAllocation> above;
  for (const auto& x : candidate_cuts(market)) {
    IntegerAllocation a = allocate_at(market, x);
    if (a.allocated == market.supply) return to_outcome(market, a);
    if (a.allocated < market.supply) {
      if (!above) below = std::move(a);
    } else if (!above) {
      above = std::move(a);
    }
  }

  const Rational x_low = below ? below->cut.x : Rational{};
  const Rational x_high = above ? above->cut.x : market.total();
  throw IndivisibleClearingError(
      "no exact indivisible clearing: allocated units jump past the supply between x = " +
          x_low.to_string() + " and x = " + x_high.to_string(),
      x_low, x_high, below ? units_by_bidder(market, *below) : std::vector<Rational>(market.size()),
      above ? units_by_bidder(market, *above) : std::vector<Rational>(market.size()));
}

}  // namespace sortcut
