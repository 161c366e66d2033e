#include "sortcut/clock.hpp"

#include <cassert>

#include "market.hpp"
#include "sortcut/errors.hpp"

namespace sortcut {

ClockResult clearing_price(const BidProfile& profile) {
  const detail::Market market = detail::order_bids(profile);
  const Rational& m = market.supply;
  const std::size_t n = market.size();

  ClockResult result;
  result.outcome = detail::blank_outcome(market, Mode::kDivisible);
  Outcome& out = result.outcome;

  auto pay = [&](std::size_t rank, const Rational& units) {
    const std::size_t i = market.bidder[rank];
    out.units[i] = units;
    out.payments[i] = units * result.clearing_price;
    if (result.clearing_price == market.dummy_value) out.dummy_tier_payments[i] = out.payments[i];
    out.revenue += out.payments[i];
  };

  std::size_t first = 0;
  while (first < n) {
    std::size_t last = first;
    while (last + 1 < n && market.value[last + 1] == market.value[first]) ++last;
    const Rational& tier_value = market.value[first];
    const Rational& tier_money = market.prefix[last + 1];
    const bool has_next = last + 1 < n;

    if (tier_money > m * tier_value) {
      // Demand jumps across m at this tier's value.
      result.clearing_price = tier_value;
      for (std::size_t r = 0; r < first; ++r) pay(r, market.budget[r] / tier_value);
      Rational left = m - market.prefix[first] / tier_value;
      for (std::size_t r = first; r <= last && left.sign() > 0; ++r) {
        const Rational full = market.budget[r] / tier_value;
        if (full < left) {
          pay(r, full);
          left -= full;
        } else {
          pay(r, left);
          result.marginal_rank = r;
          result.partial = full != left;
          left = Rational{};
        }
      }
      break;
    }
    if (!has_next || tier_money > m * market.value[last + 1]) {
      // Interior: v* = B_l / m lies in (v_next, v_l].
      result.clearing_price = tier_money / m;
      for (std::size_t r = 0; r <= last; ++r) pay(r, market.budget[r] / result.clearing_price);
      result.marginal_rank = last;
      result.partial = false;
      break;
    }
    first = last + 1;
  }
  if (first >= n) throw NoClearingError("ascending price auction did not clear");

  result.marginal_index = market.bidder[result.marginal_rank];
  result.r_star = out.revenue;
  assert(result.r_star == m * result.clearing_price);
  return result;
}

Outcome apa_allocate(const BidProfile& profile) { return clearing_price(profile).outcome; }

}  // namespace sortcut
