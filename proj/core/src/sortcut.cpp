#include "sortcut/sortcut.hpp"

#include "market.hpp"

namespace sortcut {

Rational Outcome::units_sold() const {
  Rational total;
  for (const auto& u : units) total += u;
  return total;
}

Rational Outcome::revenue_excluding_dummy_tier() const {
  Rational total;
  for (std::size_t i = 0; i < payments.size(); ++i) total += payments[i] - dummy_tier_payments[i];
  return total;
}

std::vector<std::size_t> Outcome::rank_of() const {
  std::vector<std::size_t> rank(ranking.size());
  for (std::size_t r = 0; r < ranking.size(); ++r) rank[ranking[r]] = r;
  return rank;
}

PriceLadder ladder_for(const BidProfile& profile, const CutPoint& cut, std::size_t consumer) {
  const detail::Market market = detail::order_bids(profile);
  if (cut.k >= market.size()) throw std::out_of_range("cut boundary rank out of range");
  if (consumer > cut.k) throw std::out_of_range("losers have no price ladder");

  PriceLadder ladder;
  if (consumer < cut.k) ladder.push_back({market.value[cut.k], cut.residual});
  for (std::size_t j = cut.k + 1; j < market.size(); ++j) {
    ladder.push_back({market.value[j], market.budget[j]});
  }
  return ladder;
}

Rational demand_at(const BidProfile& profile, const Rational& x) {
  const detail::Market market = detail::order_bids(profile);
  if (x < 0 || x > market.total()) throw std::out_of_range("cut point outside [0, B]");
  return detail::divisible_demand(market, x);
}

CutPoint clear(const BidProfile& profile) { return detail::divisible_clear(detail::order_bids(profile)); }

Outcome allocate_divisible(const BidProfile& profile) {
  const detail::Market market = detail::order_bids(profile);
  return detail::divisible_outcome(market, detail::divisible_clear(market));
}

CutShift cut_shift(const BidProfile& profile, std::size_t j, const Rational& eps) {
  if (j >= profile.size() || j == profile.truth().dummy_index()) {
    throw std::out_of_range("cut_shift needs a real bidder");
  }
  const Bid& bid = profile.stated(j);
  if (eps < 0 || eps > bid.budget) throw std::invalid_argument("eps must lie in [0, b_j]");

  const detail::Market before = detail::order_bids(profile);
  const CutPoint cut = detail::divisible_clear(before);
  const detail::Market after = detail::order_bids(profile.with_bid(j, Bid{bid.value, bid.budget - eps}));
  const CutPoint shifted = detail::divisible_clear(after);

  CutShift out;
  out.x = cut.x;
  out.k = cut.k;
  out.x_shifted = shifted.x;
  out.k_shifted = shifted.k;
  std::size_t rank_after = 0;
  for (std::size_t r = 0; r < before.size(); ++r) {
    if (before.bidder[r] == j) out.rank_j = r;
    if (after.bidder[r] == j) rank_after = r;
  }
  out.x_aligned = rank_after < shifted.k ? shifted.x + eps : shifted.x;
  return out;
}

}  // namespace sortcut
