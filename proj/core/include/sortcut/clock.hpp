#pragma once

#include <cstddef>

#include "sortcut/model.hpp"
#include "sortcut/outcome.hpp"
#include "sortcut/rational.hpp"

namespace sortcut {

/// Ascending price (clock) auction result.
struct ClockResult {
  Rational clearing_price;         // v*
  std::size_t marginal_index = 0;  // lowest-ranked winner, as a bidder index
  std::size_t marginal_rank = 0;
  bool partial = false;  // the marginal bidder spends less than her budget
  Outcome outcome;       // no cut point
  Rational r_star;       // revenue, equal to supply * v*
};

/// Market clearing price of the ascending price auction on the stated bids.
///
/// Demand at price p is sum of b_i / p over bidders with v_i >= p. Scanning
/// value tiers downward with prefix budget B_l, the price is either interior
/// (B_l / m falls inside the tier, everyone above spends fully) or a jump at a
/// tier value, where bidders are filled in stated order and the one who does
/// not fit takes the remaining units at v* per unit.
ClockResult clearing_price(const BidProfile& profile);

/// Just the allocation of clearing_price().
Outcome apa_allocate(const BidProfile& profile);

}  // namespace sortcut
