#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sortcut/errors.hpp"
#include "sortcut/model.hpp"
#include "sortcut/outcome.hpp"
#include "sortcut/rational.hpp"

namespace sortcut {

/// One step of a price ladder: `capacity` is measured in money, so the step
/// sells capacity / unit_price units.
struct PriceSegment {
  Rational unit_price;
  Rational capacity;

  friend bool operator==(const PriceSegment&, const PriceSegment&) = default;
};

using PriceLadder = std::vector<PriceSegment>;

/// Prices faced by the bidder at rank `consumer` (<= cut.k). Winners start at
/// the boundary's value with the boundary's residual as capacity; the
/// boundary bidder starts one rank lower. Throws std::out_of_range for a
/// loser.
PriceLadder ladder_for(const BidProfile& profile, const CutPoint& cut, std::size_t consumer);

/// Units demanded by the winners and the boundary bidder when the cut sits
/// at x. Requires 0 <= x <= total budget.
Rational demand_at(const BidProfile& profile, const Rational& x);

/// Smallest cut point at which the divisible demand equals the supply. Solved
/// exactly: the demand is piecewise linear in x, so the solver brackets the
/// root between consecutive breakpoints and solves the linear piece.
CutPoint clear(const BidProfile& profile);

/// Divisible Sort-Cut: ladder walk at the clearing cut.
Outcome allocate_divisible(const BidProfile& profile);

/// Thrown when no candidate cut makes the integer allocation equal the
/// supply. Carries the closest bracket seen during the scan.
class IndivisibleClearingError : public SortCutError {
 public:
  IndivisibleClearingError(const std::string& what, Rational x_low, Rational x_high,
                           std::vector<Rational> units_low, std::vector<Rational> units_high)
      : SortCutError(what),
        x_low(std::move(x_low)),
        x_high(std::move(x_high)),
        units_low(std::move(units_low)),
        units_high(std::move(units_high)) {}

  Rational x_low;
  Rational x_high;
  std::vector<Rational> units_low;
  std::vector<Rational> units_high;
};

/// Indivisible Sort-Cut. The supply must be a positive integer. Each bidder
/// walks the integer ladder in stated order, capped by the units still
/// unsold; the cut is the smallest candidate breakpoint at which every unit
/// is allocated.
Outcome allocate_indivisible(const BidProfile& profile);

/// Integer ladder walk with the cut fixed at x (0 <= x <= total budget).
/// Units sold may fall short of or reach the supply.
Outcome indivisible_at(const BidProfile& profile, const Rational& x);

/// Realized charges of the budget lottery.
struct ChargeDraw {
  std::uint64_t seed = 0;
  std::vector<Rational> realized;  // indexed like Instance::bidders
};

/// Charges each bidder her stated budget with probability payment/budget and
/// nothing otherwise. Draws come from a stream keyed by (seed, bidder id), so
/// the result does not depend on evaluation order. Throws
/// std::invalid_argument when some payment exceeds the stated budget.
ChargeDraw charge_lottery(const Outcome& outcome, const BidProfile& profile, std::uint64_t seed);

/// Cut points before and after bidder `j` lowers her stated budget by `eps`.
struct CutShift {
  Rational x;          // cut of the original profile
  Rational x_shifted;  // cut of the modified profile, on its own budget axis
  /// x_shifted re-expressed on the original budget axis: bidder j is counted
  /// with her original budget when she ranks strictly before the new
  /// boundary.
  Rational x_aligned;
  std::size_t k = 0;          // rank of the original boundary
  std::size_t k_shifted = 0;  // rank of the new boundary
  std::size_t rank_j = 0;     // rank of bidder j in the original order
};

CutShift cut_shift(const BidProfile& profile, std::size_t j, const Rational& eps);

}  // namespace sortcut
