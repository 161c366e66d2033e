#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sortcut/rational.hpp"

namespace sortcut {

/// Position of the cut in cumulative-budget space, in the stated-bid order.
struct CutPoint {
  Rational x;
  std::size_t k = 0;       // rank of the boundary bidder
  std::size_t bidder = 0;  // the boundary bidder's index in the instance
  Rational residual;       // unspent money of the boundary bidder

  friend bool operator==(const CutPoint&, const CutPoint&) = default;
};

enum class Mode { kDivisible, kIndivisible };

/// Result of running a mechanism on a bid profile. Per-bidder vectors are
/// indexed like Instance::bidders; `ranking[r]` is the bidder at rank r of
/// the stated order.
struct Outcome {
  Mode mode = Mode::kDivisible;
  std::vector<Rational> units;
  std::vector<Rational> payments;  // expected payments
  /// Part of each payment spent at the dummy's unit price.
  std::vector<Rational> dummy_tier_payments;
  std::vector<std::size_t> ranking;
  Rational revenue;
  std::optional<CutPoint> cut;

  std::size_t size() const { return units.size(); }
  Rational units_sold() const;
  Rational revenue_excluding_dummy_tier() const;
  /// rank_of()[bidder] is the bidder's rank in the stated order.
  std::vector<std::size_t> rank_of() const;
};

}  // namespace sortcut
