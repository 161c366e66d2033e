#pragma once

#include <cstddef>
#include <vector>

#include "sortcut/model.hpp"
#include "sortcut/outcome.hpp"
#include "sortcut/rational.hpp"

namespace sortcut::detail {

/// Stated bids sorted into mechanism order: real bidders by (value desc,
/// budget desc, id asc), dummy last. Everything here is indexed by rank.
struct Market {
  std::vector<std::size_t> bidder;
  std::vector<Rational> value;
  std::vector<Rational> budget;
  std::vector<Rational> prefix;  // prefix[r] = sum of budgets of ranks < r
  Rational supply;
  Rational dummy_value;

  std::size_t size() const { return value.size(); }
  std::size_t dummy_rank() const { return value.size() - 1; }
  const Rational& total() const { return prefix.back(); }

  /// Largest rank k with prefix[k] <= x, capped at the dummy rank.
  std::size_t boundary_rank(const Rational& x) const;
};

/// Validates the profile and sorts it. Throws UnnormalizedProfileError.
Market order_bids(const BidProfile& profile);

struct Purchase {
  Rational units;
  Rational spent;
  Rational dummy_spent;
};

/// Units bought by spending `money` down a divisible ladder whose first step
/// is (first_price, first_capacity) followed by ranks tail_begin.. at their
/// own value and budget. Money beyond the ladder's capacity stays unspent.
Rational ladder_units(const Market& market, Rational money, const Rational* first_price,
                      const Rational& first_capacity, std::size_t tail_begin);
Purchase ladder_purchase(const Market& market, Rational money, const Rational* first_price,
                         const Rational& first_capacity, std::size_t tail_begin);

/// Divisible demand with the boundary fixed at rank k, valid for x in
/// [prefix[k], prefix[k+1]].
Rational region_demand(const Market& market, std::size_t k, const Rational& x);

/// Divisible demand at x with the boundary chosen by boundary_rank().
Rational divisible_demand(const Market& market, const Rational& x);

CutPoint divisible_clear(const Market& market);

Outcome divisible_outcome(const Market& market, const CutPoint& cut);

/// Empty outcome sized and ranked for `market`.
Outcome blank_outcome(const Market& market, Mode mode);

}  // namespace sortcut::detail
