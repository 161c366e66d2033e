#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sortcut/model.hpp"
#include "sortcut/outcome.hpp"
#include "sortcut/rational.hpp"

namespace sortcut {

// ---------------------------------------------------------------- Pareto ---

struct UnsoldUnits {
  Rational amount;  // supply minus units allocated (negative if oversold)
  friend bool operator==(const UnsoldUnits&, const UnsoldUnits&) = default;
};

/// `higher` has a strictly higher stated value than the allocated bidder
/// `allocated` yet keeps usable budget.
struct BudgetSlack {
  std::size_t higher;
  std::size_t allocated;
  friend bool operator==(const BudgetSlack&, const BudgetSlack&) = default;
};

using ParetoWitness = std::variant<UnsoldUnits, BudgetSlack>;

struct ParetoReport {
  bool is_pareto = true;
  std::optional<ParetoWitness> witness;
};

/// All units sold, and every allocated bidder sees each strictly
/// higher-valued bidder pay her full stated budget.
ParetoReport is_pareto_divisible(const BidProfile& profile, const Outcome& outcome);

/// All units sold, and every strictly higher-valued bidder j of an allocated
/// bidder i has p_j > b_j - v_i (cannot afford one more unit at v_i).
ParetoReport is_pareto_indivisible(const BidProfile& profile, const Outcome& outcome);

/// Re-checks a witness against the outcome; true when it demonstrates a
/// violation.
bool witness_holds(const BidProfile& profile, const Outcome& outcome, const ParetoWitness& witness,
                   Mode mode);

std::string describe(const ParetoWitness& witness);

// --------------------------------------------------------------- Revenue ---

struct RevenueGap {
  Rational revenue;  // Sort-Cut, divisible, truthful bids
  Rational r_star;   // ascending price auction
  Rational b_max;    // largest budget among ranks 0..k of the Sort-Cut cut
};

RevenueGap revenue_gap(const Instance& instance);

// ------------------------------------------------------------- Deviation ---

/// Utility extended with infinities. Overstating the budget while paying
/// something makes the lottery risk a charge above the true budget, which
/// the hard-budget utility scores as minus infinity.
class Utility {
 public:
  static Utility finite(Rational v) { return Utility(Kind::kFinite, std::move(v)); }
  static Utility neg_inf() { return Utility(Kind::kNegInf, {}); }
  static Utility pos_inf() { return Utility(Kind::kPosInf, {}); }

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  /// Requires is_finite().
  const Rational& value() const { return value_; }

  /// a - b with minus infinity absorbing: (-inf) - x = -inf, x - (-inf) =
  /// +inf for finite x.
  friend Utility operator-(const Utility& a, const Utility& b);
  friend bool operator==(const Utility& a, const Utility& b);
  friend std::strong_ordering operator<=>(const Utility& a, const Utility& b);

  std::string to_string() const;

 private:
  enum class Kind { kNegInf = 0, kFinite = 1, kPosInf = 2 };
  Utility(Kind kind, Rational v) : kind_(kind), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

enum class DeviationClass { kNone, kBudgetUnder, kBudgetOver, kValueUnder, kValueOver };

inline constexpr std::array<DeviationClass, 4> kDeviationClasses{
    DeviationClass::kBudgetUnder, DeviationClass::kBudgetOver, DeviationClass::kValueUnder,
    DeviationClass::kValueOver};

/// Any value overstatement is value-over; otherwise a budget lie decides the
/// class; a pure value understatement is value-under.
DeviationClass classify(const Bid& truth, const Bid& deviation);
std::string to_string(DeviationClass c);

struct DeviationReport {
  std::size_t bidder = 0;
  Bid best_deviation;
  Utility utility_truthful = Utility::finite({});  // utility at the reference bid
  Utility utility_best = Utility::finite({});
  Utility gain = Utility::finite({});
  DeviationClass deviation_class = DeviationClass::kNone;
};

struct DeviationGrid {
  std::vector<Rational> values;
  std::vector<Rational> budgets;
};

/// Grid for `bidder` with at least `size` values and `size` budgets: the
/// true point, the market clearing price and small steps around it, every
/// opponent's value, budget fractions {0, 1/4, ..., 5/4} of the true budget,
/// topped up with evenly spaced points.
DeviationGrid default_grid(const Instance& instance, std::size_t bidder, std::size_t size = 25);

/// Expected utility of `bidder` (true value and budget) in the divisible
/// Sort-Cut outcome of `profile`.
Utility expected_utility(const BidProfile& profile, const Outcome& outcome, std::size_t bidder);

struct DeviationSearch {
  DeviationReport best;  // over the whole grid; ties go to the earliest point
  std::array<std::optional<DeviationReport>, 4> by_class;  // indexed like kDeviationClasses

  const std::optional<DeviationReport>& of(DeviationClass c) const;
};

/// Evaluates every (value, budget) grid point for `bidder` against the bids
/// in `base`, which is also the reference point for the gain. A point that
/// leaves the market unable to clear scores zero utility.
DeviationSearch search_deviations(const BidProfile& base, std::size_t bidder, const DeviationGrid& grid);

/// Best grid deviation of `bidder` when everyone else bids truthfully.
DeviationReport best_deviation(const Instance& instance, std::size_t bidder, const DeviationGrid& grid);

struct EquilibriumReport {
  bool is_equilibrium = true;
  std::optional<DeviationReport> worst;  // largest gain over all bidders
};

/// No real bidder gains by moving to any point of her grid.
EquilibriumReport is_equilibrium(const BidProfile& stated, std::size_t grid_size = 25);
EquilibriumReport is_equilibrium(const BidProfile& stated, const std::vector<DeviationGrid>& grids);

}  // namespace sortcut
