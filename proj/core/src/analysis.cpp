#include "sortcut/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "market.hpp"
#include "sortcut/errors.hpp"
#include "sortcut/clock.hpp"
#include "sortcut/sortcut.hpp"

namespace sortcut {

namespace {

std::optional<BudgetSlack> find_slack(const BidProfile& profile, const Outcome& outcome, bool indivisible) {
  const std::size_t n = profile.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (outcome.units[i].sign() <= 0) continue;
    const Rational& vi = profile.stated(i).value;
    for (std::size_t j = 0; j < n; ++j) {
      const Bid& bj = profile.stated(j);
      if (!(bj.value > vi)) continue;
      const bool violates =
          indivisible ? !(outcome.payments[j] > bj.budget - vi) : outcome.payments[j] != bj.budget;
      if (violates) return BudgetSlack{j, i};
    }
  }
  return std::nullopt;
}

ParetoReport check_pareto(const BidProfile& profile, const Outcome& outcome, bool indivisible) {
  if (outcome.size() != profile.size()) throw std::invalid_argument("outcome does not match profile");
  ParetoReport report;
  const Rational unsold = profile.supply() - outcome.units_sold();
  if (!unsold.is_zero()) {
    report.is_pareto = false;
    report.witness = UnsoldUnits{unsold};
    return report;
  }
  if (auto slack = find_slack(profile, outcome, indivisible)) {
    report.is_pareto = false;
    report.witness = *slack;
  }
  return report;
}

// A lie that leaves too little money to clear the market sells nothing.
Utility deviation_utility(const BidProfile& profile, std::size_t bidder) {
  try {
    return expected_utility(profile, allocate_divisible(profile), bidder);
  } catch (const NoClearingError&) {
    return Utility::finite({});
  }
}

}  // namespace

ParetoReport is_pareto_divisible(const BidProfile& profile, const Outcome& outcome) {
  return check_pareto(profile, outcome, false);
}

ParetoReport is_pareto_indivisible(const BidProfile& profile, const Outcome& outcome) {
  return check_pareto(profile, outcome, true);
}

bool witness_holds(const BidProfile& profile, const Outcome& outcome, const ParetoWitness& witness,
                   Mode mode) {
  if (const auto* unsold = std::get_if<UnsoldUnits>(&witness)) {
    return !unsold->amount.is_zero() && profile.supply() - outcome.units_sold() == unsold->amount;
  }
  const auto& slack = std::get<BudgetSlack>(witness);
  if (slack.higher >= profile.size() || slack.allocated >= profile.size()) return false;
  const Bid& hi = profile.stated(slack.higher);
  const Rational& vi = profile.stated(slack.allocated).value;
  if (outcome.units[slack.allocated].sign() <= 0 || !(hi.value > vi)) return false;
  if (mode == Mode::kIndivisible) return !(outcome.payments[slack.higher] > hi.budget - vi);
  return outcome.payments[slack.higher] != hi.budget;
}

std::string describe(const ParetoWitness& witness) {
  if (const auto* unsold = std::get_if<UnsoldUnits>(&witness)) {
    return "unsold units = " + unsold->amount.to_string();
  }
  const auto& slack = std::get<BudgetSlack>(witness);
  return "bidder " + std::to_string(slack.higher) + " keeps usable budget while lower-valued bidder " +
         std::to_string(slack.allocated) + " is allocated";
}

RevenueGap revenue_gap(const Instance& instance) {
  const BidProfile profile = BidProfile::truthful(instance);
  const detail::Market market = detail::order_bids(profile);
  const CutPoint cut = detail::divisible_clear(market);
  const Outcome outcome = detail::divisible_outcome(market, cut);

  RevenueGap gap;
  gap.revenue = outcome.revenue;
  gap.r_star = clearing_price(profile).r_star;
  for (std::size_t r = 0; r <= cut.k; ++r) gap.b_max = max(gap.b_max, market.budget[r]);
  return gap;
}

Utility operator-(const Utility& a, const Utility& b) {
  if (a.is_neg_inf()) return Utility::neg_inf();
  if (a.is_pos_inf() || b.is_neg_inf()) return Utility::pos_inf();
  if (b.is_pos_inf()) return Utility::neg_inf();
  return Utility::finite(a.value() - b.value());
}

bool operator==(const Utility& a, const Utility& b) {
  return a.kind_ == b.kind_ && (!a.is_finite() || a.value_ == b.value_);
}

std::strong_ordering operator<=>(const Utility& a, const Utility& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

std::string Utility::to_string() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return value_.to_string();
}

DeviationClass classify(const Bid& truth, const Bid& deviation) {
  if (deviation.value > truth.value) return DeviationClass::kValueOver;
  if (deviation.budget > truth.budget) return DeviationClass::kBudgetOver;
  if (deviation.budget < truth.budget) return DeviationClass::kBudgetUnder;
  if (deviation.value < truth.value) return DeviationClass::kValueUnder;
  return DeviationClass::kNone;
}

std::string to_string(DeviationClass c) {
  switch (c) {
    case DeviationClass::kNone: return "none";
    case DeviationClass::kBudgetUnder: return "budget-under";
    case DeviationClass::kBudgetOver: return "budget-over";
    case DeviationClass::kValueUnder: return "value-under";
    case DeviationClass::kValueOver: return "value-over";
  }
  return "unknown";
}

DeviationGrid default_grid(const Instance& instance, std::size_t bidder, std::size_t size) {
  if (bidder >= instance.dummy_index()) throw std::out_of_range("deviation grid needs a real bidder");
  const Bidder& me = instance.bidders[bidder];
  const Rational& floor_value = instance.dummy_value;

  DeviationGrid grid;
  auto add_value = [&](const Rational& v) {
    if (v <= floor_value) return;
    if (std::find(grid.values.begin(), grid.values.end(), v) == grid.values.end()) grid.values.push_back(v);
  };
  auto add_budget = [&](const Rational& b) {
    if (b < 0) return;
    if (std::find(grid.budgets.begin(), grid.budgets.end(), b) == grid.budgets.end()) grid.budgets.push_back(b);
  };

  add_value(me.value);
  const Rational v_star = clearing_price(BidProfile::truthful(instance)).clearing_price;
  add_value(v_star);
  for (const Rational& step : {v_star / 100, v_star / 10}) {
    add_value(v_star - step);
    add_value(v_star + step);
  }
  Rational v_max;
  for (std::size_t j = 0; j < instance.dummy_index(); ++j) {
    v_max = max(v_max, instance.bidders[j].value);
    if (j != bidder) add_value(instance.bidders[j].value);
  }
  const Rational span = v_max * Rational(3, 2);
  for (std::size_t denom = size; grid.values.size() < size; denom *= 2) {
    for (std::size_t t = 1; t <= denom && grid.values.size() < size; ++t) {
      add_value(span * Rational(static_cast<std::int64_t>(t), static_cast<std::int64_t>(denom)));
    }
  }

  add_budget(me.budget);
  const Rational unit = me.budget.sign() > 0 ? me.budget : me.value;
  for (std::int64_t t = 0; grid.budgets.size() < size || t <= 24; ++t) {
    add_budget(unit * Rational(t, 16));
  }
  return grid;
}

Utility expected_utility(const BidProfile& profile, const Outcome& outcome, std::size_t bidder) {
  const Bidder& truth = profile.truth().bidders[bidder];
  const Rational& pay = outcome.payments[bidder];
  if (profile.stated(bidder).budget > truth.budget && pay.sign() > 0) return Utility::neg_inf();
  return Utility::finite(outcome.units[bidder] * truth.value - pay);
}

const std::optional<DeviationReport>& DeviationSearch::of(DeviationClass c) const {
  for (std::size_t i = 0; i < kDeviationClasses.size(); ++i) {
    if (kDeviationClasses[i] == c) return by_class[i];
  }
  throw std::invalid_argument("no report slot for class none");
}

DeviationSearch search_deviations(const BidProfile& base, std::size_t bidder, const DeviationGrid& grid) {
  const Bidder& truth = base.truth().bidders[bidder];
  const Bid true_bid{truth.value, truth.budget};
  const Utility reference = expected_utility(base, allocate_divisible(base), bidder);

  DeviationSearch search;
  search.best.bidder = bidder;
  search.best.best_deviation = base.stated(bidder);
  search.best.utility_truthful = reference;
  search.best.utility_best = reference;
  search.best.gain = Utility::finite({});
  search.best.deviation_class = classify(true_bid, base.stated(bidder));

  for (const auto& value : grid.values) {
    for (const auto& budget : grid.budgets) {
      const Bid bid{value, budget};
      const BidProfile deviated = base.with_bid(bidder, bid);
      const Utility u = deviation_utility(deviated, bidder);

      DeviationReport report;
      report.bidder = bidder;
      report.best_deviation = bid;
      report.utility_truthful = reference;
      report.utility_best = u;
      report.gain = u - reference;
      report.deviation_class = classify(true_bid, bid);

      if (report.gain > search.best.gain) search.best = report;
      if (report.deviation_class == DeviationClass::kNone) continue;
      for (std::size_t c = 0; c < kDeviationClasses.size(); ++c) {
        if (kDeviationClasses[c] != report.deviation_class) continue;
        auto& slot = search.by_class[c];
        if (!slot || report.gain > slot->gain) slot = report;
      }
    }
  }
  return search;
}

DeviationReport best_deviation(const Instance& instance, std::size_t bidder, const DeviationGrid& grid) {
  return search_deviations(BidProfile::truthful(instance), bidder, grid).best;
}

EquilibriumReport is_equilibrium(const BidProfile& stated, std::size_t grid_size) {
  std::vector<DeviationGrid> grids;
  for (std::size_t i = 0; i < stated.truth().dummy_index(); ++i) {
    grids.push_back(default_grid(stated.truth(), i, grid_size));
  }
  return is_equilibrium(stated, grids);
}

EquilibriumReport is_equilibrium(const BidProfile& stated, const std::vector<DeviationGrid>& grids) {
  EquilibriumReport report;
  for (std::size_t i = 0; i < grids.size() && i < stated.truth().dummy_index(); ++i) {
    DeviationReport best = search_deviations(stated, i, grids[i]).best;
    if (!report.worst || best.gain > report.worst->gain) report.worst = best;
    if (best.gain > Utility::finite({})) report.is_equilibrium = false;
  }
  return report;
}

}  // namespace sortcut
