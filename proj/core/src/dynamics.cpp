#include "sortcut/dynamics.hpp"

#include <memory>
#include <stdexcept>

#include "market.hpp"
#include "sortcut/clock.hpp"
#include "sortcut/sortcut.hpp"

namespace sortcut {

namespace {

Outcome solve(const BidProfile& profile) {
  const detail::Market market = detail::order_bids(profile);
  return detail::divisible_outcome(market, detail::divisible_clear(market));
}

bool overpays(const Outcome& outcome, std::size_t i, const Rational& value) {
  return outcome.units[i].sign() > 0 && outcome.payments[i] > value * outcome.units[i];
}

bool same_allocation(const Outcome& a, const Outcome& b) {
  return a.units == b.units && a.payments == b.payments;
}

struct Move {
  GreedyMove move;
  std::optional<Outcome> outcome;  // outcome after the move, when computed
};

Rational true_clearing_price(const BidProfile& state) {
  return clearing_price(BidProfile::truthful(state.truth())).clearing_price;
}

Move decide(const BidProfile& state, const Outcome& current, std::size_t i, const DynamicsConfig& config,
            const Rational& v_star) {
  const Bidder& truth = state.truth().bidders[i];
  const Bid& bid = state.stated(i);
  Move result;
  result.move.new_value = bid.value;

  if (overpays(current, i, truth.value)) {
    result.move.rule = GreedyRule::kDecrease;
    const Rational lowered = max(bid.value - config.step, state.truth().dummy_value);
    if (lowered != bid.value) {
      result.move.new_value = lowered;
      result.move.changed = true;
    }
    return result;
  }

  // the marginal bidder of the clock auction has nothing to gain at v*
  const bool marginal = current.cut && current.cut->bidder == i && truth.value == v_star;
  if (current.payments[i] < bid.budget && !marginal) {
    result.move.rule = GreedyRule::kIncrease;
    const Rational raised = bid.value + config.step;
    Outcome next = solve(state.with_bid(i, Bid{raised, bid.budget}));
    if (overpays(next, i, truth.value)) return result;
    if (current.units[i].sign() > 0) {
      if (same_allocation(current, next)) return result;
      const Rational before = current.units[i] * truth.value - current.payments[i];
      const Rational after = next.units[i] * truth.value - next.payments[i];
      if (after < before) return result;
    }
    result.move.new_value = raised;
    result.move.changed = true;
    result.outcome = std::move(next);
    return result;
  }

  result.move.rule = GreedyRule::kHold;
  return result;
}

}  // namespace

void check_config(const DynamicsConfig& config) {
  if (config.step <= 0) throw std::invalid_argument("dynamics step must be positive");
  if (config.max_rounds < 1) throw std::invalid_argument("max_rounds must be at least 1");
  if (config.record_every < 1) throw std::invalid_argument("record_every must be at least 1");
}

GreedyMove greedy_move(const BidProfile& state, std::size_t bidder, const DynamicsConfig& config) {
  check_config(config);
  if (bidder >= state.truth().dummy_index()) throw std::out_of_range("the dummy does not bid");
  return decide(state, solve(state), bidder, config, true_clearing_price(state)).move;
}

BidProfile greedy_step(const BidProfile& state, std::size_t bidder, const DynamicsConfig& config) {
  const GreedyMove move = greedy_move(state, bidder, config);
  if (!move.changed) return state;
  return state.with_bid(bidder, Bid{move.new_value, state.stated(bidder).budget});
}

DynamicsTrace run_dynamics(const Instance& instance, const DynamicsConfig& config,
                           const std::optional<BidProfile>& initial) {
  check_config(config);
  auto truth = std::make_shared<const Instance>(instance);
  BidProfile state = initial ? BidProfile(truth, initial->stated()) : BidProfile(truth);
  const std::size_t real = instance.dummy_index();

  auto bids_of = [](const BidProfile& p) {
    std::vector<Rational> bids;
    bids.reserve(p.size());
    for (const auto& b : p.stated()) bids.push_back(b.value);
    return bids;
  };

  DynamicsTrace trace;
  Outcome current = solve(state);
  const Rational v_star = true_clearing_price(state);
  trace.entries.push_back({0, bids_of(state), current});

  std::size_t quiet = 0;
  std::size_t t = 0;
  while (t < config.max_rounds) {
    const std::size_t i = t % real;
    Move move = decide(state, current, i, config, v_star);
    ++t;
    if (move.move.changed) {
      state = state.with_bid(i, Bid{move.move.new_value, state.stated(i).budget});
      current = move.outcome ? std::move(*move.outcome) : solve(state);
      quiet = 0;
    } else {
      ++quiet;
    }
    if (t % config.record_every == 0) trace.entries.push_back({t, bids_of(state), current});
    if (quiet >= real) {
      trace.converged = true;
      break;
    }
  }
  trace.rounds_used = t;
  if (trace.entries.back().round != t) trace.entries.push_back({t, bids_of(state), current});
  trace.final_bids = bids_of(state);
  trace.final_outcome = std::move(current);
  return trace;
}

}  // namespace sortcut
