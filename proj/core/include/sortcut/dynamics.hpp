#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sortcut/model.hpp"
#include "sortcut/outcome.hpp"
#include "sortcut/rational.hpp"

namespace sortcut {

struct DynamicsConfig {
  Rational step{1, 100};           // bid change per activation
  std::size_t max_rounds = 100000;  // activation budget
  std::size_t record_every = 1;     // keep every n-th activation in the trace
};

/// Throws std::invalid_argument unless step > 0, max_rounds >= 1 and
/// record_every >= 1.
void check_config(const DynamicsConfig& config);

enum class GreedyRule { kDecrease, kIncrease, kHold };

struct GreedyMove {
  GreedyRule rule = GreedyRule::kHold;
  Rational new_value;
  bool changed = false;
};

/// Greedy Bidding for one activation of `bidder`, first matching rule wins:
///   1. paying more per unit on average than her value: lower the bid by
///      one step, never below the dummy value;
///   2. budget left over: raise the bid by one step, unless the raised bid
///      would make her pay more per unit than her value; a bidder who
///      already wins units also skips raises that leave the outcome
///      unchanged or lower her utility, and the boundary bidder whose true
///      value equals the true market clearing price never raises;
///   3. otherwise hold.
/// Only stated values move; budgets stay truthful.
GreedyMove greedy_move(const BidProfile& state, std::size_t bidder, const DynamicsConfig& config);

/// greedy_move applied to the profile.
BidProfile greedy_step(const BidProfile& state, std::size_t bidder, const DynamicsConfig& config);

struct TraceEntry {
  std::size_t round = 0;  // activations completed
  std::vector<Rational> bids;
  Outcome outcome;
};

struct DynamicsTrace {
  std::vector<TraceEntry> entries;
  bool converged = false;  // a full round passed without any bid change
  std::size_t rounds_used = 0;
  std::vector<Rational> final_bids;
  Outcome final_outcome;
};

/// Round-robin Greedy Bidding over the real bidders, starting from `initial`
/// (truthful if omitted), until a quiescent round or the activation budget
/// runs out.
DynamicsTrace run_dynamics(const Instance& instance, const DynamicsConfig& config,
                           const std::optional<BidProfile>& initial = std::nullopt);

}  // namespace sortcut
