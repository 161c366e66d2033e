#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "sortcut/rational.hpp"

namespace sortcut {

/// Reserved identifier of the appended low-value bidder that guarantees the
/// market clears.
inline constexpr const char* kDummyId = "dummy";

struct Bidder {
  std::string id;
  Rational value;   // per-unit value, > 0
  Rational budget;  // total budget, >= 0

  friend bool operator==(const Bidder&, const Bidder&) = default;
};

/// A multi-unit auction: `supply` identical units and the bidders competing
/// for them. After normalize() the bidders are sorted by value (descending)
/// and the last one is the dummy with value `dummy_value` and budget
/// `supply * dummy_value`.
struct Instance {
  Rational supply;
  std::vector<Bidder> bidders;
  Rational dummy_value;

  std::size_t size() const { return bidders.size(); }
  std::size_t dummy_index() const { return bidders.size() - 1; }
  /// Sum of all budgets, dummy included.
  Rational total_budget() const;
  /// prefix[i] = sum of the first i budgets; prefix.size() == size() + 1.
  std::vector<Rational> prefix_budgets() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Sorts bidders by (value desc, budget desc, id asc) and appends the dummy.
/// An existing dummy entry is dropped and rebuilt, so the operation is
/// idempotent. Throws InvalidInstanceError when the preconditions fail.
Instance normalize(Instance instance);

/// True when `instance` is exactly what normalize() would return.
bool is_normalized(const Instance& instance);

struct Bid {
  Rational value;
  Rational budget;

  friend bool operator==(const Bid&, const Bid&) = default;
};

/// Announced bids aligned with the bidders of a normalized instance. The
/// instance holds the true values and budgets.
class BidProfile {
 public:
  /// Everyone bids truthfully.
  explicit BidProfile(std::shared_ptr<const Instance> truth);
  /// Throws std::invalid_argument when the sizes differ.
  BidProfile(std::shared_ptr<const Instance> truth, std::vector<Bid> stated);

  static BidProfile truthful(Instance instance);

  const Instance& truth() const { return *truth_; }
  const std::shared_ptr<const Instance>& truth_ptr() const { return truth_; }
  const std::vector<Bid>& stated() const { return stated_; }
  const Bid& stated(std::size_t i) const { return stated_.at(i); }
  std::size_t size() const { return stated_.size(); }
  const Rational& supply() const { return truth_->supply; }

  /// Copy with bidder `i` announcing `bid` instead.
  BidProfile with_bid(std::size_t i, Bid bid) const;
  bool is_truthful() const;

 private:
  std::shared_ptr<const Instance> truth_;
  std::vector<Bid> stated_;
};

enum class ViolationKind {
  kNonPositiveValue,
  kNegativeBudget,
  kDummyNotTruthful,
  kUnnormalizedInstance,
};

struct Violation {
  ViolationKind kind;
  std::size_t bidder;
  std::string message;
};

/// Every constraint violation in `profile`; empty means the profile is valid.
std::vector<Violation> validate(const BidProfile& profile);

}  // namespace sortcut
