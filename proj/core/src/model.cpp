#include "sortcut/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "sortcut/errors.hpp"

namespace sortcut {

namespace {

bool ranks_before(const Bidder& a, const Bidder& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.budget != b.budget) return a.budget > b.budget;
  return a.id < b.id;
}

Bidder make_dummy(const Rational& supply, const Rational& dummy_value) {
  return Bidder{kDummyId, dummy_value, supply * dummy_value};
}

}  // namespace

Rational Instance::total_budget() const {
  Rational total;
  for (const auto& b : bidders) total += b.budget;
  return total;
}

std::vector<Rational> Instance::prefix_budgets() const {
  std::vector<Rational> prefix(bidders.size() + 1);
  for (std::size_t i = 0; i < bidders.size(); ++i) prefix[i + 1] = prefix[i] + bidders[i].budget;
  return prefix;
}

Instance normalize(Instance instance) {
  if (instance.supply <= 0) throw InvalidInstanceError("supply must be positive");
  if (instance.dummy_value <= 0) throw InvalidInstanceError("dummy value must be positive");

  std::erase_if(instance.bidders, [](const Bidder& b) { return b.id == kDummyId; });
  if (instance.bidders.empty()) throw InvalidInstanceError("instance has no bidders");

  Rational real_money;
  for (const auto& b : instance.bidders) {
    if (b.value <= 0) throw InvalidInstanceError("bidder '" + b.id + "' has nonpositive value");
    if (b.budget < 0) throw InvalidInstanceError("bidder '" + b.id + "' has negative budget");
    if (b.value <= instance.dummy_value) {
      throw InvalidInstanceError("dummy value " + instance.dummy_value.to_string() +
                                 " must be below every bidder value (bidder '" + b.id + "' has " +
                                 b.value.to_string() + ")");
    }
    real_money += b.budget;
  }
  if (real_money < instance.supply * instance.dummy_value) {
    throw InvalidInstanceError("total budget " + real_money.to_string() +
                               " cannot absorb the supply at the dummy price " +
                               instance.dummy_value.to_string());
  }

  std::stable_sort(instance.bidders.begin(), instance.bidders.end(), ranks_before);
  instance.bidders.push_back(make_dummy(instance.supply, instance.dummy_value));
  return instance;
}

bool is_normalized(const Instance& instance) {
  if (instance.bidders.size() < 2) return false;
  if (instance.supply <= 0 || instance.dummy_value <= 0) return false;
  if (instance.bidders.back() != make_dummy(instance.supply, instance.dummy_value)) return false;
  for (std::size_t i = 0; i + 1 < instance.bidders.size(); ++i) {
    const auto& b = instance.bidders[i];
    if (b.id == kDummyId || b.value <= instance.dummy_value || b.budget < 0) return false;
    if (i > 0 && ranks_before(b, instance.bidders[i - 1])) return false;
  }
  return true;
}

BidProfile::BidProfile(std::shared_ptr<const Instance> truth) : truth_(std::move(truth)) {
  if (!truth_) throw std::invalid_argument("bid profile needs an instance");
  stated_.reserve(truth_->size());
  for (const auto& b : truth_->bidders) stated_.push_back(Bid{b.value, b.budget});
}

BidProfile::BidProfile(std::shared_ptr<const Instance> truth, std::vector<Bid> stated)
    : truth_(std::move(truth)), stated_(std::move(stated)) {
  if (!truth_) throw std::invalid_argument("bid profile needs an instance");
  if (stated_.size() != truth_->size()) {
    throw std::invalid_argument("bid profile has " + std::to_string(stated_.size()) +
                                " bids for " + std::to_string(truth_->size()) + " bidders");
  }
}

BidProfile BidProfile::truthful(Instance instance) {
  return BidProfile(std::make_shared<const Instance>(std::move(instance)));
}

BidProfile BidProfile::with_bid(std::size_t i, Bid bid) const {
  BidProfile copy = *this;
  copy.stated_.at(i) = std::move(bid);
  return copy;
}

bool BidProfile::is_truthful() const {
  for (std::size_t i = 0; i < stated_.size(); ++i) {
    const auto& b = truth_->bidders[i];
    if (stated_[i].value != b.value || stated_[i].budget != b.budget) return false;
  }
  return true;
}

std::vector<Violation> validate(const BidProfile& profile) {
  std::vector<Violation> out;
  const Instance& truth = profile.truth();
  if (!is_normalized(truth)) {
    out.push_back({ViolationKind::kUnnormalizedInstance, 0, "instance is not normalized"});
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const Bid& bid = profile.stated(i);
    const std::string& id = truth.bidders[i].id;
    if (bid.value <= 0) {
      out.push_back({ViolationKind::kNonPositiveValue, i, "nonpositive value for bidder '" + id + "'"});
    }
    if (bid.budget < 0) {
      out.push_back({ViolationKind::kNegativeBudget, i, "negative budget for bidder '" + id + "'"});
    }
    if (id == kDummyId &&
        (bid.value != truth.bidders[i].value || bid.budget != truth.bidders[i].budget)) {
      out.push_back({ViolationKind::kDummyNotTruthful, i, "dummy must be truthful"});
    }
  }
  return out;
}

}  // namespace sortcut
