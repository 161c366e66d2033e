#include "market.hpp"

#include <algorithm>
#include <numeric>

#include "sortcut/errors.hpp"

namespace sortcut::detail {

std::size_t Market::boundary_rank(const Rational& x) const {
  // prefix is nondecreasing; find the last r in [0, n-1] with prefix[r] <= x.
  const auto end = prefix.begin() + static_cast<std::ptrdiff_t>(size());
  const auto it = std::upper_bound(prefix.begin(), end, x);
  const auto k = static_cast<std::size_t>(it - prefix.begin());
  return k == 0 ? 0 : k - 1;
}

Market order_bids(const BidProfile& profile) {
  const auto violations = validate(profile);
  if (!violations.empty()) throw UnnormalizedProfileError(violations.front().message);

  const Instance& truth = profile.truth();
  const std::size_t n = profile.size();
  const std::size_t dummy = truth.dummy_index();

  std::vector<std::size_t> order(n - 1);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Bid& x = profile.stated(a);
    const Bid& y = profile.stated(b);
    if (x.value != y.value) return x.value > y.value;
    if (x.budget != y.budget) return x.budget > y.budget;
    return truth.bidders[a].id < truth.bidders[b].id;
  });
  order.push_back(dummy);

  Market market;
  market.bidder = std::move(order);
  market.value.reserve(n);
  market.budget.reserve(n);
  market.prefix.reserve(n + 1);
  market.prefix.emplace_back(0);
  for (std::size_t r = 0; r < n; ++r) {
    const Bid& bid = profile.stated(market.bidder[r]);
    market.value.push_back(bid.value);
    market.budget.push_back(bid.budget);
    market.prefix.push_back(market.prefix.back() + bid.budget);
  }
  market.supply = truth.supply;
  market.dummy_value = truth.dummy_value;
  return market;
}

Rational ladder_units(const Market& market, Rational money, const Rational* first_price,
                      const Rational& first_capacity, std::size_t tail_begin) {
  Rational units;
  if (money.sign() <= 0) return units;
  if (first_price != nullptr && first_capacity.sign() > 0) {
    if (money <= first_capacity) return money / *first_price;
    units += first_capacity / *first_price;
    money -= first_capacity;
  }
  for (std::size_t j = tail_begin; j < market.size(); ++j) {
    const Rational& cap = market.budget[j];
    if (cap.sign() == 0) continue;
    if (money <= cap) {
      units += money / market.value[j];
      return units;
    }
    units += cap / market.value[j];
    money -= cap;
  }
  return units;
}

Purchase ladder_purchase(const Market& market, Rational money, const Rational* first_price,
                         const Rational& first_capacity, std::size_t tail_begin) {
  Purchase p;
  const std::size_t dummy = market.dummy_rank();
  auto take = [&](const Rational& price, const Rational& cap, bool at_dummy) {
    if (money.sign() <= 0 || cap.sign() <= 0) return;
    const Rational amount = min(money, cap);
    p.units += amount / price;
    p.spent += amount;
    if (at_dummy) p.dummy_spent += amount;
    money -= amount;
  };
  if (first_price != nullptr) take(*first_price, first_capacity, tail_begin == dummy + 1);
  for (std::size_t j = tail_begin; j < market.size(); ++j) take(market.value[j], market.budget[j], j == dummy);
  return p;
}

Rational region_demand(const Market& market, std::size_t k, const Rational& x) {
  const Rational residual = market.prefix[k + 1] - x;
  Rational demand;
  for (std::size_t i = 0; i < k; ++i) {
    demand += ladder_units(market, market.budget[i], &market.value[k], residual, k + 1);
  }
  demand += ladder_units(market, x - market.prefix[k], nullptr, Rational{}, k + 1);
  return demand;
}

Rational divisible_demand(const Market& market, const Rational& x) {
  return region_demand(market, market.boundary_rank(x), x);
}

namespace {

// Breakpoints of the piecewise-linear demand inside region k: the boundary's
// spend crossing a cumulative tail capacity, and a winner's overflow past the
// first step crossing one.
std::vector<Rational> region_breakpoints(const Market& market, std::size_t k) {
  const Rational& lo = market.prefix[k];
  const Rational& hi = market.prefix[k + 1];
  std::vector<Rational> tail{Rational{}};
  for (std::size_t j = k + 1; j < market.size(); ++j) {
    if (market.budget[j].sign() > 0) tail.push_back(tail.back() + market.budget[j]);
  }

  std::vector<Rational> points{lo, hi};
  auto add = [&](Rational x) {
    if (x > lo && x < hi) points.push_back(std::move(x));
  };
  for (const auto& t : tail) add(lo + t);
  for (std::size_t i = 0; i < k; ++i) {
    if (market.budget[i].sign() == 0) continue;
    for (const auto& t : tail) add(hi - market.budget[i] + t);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

CutPoint make_cut(const Market& market, Rational x) {
  CutPoint cut;
  cut.k = market.boundary_rank(x);
  cut.bidder = market.bidder[cut.k];
  cut.residual = market.prefix[cut.k + 1] - x;
  cut.x = std::move(x);
  return cut;
}

}  // namespace

CutPoint divisible_clear(const Market& market) {
  const Rational& m = market.supply;
  const std::size_t dummy = market.dummy_rank();

  // The set {x : D(x) >= m} is an up-set on [0, prefix[dummy]]: before the
  // root every winner's ladder still has capacity left, so moving money from
  // the boundary step to cheaper steps can only add units.
  if (divisible_demand(market, market.prefix[dummy]) < m) {
    throw NoClearingError("demand never reaches the supply; the dummy value is too large");
  }

  // Smallest e in [1, dummy] with D(prefix[e]) >= m; the root lies in region e-1.
  std::size_t lo = 0;
  std::size_t hi = dummy;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (divisible_demand(market, market.prefix[mid]) >= m) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const std::size_t k = hi - 1;

  const auto points = region_breakpoints(market, k);
  std::size_t a = 0;
  std::size_t b = points.size() - 1;
  Rational demand_a = region_demand(market, k, points[a]);
  Rational demand_b = region_demand(market, k, points[b]);
  while (b - a > 1) {
    const std::size_t mid = a + (b - a) / 2;
    Rational d = region_demand(market, k, points[mid]);
    if (d >= m) {
      b = mid;
      demand_b = std::move(d);
    } else {
      a = mid;
      demand_a = std::move(d);
    }
  }
  if (demand_a >= m) return make_cut(market, points[a]);

  // demand is linear on [points[a], points[b]], demand_a < m <= demand_b.
  Rational x = points[a] + (m - demand_a) * (points[b] - points[a]) / (demand_b - demand_a);
  return make_cut(market, std::move(x));
}

Outcome blank_outcome(const Market& market, Mode mode) {
  Outcome out;
  out.mode = mode;
  const std::size_t n = market.size();
  out.units.assign(n, Rational{});
  out.payments.assign(n, Rational{});
  out.dummy_tier_payments.assign(n, Rational{});
  out.ranking = market.bidder;
  return out;
}

Outcome divisible_outcome(const Market& market, const CutPoint& cut) {
  Outcome out = blank_outcome(market, Mode::kDivisible);
  const std::size_t k = cut.k;
  auto record = [&](std::size_t rank, Purchase p) {
    const std::size_t i = market.bidder[rank];
    out.units[i] = std::move(p.units);
    out.payments[i] = std::move(p.spent);
    out.dummy_tier_payments[i] = std::move(p.dummy_spent);
  };
  for (std::size_t r = 0; r < k; ++r) {
    record(r, ladder_purchase(market, market.budget[r], &market.value[k], cut.residual, k + 1));
  }
  record(k, ladder_purchase(market, cut.x - market.prefix[k], nullptr, Rational{}, k + 1));
  for (const auto& p : out.payments) out.revenue += p;
  out.cut = cut;
  return out;
}

}  // namespace sortcut::detail
