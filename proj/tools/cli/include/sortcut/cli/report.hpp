#pragma once

#include <string>

#include <json.hpp>

#include "sortcut/analysis.hpp"
#include "sortcut/model.hpp"
#include "sortcut/outcome.hpp"
#include "sortcut/rational.hpp"

namespace sortcut::cli {

using Json = nlohmann::ordered_json;

/// {"exact": "p/q", "decimal": "d.dddddd"}
Json rational_json(const Rational& r);
Json utility_json(const Utility& u);

/// The profile as given: supply, dummy value and every bidder in
/// normalized order with true and stated bids.
Json instance_json(const BidProfile& profile);

/// Reads back what instance_json() wrote.
BidProfile profile_from_json(const Json& j);

/// Cut point (if any), per-bidder allocation and revenue.
Json outcome_json(const BidProfile& profile, const Outcome& outcome);

/// Indented "key: value" text. Rationals print as "exact (decimal)".
std::string render_text(const Json& report);

}  // namespace sortcut::cli
