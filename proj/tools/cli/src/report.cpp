#include "sortcut/cli/report.hpp"

#include <memory>
#include <sstream>

#include "sortcut/cli/instance_file.hpp"

namespace sortcut::cli {

namespace {

bool is_rational(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("decimal");
}

Rational exact(const Json& j, const char* key) {
  try {
    return Rational::parse(j.at(key).at("exact").get<std::string>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("report field '") + key + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("report field '") + key + "': " + e.what());
  }
}

std::string scalar(const Json& j) {
  if (is_rational(j)) {
    const auto e = j["exact"].get<std::string>();
    const auto d = j["decimal"].get<std::string>();
    return e == d ? e : e + " (" + d + ")";
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool inline_array(const Json& j) {
  for (const auto& item : j) {
    if (item.is_array() || (item.is_object() && !is_rational(item))) return false;
  }
  return true;
}

void render(std::ostringstream& out, const Json& j, int indent);

void render_value(std::ostringstream& out, const Json& v, int indent) {
  if (v.is_object() && !is_rational(v)) {
    out << '\n';
    render(out, v, indent + 2);
  } else if (v.is_array() && !inline_array(v)) {
    out << '\n';
    for (const auto& item : v) {
      out << std::string(indent + 2, ' ') << "-";
      if (item.is_object() && !is_rational(item)) {
        // first key on the dash line, the rest aligned under it
        std::ostringstream nested;
        render(nested, item, indent + 4);
        out << nested.str().substr(indent + 3);
      } else {
        out << ' ' << scalar(item) << '\n';
      }
    }
  } else if (v.is_array()) {
    out << " [";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
    out << "]\n";
  } else {
    out << ' ' << scalar(v) << '\n';
  }
}

void render(std::ostringstream& out, const Json& j, int indent) {
  for (const auto& [key, v] : j.items()) {
    out << std::string(indent, ' ') << key << ':';
    render_value(out, v, indent);
  }
}

}  // namespace

Json rational_json(const Rational& r) {
  Json j;
  j["exact"] = r.to_string();
  j["decimal"] = r.to_decimal(6);
  return j;
}

Json utility_json(const Utility& u) {
  if (u.is_finite()) return rational_json(u.value());
  Json j;
  j["exact"] = u.to_string();
  j["decimal"] = u.to_string();
  return j;
}

Json instance_json(const BidProfile& profile) {
  const Instance& in = profile.truth();
  Json j;
  j["supply"] = rational_json(in.supply);
  j["dummy_value"] = rational_json(in.dummy_value);
  j["bidders"] = Json::array();
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Bidder& b = in.bidders[i];
    Json row;
    row["id"] = b.id;
    row["value"] = rational_json(b.value);
    row["budget"] = rational_json(b.budget);
    row["stated_value"] = rational_json(profile.stated(i).value);
    row["stated_budget"] = rational_json(profile.stated(i).budget);
    j["bidders"].push_back(std::move(row));
  }
  return j;
}

BidProfile profile_from_json(const Json& j) {
  Instance in;
  in.supply = exact(j, "supply");
  in.dummy_value = exact(j, "dummy_value");
  std::vector<Bid> stated;
  for (const auto& row : j.at("bidders")) {
    in.bidders.push_back({row.at("id").get<std::string>(), exact(row, "value"), exact(row, "budget")});
    stated.push_back({exact(row, "stated_value"), exact(row, "stated_budget")});
  }
  if (!is_normalized(in)) throw InputError("report instance is not normalized");
  return BidProfile(std::make_shared<const Instance>(std::move(in)), std::move(stated));
}

Json outcome_json(const BidProfile& profile, const Outcome& outcome) {
  const Instance& in = profile.truth();
  Json j;
  j["mode"] = outcome.mode == Mode::kDivisible ? "divisible" : "indivisible";
  if (outcome.cut) {
    const CutPoint& c = *outcome.cut;
    Json cut;
    cut["x"] = rational_json(c.x);
    cut["k"] = c.k;
    cut["boundary"] = in.bidders[c.bidder].id;
    cut["residual"] = rational_json(c.residual);
    j["cut"] = std::move(cut);
  }
  j["allocation"] = Json::array();
  const auto rank = outcome.rank_of();
  for (std::size_t i = 0; i < in.size(); ++i) {
    Json row;
    row["id"] = in.bidders[i].id;
    row["rank"] = rank[i];
    row["units"] = rational_json(outcome.units[i]);
    row["payment"] = rational_json(outcome.payments[i]);
    row["dummy_tier_payment"] = rational_json(outcome.dummy_tier_payments[i]);
    j["allocation"].push_back(std::move(row));
  }
  j["units_sold"] = rational_json(outcome.units_sold());
  j["revenue"] = rational_json(outcome.revenue);
  j["revenue_excluding_dummy_tier"] = rational_json(outcome.revenue_excluding_dummy_tier());
  return j;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace sortcut::cli
