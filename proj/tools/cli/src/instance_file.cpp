#include "sortcut/cli/instance_file.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "sortcut/errors.hpp"

namespace sortcut::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

Rational number(std::size_t line, std::string_view field, std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(line, std::string(field) + ": " + e.what());
  }
}

struct BidderLine {
  std::size_t line = 0;
  Bidder bidder;
  std::optional<Rational> stated_value;
  std::optional<Rational> stated_budget;
};

BidderLine parse_bidder(std::size_t line, std::string_view rest) {
  std::map<std::string, std::string, std::less<>> fields;
  std::istringstream in{std::string(rest)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(line, "expected name=value, got '" + token + "'");
    std::string name = token.substr(0, eq);
    if (!fields.emplace(name, token.substr(eq + 1)).second) throw ParseError(line, "duplicate field '" + name + "'");
  }
  static const std::unordered_set<std::string> known{"id", "value", "budget", "stated_value", "stated_budget"};
  for (const auto& [name, _] : fields) {
    if (!known.contains(name)) throw ParseError(line, "unknown bidder field '" + name + "'");
  }
  for (const char* required : {"id", "value", "budget"}) {
    if (!fields.contains(required)) throw ParseError(line, std::string("bidder is missing '") + required + "'");
  }

  BidderLine b;
  b.line = line;
  b.bidder.id = fields["id"];
  if (b.bidder.id.empty()) throw ParseError(line, "empty bidder id");
  if (b.bidder.id == kDummyId) throw ParseError(line, "bidder id 'dummy' is reserved");
  b.bidder.value = number(line, "value", fields["value"]);
  b.bidder.budget = number(line, "budget", fields["budget"]);
  if (auto it = fields.find("stated_value"); it != fields.end()) b.stated_value = number(line, "stated_value", it->second);
  if (auto it = fields.find("stated_budget"); it != fields.end()) b.stated_budget = number(line, "stated_budget", it->second);
  return b;
}

}  // namespace

BidProfile parse_instance(std::string_view text) {
  std::optional<Rational> supply;
  std::optional<Rational> dummy_value;
  std::vector<BidderLine> lines;
  std::unordered_set<std::string> ids;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view rest = trim(line.substr(colon + 1));
    if (key == "supply" || key == "dummy_value") {
      auto& slot = key == "supply" ? supply : dummy_value;
      if (slot) throw ParseError(line_no, "duplicate " + std::string(key));
      slot = number(line_no, key, rest);
    } else if (key == "bidder") {
      BidderLine b = parse_bidder(line_no, rest);
      if (!ids.insert(b.bidder.id).second) throw ParseError(line_no, "duplicate bidder id '" + b.bidder.id + "'");
      lines.push_back(std::move(b));
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!supply) throw InputError("missing supply");
  if (!dummy_value) throw InputError("missing dummy_value");

  Instance raw{*supply, {}, *dummy_value};
  for (const auto& b : lines) raw.bidders.push_back(b.bidder);
  Instance instance;
  try {
    instance = normalize(std::move(raw));
  } catch (const InvalidInstanceError& e) {
    throw InputError(e.what());
  }

  std::vector<Bid> stated;
  stated.reserve(instance.size());
  for (const auto& b : instance.bidders) stated.push_back({b.value, b.budget});
  for (const auto& b : lines) {
    if (!b.stated_value && !b.stated_budget) continue;
    for (std::size_t i = 0; i < instance.dummy_index(); ++i) {
      if (instance.bidders[i].id != b.bidder.id) continue;
      if (b.stated_value) stated[i].value = *b.stated_value;
      if (b.stated_budget) stated[i].budget = *b.stated_budget;
    }
  }

  BidProfile profile(std::make_shared<const Instance>(std::move(instance)), std::move(stated));
  const auto violations = validate(profile);
  if (!violations.empty()) {
    std::string message = "invalid stated bids:";
    for (const auto& v : violations) message += " " + profile.truth().bidders[v.bidder].id + ": " + v.message + ";";
    message.pop_back();
    throw InputError(message);
  }
  return profile;
}

BidProfile load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const BidProfile& profile) {
  const Instance& in = profile.truth();
  std::ostringstream out;
  out << "supply: " << in.supply << '\n' << "dummy_value: " << in.dummy_value << '\n';
  for (std::size_t i = 0; i < in.dummy_index(); ++i) {
    const Bidder& b = in.bidders[i];
    out << "bidder: id=" << b.id << " value=" << b.value << " budget=" << b.budget;
    const Bid& s = profile.stated(i);
    if (s.value != b.value) out << " stated_value=" << s.value;
    if (s.budget != b.budget) out << " stated_budget=" << s.budget;
    out << '\n';
  }
  return out.str();
}

}  // namespace sortcut::cli
