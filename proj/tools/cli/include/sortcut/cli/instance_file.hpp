#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sortcut/model.hpp"

namespace sortcut::cli {

/// Anything wrong with the user's input: unreadable file, bad syntax,
/// rejected instance, invalid stated bids.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

/// Instance file format, one record per line, '#' starts a comment:
///
///   supply: 19
///   dummy_value: 1/100
///   bidder: id=1 value=10 budget=55
///   bidder: id=2 value=9 budget=60 stated_value=8 stated_budget=60
///
/// Numbers are integers or p/q. Bidders may appear in any order; the result
/// is normalized and the stated overrides are carried into the profile.
BidProfile parse_instance(std::string_view text);
BidProfile load_instance(const std::filesystem::path& path);

/// Canonical text for `profile`: bidders in normalized order, the dummy
/// omitted, stated fields only where they differ from the truth.
std::string serialize_instance(const BidProfile& profile);

}  // namespace sortcut::cli
