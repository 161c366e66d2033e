#include <random>
#include <stdexcept>
#include <string_view>

#include "sortcut/sortcut.hpp"

namespace sortcut {

namespace {

// FNV-1a; std::hash is not stable across standard libraries.
std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t draw_word(std::uint64_t seed, std::string_view bidder_id) {
  const std::uint64_t key = stable_hash(bidder_id);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  std::mt19937_64 engine(seq);
  return engine();
}

}  // namespace

ChargeDraw charge_lottery(const Outcome& outcome, const BidProfile& profile, std::uint64_t seed) {
  if (outcome.size() != profile.size()) throw std::invalid_argument("outcome does not match profile");

  ChargeDraw draw;
  draw.seed = seed;
  draw.realized.resize(outcome.size());

  mpz_class two64(1);
  two64 <<= 64;
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    const Rational& pay = outcome.payments[i];
    const Rational& budget = profile.stated(i).budget;
    if (pay < 0 || pay > budget) {
      throw std::invalid_argument("payment of bidder '" + profile.truth().bidders[i].id +
                                  "' exceeds her stated budget");
    }
    if (pay.is_zero()) continue;
    if (pay == budget) {
      draw.realized[i] = budget;
      continue;
    }
    // Charge the budget iff u / 2^64 < pay / budget, for a uniform 64-bit u.
    const std::uint64_t word = draw_word(seed, profile.truth().bidders[i].id);
    mpz_class u;
    mpz_import(u.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    const mpq_class lhs = mpq_class(u) * budget.raw();
    const mpq_class rhs = pay.raw() * mpq_class(two64);
    if (lhs < rhs) draw.realized[i] = budget;
  }
  return draw;
}

}  // namespace sortcut
