#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sortcut {

/// Exact rational number backed by GMP. Always canonical: lowest terms,
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t integer);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
  /// input, including a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;
  /// Rounded half away from zero to `places` fractional digits.
  std::string to_decimal(int places = 6) const;
  double to_double() const { return value_.get_d(); }

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational floor() const;
  Rational ceil() const;
  Rational abs() const;

  /// Integer part as int64; caller guarantees the value fits.
  std::int64_t floor_to_int64() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Division by zero throws std::domain_error.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sortcut
