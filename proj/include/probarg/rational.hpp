#pragma once

#include <cstdint>
#include <string>

#include "probarg/errors.hpp"

namespace probarg {

/// Exact rational over int64, always normalized (gcd 1, positive denominator).
/// Constraint coefficients stay exact until the floating evaluation boundary,
/// so inputs like 1/3 or 0.975 never pick up decimal rounding.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }

  bool operator==(const Rational& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const Rational& other) const { return !(*this == other); }
  bool operator<(const Rational& other) const;
  bool operator>(const Rational& other) const { return other < *this; }
  bool operator<=(const Rational& other) const { return !(other < *this); }
  bool operator>=(const Rational& other) const { return !(*this < other); }

  /// "3", "-2/5". Re-parsed by the constraint grammar without loss.
  std::string to_string() const;

  /// Parses "42", "-7", "3/4", "0.975", "-0.5". Decimals become exact
  /// base-10 rationals. Throws DomainError on malformed input or overflow.
  static Rational parse(const std::string& text);

private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace probarg
