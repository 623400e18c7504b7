#include "probarg/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace probarg {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("rational arithmetic overflow");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("rational arithmetic overflow");
  }
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) {
    throw DomainError("rational with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& other) const {
  const std::int64_t g = std::gcd(den_, other.den_);
  const std::int64_t lhs_scale = other.den_ / g;
  const std::int64_t rhs_scale = den_ / g;
  return Rational(checked_add(checked_mul(num_, lhs_scale), checked_mul(other.num_, rhs_scale)),
                  checked_mul(den_, lhs_scale));
}

Rational Rational::operator-(const Rational& other) const { return *this + (-other); }

Rational Rational::operator*(const Rational& other) const {
  const Rational a(num_, other.den_);    // cross-reduce before multiplying
  const Rational b(other.num_, den_);
  return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) {
    throw DomainError("rational division by zero");
  }
  return *this * Rational(other.den_, other.num_);
}

bool Rational::operator<(const Rational& other) const {
  return checked_mul(num_, other.den_) < checked_mul(other.num_, den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) {
    throw DomainError("empty rational literal");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-' || text[pos] == '+') {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw DomainError("malformed rational literal: '" + text + "'");
  }

  auto read_digits = [&](std::int64_t& value) -> int {
    int count = 0;
    value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = checked_add(checked_mul(value, 10), text[pos] - '0');
      ++pos;
      ++count;
    }
    return count;
  };

  std::int64_t whole = 0;
  read_digits(whole);

  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t frac = 0;
    const std::size_t frac_start = pos;
    if (read_digits(frac) == 0) {
      throw DomainError("malformed decimal literal: '" + text + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = frac_start; i < pos; ++i) {
      scale = checked_mul(scale, 10);
    }
    if (pos != text.size()) {
      throw DomainError("malformed rational literal: '" + text + "'");
    }
    const std::int64_t num = checked_add(checked_mul(whole, scale), frac);
    return Rational(negative ? -num : num, scale);
  }

  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::int64_t den = 0;
    if (read_digits(den) == 0 || pos != text.size()) {
      throw DomainError("malformed fraction literal: '" + text + "'");
    }
    return Rational(negative ? -whole : whole, den);
  }

  if (pos != text.size()) {
    throw DomainError("malformed rational literal: '" + text + "'");
  }
  return Rational(negative ? -whole : whole, 1);
}

}  // namespace probarg
