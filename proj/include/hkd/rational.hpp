#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hkd {

using BigInt = mpz_class;

/// Exact rational number, always reduced with a positive denominator.
///
/// Thin value wrapper over `mpq_class`. It exists so that gmpxx expression
/// templates never leak into `auto` variables and so that the canonical text
/// form ("num/den", or "num" when the denominator is 1) lives in one place.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::integral T, std::integral U>
  Rational(T num, U den)
      : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

  Rational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class value);

  /// Parses "a", "-a", "a/b" with b != 0. Anything else is a ParseError.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  /// Decimal rendering rounded half-away-from-zero to `places` digits with
  /// trailing zeros stripped. Lossy; for human-facing columns only.
  [[nodiscard]] std::string decimal(int places = 12) const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  /// Largest integer <= value.
  [[nodiscard]] BigInt floor() const;
  /// Smallest integer >= value.
  [[nodiscard]] BigInt ceil() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  [[noreturn]] static void throw_zero_denominator();
  mpq_class value_{0};
};

Rational abs(const Rational& x);
Rational pow(const Rational& base, unsigned exponent);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Simplest rational (smallest denominator, then smallest |numerator|) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace hkd
