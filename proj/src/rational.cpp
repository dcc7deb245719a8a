#include "hkd/rational.hpp"

#include <ostream>

#include "hkd/errors.hpp"

namespace hkd {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw_zero_denominator();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

void Rational::throw_zero_denominator() { throw DomainError("rational with zero denominator"); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  BigInt d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return {BigInt(n, 10), d};
}

std::string Rational::str() const { return value_.get_str(); }

std::string Rational::decimal(int places) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  BigInt num = abs(value_.get_num()) * scale;
  const BigInt& den = value_.get_den();
  BigInt q = num / den;
  const BigInt r = num % den;
  if (2 * r >= den) q += 1;

  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
  }
  std::string int_part = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(places));
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (sign() < 0 && q != 0) ? "-" : "";
  out += int_part;
  if (!frac.empty()) out += "." + frac;
  return out;
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return {num, den};
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Stern-Brocot descent, with whole runs of identical steps taken at once.
Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = min(lo_in, hi_in);
  Rational hi = max(lo_in, hi_in);
  if (lo.sign() <= 0 && hi.sign() >= 0) return 0;
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);

  // Continued-fraction recursion on [lo, hi] with 0 < lo.
  const BigInt fl = lo.floor();
  if (Rational(fl) == lo) return lo;
  if (Rational(BigInt(fl + 1)) <= hi) return Rational(BigInt(fl + 1));
  // Both lie strictly inside (fl, fl+1): recurse on reciprocals of fractional parts.
  const Rational inner = simplest_between(Rational(1) / (hi - Rational(fl)), Rational(1) / (lo - Rational(fl)));
  return Rational(fl) + Rational(1) / inner;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace hkd
