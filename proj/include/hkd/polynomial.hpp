#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hkd/rational.hpp"

namespace hkd {

/// Dense univariate polynomial over Q. Coefficients are stored constant-first
/// with trailing zeros stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// c * x^k
  static Polynomial monomial(const Rational& c, unsigned k);
  /// (x - a)^k
  static Polynomial shifted_power(const Rational& a, unsigned k);

  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Rational coefficient(unsigned k) const;
  [[nodiscard]] Rational leading() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  [[nodiscard]] Polynomial antiderivative() const;
  [[nodiscard]] Rational integrate(const Rational& a, const Rational& b) const;
  /// x -> p(c * x)
  [[nodiscard]] Polynomial compose_scale(const Rational& c) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable, e.g. "31/30 - 1/15*x". Not the interchange format.
  [[nodiscard]] std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hkd
