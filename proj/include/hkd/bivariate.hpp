#pragma once

#include <array>
#include <concepts>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hkd/rational.hpp"

namespace hkd {

/// Element a + b*u of Q[u]/(u^2 - D). The radicand only matters when b != 0;
/// numbers with b = 0 combine with any radicand. Mixing two different
/// radicands is a DomainError.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  template <std::integral T>
  QuadNumber(T a) : a_(a) {}  // NOLINT(implicit)
  QuadNumber(Rational a, Rational b, Rational radicand);

  /// u itself, with u^2 = radicand.
  static QuadNumber root(const Rational& radicand) { return {0, 1, radicand}; }

  [[nodiscard]] const Rational& rational_part() const { return a_; }
  [[nodiscard]] const Rational& root_part() const { return b_; }
  [[nodiscard]] const Rational& radicand() const { return d_; }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);
  /// Throws DomainError on division by a zero divisor.
  QuadNumber& operator/=(const QuadNumber& o);

  friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
  friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
  friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
  friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }
  friend QuadNumber operator-(const QuadNumber& x) { return QuadNumber(0) - x; }
  friend bool operator==(const QuadNumber& x, const QuadNumber& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  [[nodiscard]] std::string str() const;

 private:
  void join_radicand(const QuadNumber& o);
  void normalize() {
    if (b_.is_zero()) d_ = 0;
  }

  Rational a_;
  Rational b_;
  Rational d_;
};

/// Sparse polynomial in x1, x2 with QuadNumber coefficients, keyed by the
/// exponent pair (a, b) of x1^a x2^b. No zero coefficients are stored.
class BivariatePoly {
 public:
  using Exponent = std::pair<int, int>;

  BivariatePoly() = default;
  explicit BivariatePoly(std::map<Exponent, QuadNumber> terms);
  static BivariatePoly term(const QuadNumber& c, int a, int b);

  [[nodiscard]] const std::map<Exponent, QuadNumber>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_homogeneous() const;
  /// Total degree of a homogeneous polynomial; -1 for zero.
  [[nodiscard]] int degree() const;
  [[nodiscard]] QuadNumber coefficient(int a, int b) const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const QuadNumber& c);

  friend BivariatePoly operator+(BivariatePoly x, const BivariatePoly& y) { return x += y; }
  friend BivariatePoly operator-(BivariatePoly x, const BivariatePoly& y) { return x -= y; }
  friend BivariatePoly operator-(BivariatePoly x) { return x *= QuadNumber(-1); }
  friend BivariatePoly operator*(BivariatePoly x, const QuadNumber& c) { return x *= c; }
  friend BivariatePoly operator*(const QuadNumber& c, BivariatePoly x) { return x *= c; }
  friend BivariatePoly operator*(const BivariatePoly& x, const BivariatePoly& y);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  [[nodiscard]] std::string str() const;

 private:
  void prune();
  std::map<Exponent, QuadNumber> terms_;
};

/// 2x3 presentation matrix psi of a Hilbert-Burch resolution.
using HbMatrix = std::array<std::array<BivariatePoly, 3>, 2>;

/// Signed maximal minors: minor k = (-1)^k * det(psi without column k).
/// Throws ValidationError if an entry or a minor is not homogeneous.
std::array<BivariatePoly, 3> hilbert_burch_minors(const HbMatrix& psi);

/// If p = c * q for a nonzero scalar c, returns c.
std::optional<QuadNumber> proportionality(const BivariatePoly& p, const BivariatePoly& q);

/// Homogeneous ideal membership in k[x1, x2] by linear algebra in degree deg f.
bool in_ideal(const BivariatePoly& f, std::span<const BivariatePoly> generators);

enum class MinorMatch {
  proportional,  // each minor is a nonzero multiple of a distinct generator
  same_ideal,    // not generator-wise, but the minors generate the same ideal
  mismatch,
};

struct MinorCheck {
  MinorMatch match = MinorMatch::mismatch;
  /// For `proportional`: minor k = scalars[k] * generators[assignment[k]].
  std::array<int, 3> assignment{};
  std::array<QuadNumber, 3> scalars{};
  /// For `mismatch`: the index of an offending minor (or -1) and a description.
  int offending_minor = -1;
  std::string detail;
};

/// Compares I_2(psi) against (h_1, h_2, h_3): first generator by generator up
/// to nonzero scalars (in any order), then as ideals.
MinorCheck compare_minors(const std::array<BivariatePoly, 3>& minors, const std::vector<BivariatePoly>& generators);

}  // namespace hkd
