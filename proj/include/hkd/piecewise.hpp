#pragma once

#include <optional>
#include <vector>

#include "hkd/polynomial.hpp"
#include "hkd/rational.hpp"

namespace hkd {

/// Piecewise polynomial function on [0, inf).
///
/// Breakpoints 0 = b_0 < b_1 < ... < b_k carry k pieces; piece i lives on the
/// half-open interval [b_{i-1}, b_i). Beyond b_k the function equals the
/// optional unbounded `tail` polynomial, or 0 when there is none. Continuity is
/// not required (step functions are legal values).
///
/// Values are kept in canonical form: equal adjacent pieces are merged,
/// trailing pieces equal to the tail (or to zero) are absorbed, and a zero
/// tail is dropped. Structural equality is therefore function equality.
class PiecewisePoly {
 public:
  /// The zero function.
  PiecewisePoly();
  /// Throws DomainError if breakpoints do not start at 0, are not strictly
  /// increasing, or do not match the number of pieces.
  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                std::optional<Polynomial> tail = std::nullopt);

  /// `tail` on all of [0, inf).
  static PiecewisePoly unbounded(Polynomial tail);

  [[nodiscard]] const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  [[nodiscard]] const std::vector<Polynomial>& pieces() const { return pieces_; }
  [[nodiscard]] const std::optional<Polynomial>& tail() const { return tail_; }

  /// Last breakpoint b_k; for compactly supported functions supp f is inside [0, b_k].
  [[nodiscard]] const Rational& support_end() const { return breakpoints_.back(); }
  [[nodiscard]] bool has_compact_support() const { return !tail_.has_value(); }
  [[nodiscard]] bool is_zero() const { return pieces_.empty() && !tail_; }
  /// Maximum degree over pieces and tail; -1 for the zero function.
  [[nodiscard]] int degree() const;

  /// Polynomial in force at x >= 0 under the half-open convention.
  [[nodiscard]] const Polynomial& polynomial_at(const Rational& x) const;

  friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

 private:
  void normalize();

  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
  std::optional<Polynomial> tail_;
};

enum class CombineOp { add, sub, mul };

struct SupDistance {
  Rational value;
  /// False when `value` is only a certified upper bound (irrational critical points).
  bool exact = true;
};

/// Adjacent pieces agree at every breakpoint (including the tail / zero beyond b_k).
bool is_continuous(const PiecewisePoly& f);

/// Throws DomainError for x < 0.
Rational pw_eval(const PiecewisePoly& f, const Rational& x);

/// Exact integral over [0, inf). Throws DomainError when a nonzero tail makes it diverge.
Rational pw_integrate(const PiecewisePoly& f);

/// Pointwise f op g on the union refinement of both breakpoint lists.
PiecewisePoly pw_combine(const PiecewisePoly& f, const PiecewisePoly& g, CombineOp op);

/// Pointwise scalar multiple s * f.
PiecewisePoly pw_scale(const PiecewisePoly& f, const Rational& s);

/// x -> s * f(c * x). Throws DomainError unless c > 0.
PiecewisePoly pw_rescale_arg(const PiecewisePoly& f, const Rational& c, const Rational& s);

/// sup |f - g| over [0, inf). Exact for pieces of degree <= 1 and whenever the
/// derivative of each difference piece splits over Q; otherwise an upper bound
/// from 1024 samples per piece padded by a Lipschitz constant.
/// Throws DomainError if f - g has a nonzero unbounded tail.
SupDistance pw_sup_distance(const PiecewisePoly& f, const PiecewisePoly& g);

/// All roots of p in Q, with multiplicity, if p splits into linear factors over Q.
/// nullopt otherwise, or when the coefficients are too large to search.
std::optional<std::vector<Rational>> rational_roots(const Polynomial& p);

inline PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g) { return pw_combine(f, g, CombineOp::add); }
inline PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g) { return pw_combine(f, g, CombineOp::sub); }
inline PiecewisePoly operator*(const PiecewisePoly& f, const PiecewisePoly& g) { return pw_combine(f, g, CombineOp::mul); }
inline PiecewisePoly operator*(const Rational& s, const PiecewisePoly& f) { return pw_scale(f, s); }

}  // namespace hkd
