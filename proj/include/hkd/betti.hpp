#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hkd/errors.hpp"
#include "hkd/graded_ring.hpp"
#include "hkd/piecewise.hpp"
#include "hkd/polynomial.hpp"

namespace hkd {

struct BettiEntry {
  int i = 0;
  long j = 0;
  long count = 0;
};

/// Graded Betti numbers beta_{i,j} of a finite free resolution of R/I of
/// length d. beta_{0,0} = 1 is implicit; no other i = 0 entry is allowed.
class BettiTable {
 public:
  /// Throws ValidationError for negative counts, i outside [0, d], j < 0,
  /// i = 0 entries other than (0, 0, 1), or duplicate (i, j) pairs.
  BettiTable(int d, const std::vector<BettiEntry>& entries);

  [[nodiscard]] int length() const { return d_; }
  [[nodiscard]] long beta(int i, long j) const;
  /// Nonzero entries, including (0, 0) -> 1, ordered by (i, j).
  [[nodiscard]] const std::map<std::pair<int, long>, long>& entries() const { return entries_; }
  /// l = largest j with some beta_{i,j} != 0.
  [[nodiscard]] long max_degree() const { return max_degree_; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int d_;
  long max_degree_ = 0;
  std::map<std::pair<int, long>, long> entries_;
};

/// B(j) = sum_i (-1)^i beta_{i,j}, for every j that carries an entry. B(0) = 1.
std::map<long, long> b_numbers(const BettiTable& t);
/// B(j) for a single degree; 0 when no entry sits in degree j (including j < 0).
long b_number(const BettiTable& t, long j);

/// x^{d-1} + sum_{j>=1} B(j) (x - j)^{d-1}; zero exactly when the table can
/// come from a finite-colength ideal.
Polynomial betti_residual(const BettiTable& t);

class BettiViolation : public ValidationError {
 public:
  explicit BettiViolation(Polynomial residual);
  [[nodiscard]] const Polynomial& residual() const { return residual_; }

 private:
  Polynomial residual_;
};

/// Throws BettiViolation carrying the nonzero residual.
void validate_betti(const BettiTable& t);

/// l(R/I^[q])_m = sum_j B(j) l(R_{m - jq}). A negative value means the Betti
/// data and Hilbert function cannot belong together and raises ValidationError.
BigInt colength_by_degree(const BettiTable& t, const HilbertFunction& h, long q, long m);

/// The piecewise polynomial e0 * [x^{d-1} + sum_{j<=i} B(j) (x-j)^{d-1}] on
/// [i, i+1), supported in [0, l]. Validates the table first; requires e0 > 0,
/// d >= 2 and d equal to the table length.
PiecewisePoly closed_form_density(const BettiTable& t, const Rational& e0, int d);

/// e0/d * sum_j B(j) (l - j)^d, cross-checked against the integral of
/// closed_form_density (std::logic_error on mismatch).
Rational ehk_closed_form(const BettiTable& t, const Rational& e0, int d);

}  // namespace hkd
