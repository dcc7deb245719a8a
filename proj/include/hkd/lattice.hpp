#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "hkd/colength.hpp"
#include "hkd/piecewise.hpp"
#include "hkd/semigroup.hpp"

namespace hkd {

/// Degree-independent support bound m~ = m_mu * l * s / n0 where m_mu is the
/// largest generator degree of S, l the least power with J^l inside I
/// (J = ideal of all positive-degree elements) and s the number of ideal
/// generators. Measured in the x-units of the density approximants.
struct SupportBound {
  Rational m_tilde;
  long max_generator_degree = 0;
  int power = 0;
  int ideal_generators = 0;
};

/// Throws ValidationError when no l <= max_power works (I has infinite colength).
SupportBound support_bound(const SemigroupSpec& spec, const MonomialIdealSpec& ideal, int max_power = 64);

/// Step function f_n and its continuous piecewise linear interpolant g_n.
struct DensityApproximant {
  int level = 0;
  long q = 0;
  PiecewisePoly f_n;
  PiecewisePoly g_n;
};

struct ConvergenceRow {
  int level = 0;
  long q = 0;
  SupDistance distance;
  /// Integral of f_n, i.e. l(R/I^[q]) / q^d.
  Rational integral;
};

/// A semigroup ring with a monomial ideal, plus the derived data every
/// approximant needs. Enumerations are cached; the cache is mutex-guarded.
class LatticeProblem {
 public:
  LatticeProblem(SemigroupSpec spec, MonomialIdealSpec ideal, std::size_t point_cap = kDefaultPointCap);

  [[nodiscard]] const SemigroupSpec& spec() const { return spec_; }
  [[nodiscard]] const MonomialIdealSpec& ideal() const { return ideal_; }
  [[nodiscard]] long n0() const { return n0_; }
  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] const SupportBound& bound() const { return bound_; }
  [[nodiscard]] std::size_t point_cap() const { return point_cap_; }

  [[nodiscard]] long q_for_level(int level) const;
  /// Grid cells [m/q, (m+1)/q) examined at this level: 0..ceil(m~ q).
  [[nodiscard]] long cells_for_level(int level) const;
  /// Highest degree whose colength the level needs.
  [[nodiscard]] long degree_for_level(int level) const;

  /// Enumeration of S up to at least max_degree (shared, immutable).
  [[nodiscard]] std::shared_ptr<const Semigroup> semigroup(long max_degree) const;

 private:
  SemigroupSpec spec_;
  MonomialIdealSpec ideal_;
  std::size_t point_cap_;
  long n0_;
  int dimension_;
  SupportBound bound_;

  mutable std::mutex mutex_;
  mutable std::shared_ptr<const Semigroup> cache_;
};

/// The points of S with degree <= max_degree, paired with their degrees,
/// ordered by (degree, point).
std::vector<std::pair<Point, long>> enumerate_semigroup(const SemigroupSpec& spec, long max_degree,
                                                        std::size_t point_cap = kDefaultPointCap);

/// f_n(x) = q^{1-d} * sum_{j<n0} l(R/I^[q])_{floor(xq) n0 + j}, and g_n its
/// linear interpolation between the grid points m/q.
DensityApproximant build_approximant(const LatticeProblem& problem, int level);

/// Per level: sup |g_n - reference| (or |g_n - g_{n+1}| with no reference)
/// and the e_HK estimate given by the integral of f_n.
std::vector<ConvergenceRow> convergence_report(const LatticeProblem& problem, std::span<const int> levels,
                                               const PiecewisePoly* reference = nullptr);

/// Largest level <= requested whose enumeration fits under the point cap; 0 if none.
int max_feasible_level(const LatticeProblem& problem, int requested);

}  // namespace hkd
