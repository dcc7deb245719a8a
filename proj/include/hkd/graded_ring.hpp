#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "hkd/piecewise.hpp"
#include "hkd/rational.hpp"
#include "hkd/semigroup.hpp"

namespace hkd {

/// Weighted complete intersection k[y_1..y_g]/(F_1..F_r), deg y_i = e_i, deg F_j = c_j.
struct CompleteIntersection {
  std::vector<long> generator_degrees;
  std::vector<long> relation_degrees;

  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;
};

class GradedRingSpec;

/// R^(m): only the Hilbert function of the base at multiples of m is promised.
struct VeroneseOf {
  std::shared_ptr<const GradedRingSpec> base;
  long factor = 1;
};

class GradedRingSpec {
 public:
  using Presentation = std::variant<CompleteIntersection, SemigroupSpec, VeroneseOf>;

  /// Throws ValidationError unless all degrees are positive and r < g.
  static GradedRingSpec complete_intersection(std::vector<long> generator_degrees, std::vector<long> relation_degrees);
  static GradedRingSpec semigroup(SemigroupSpec spec);
  /// k[x_1..x_d] with standard grading.
  static GradedRingSpec polynomial_ring(int d);

  [[nodiscard]] const Presentation& presentation() const { return presentation_; }
  [[nodiscard]] int dimension() const;

 private:
  explicit GradedRingSpec(Presentation p) : presentation_(std::move(p)) {}
  Presentation presentation_;

  friend GradedRingSpec veronese(const GradedRingSpec& spec, long m);
};

/// Memoized degree -> l(R_m) oracle. Copies share the memo, which is guarded
/// by a mutex, so one instance may be queried from several threads.
class HilbertFunction {
 public:
  explicit HilbertFunction(GradedRingSpec spec, std::size_t point_cap = kDefaultPointCap);

  /// l(R_m); 0 for m < 0.
  [[nodiscard]] BigInt operator()(long m) const;
  [[nodiscard]] int dimension() const;
  /// gcd of the degrees of the presentation's generators (see gcd_degrees for the checked version).
  [[nodiscard]] long n0() const;
  [[nodiscard]] const GradedRingSpec& spec() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

BigInt hilbert_fn(const GradedRingSpec& spec, long m);

/// n0 = gcd{m > 0 : R_m != 0}, cross-checked against the oracle on a prefix window.
long gcd_degrees(const GradedRingSpec& spec);

GradedRingSpec veronese(const GradedRingSpec& spec, long m);

struct DensityFitOptions {
  long initial_scale = 8;
  /// Largest degree the fit may touch before giving up.
  long max_degree = 8192;
  /// Relative agreement demanded between the fits at scales M and 2M.
  Rational tolerance{1, 50};
};

/// Coefficient e with sum_{j < n0} l(R_{M n0 + j}) = e * M^{d-1} + O(M^{d-2}).
/// Measured from (d-1)-th finite differences of the window sums at scales M
/// and 2M, doubling M until the two agree within tolerance, then snapped to
/// the simplest rational between them. Throws ResourceError ("degree bound
/// too small") if agreement is not reached below max_degree.
Rational fit_density_coefficient(const HilbertFunction& h, const DensityFitOptions& options = {});

/// Leading coefficient of the Hilbert-Samuel density F_R(x) = e * x^{d-1}.
/// Closed form n0^d * prod c / ((d-1)! * prod e) for complete intersections,
/// the counting fit otherwise. Throws DomainError if d < 2.
Rational hilbert_density_coefficient(const GradedRingSpec& spec, const DensityFitOptions& options = {});

/// F_R as a single unbounded piece.
PiecewisePoly hilbert_density(const GradedRingSpec& spec, const DensityFitOptions& options = {});

}  // namespace hkd
