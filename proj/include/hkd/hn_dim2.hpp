#pragma once

#include <span>
#include <vector>

#include "hkd/piecewise.hpp"

namespace hkd {

struct HNComponent {
  Rational slope;
  long rank = 0;

  friend bool operator==(const HNComponent&, const HNComponent&) = default;
};

/// Strong Harder-Narasimhan data of a bundle on a curve: slopes a_1 > ... >
/// a_{l+1} with ranks r_i, and d = deg O(1). An empty component list is the
/// zero bundle.
struct HNData {
  std::vector<HNComponent> components;
  long d = 1;

  friend bool operator==(const HNData&, const HNData&) = default;
};

/// Throws ValidationError unless slopes strictly decrease, ranks are positive and d > 0.
void validate_hn(const HNData& data);

/// HK density of the bundle with respect to O(1). On [1 - a_i/d, 1 - a_{i+1}/d)
/// it is -sum_{k>i} (a_k r_k + d (x-1) r_k); before 1 - a_1/d all components
/// contribute; it vanishes from 1 - a_{l+1}/d on. Breakpoints below 0 are
/// clipped. A negative value anywhere raises ValidationError.
PiecewisePoly hn_density(const HNData& data);

/// HN data of the sum of line bundles O(1 - d_i): slopes (1 - d_i) d, equal slopes merged.
HNData line_bundle_sum(std::span<const long> twist_degrees, long d);

/// f_{R,I} = f_V - f_{sum O(1 - d_i)} for the syzygy bundle V of generators of
/// degrees d_1..d_s. Must come out non-negative (ValidationError otherwise).
PiecewisePoly dim2_pair_density(const HNData& syzygy, std::span<const long> twist_degrees, long d);

}  // namespace hkd
