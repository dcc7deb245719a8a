#pragma once

#include <vector>

#include "hkd/piecewise.hpp"

namespace hkd {

/// Hilbert-Samuel density F (one unbounded piece e * x^{d-1}) together with
/// the HK density f of some ideal, and the ring dimension d.
struct DensityPair {
  PiecewisePoly F;
  PiecewisePoly f;
  int d = 2;

  friend bool operator==(const DensityPair&, const DensityPair&) = default;
};

/// Checks d >= 2, F = e x^{d-1} with e > 0, f compactly supported and
/// continuous, and f <= F on a rational grid over supp f. ValidationError otherwise.
void validate_pair(const DensityPair& pair);

/// Segre product: F = F_A F_B, F - f = (F_A - f_A)(F_B - f_B), d = d_A + d_B - 1.
/// Inputs must already be normalized to support gcd 1 (take Veronese
/// subrings first). The e_HK of the result is cross-checked against
/// segre_ehk_expansion (std::logic_error on mismatch).
DensityPair segre(const DensityPair& a, const DensityPair& b);

/// int F_A f_B + int F_B f_A - int f_A f_B, each integral computed on its own.
Rational segre_ehk_expansion(const DensityPair& a, const DensityPair& b);

/// x -> (l0 / rank) * f(l0 x): passes from f_{R, IR} to f_{S, I} for a
/// module-finite S -> R with l0 = m0 / n0. The integral scales by 1 / rank.
PiecewisePoly rescale_density(const PiecewisePoly& ambient, long l0, long rank);

/// rank * f (density of a module of the given rank).
PiecewisePoly module_density(const PiecewisePoly& ring_density, long rank);

/// prod e_i / prod c_j.
Rational rank_from_degrees(const std::vector<long>& generator_degrees, const std::vector<long>& relation_degrees);

}  // namespace hkd
