#include "hkd/combinators.hpp"

#include <stdexcept>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

constexpr int kGridPerPiece = 16;

}  // namespace

void validate_pair(const DensityPair& pair) {
  if (pair.d < 2) throw DomainError("density pairs need dimension >= 2");
  const auto& F = pair.F;
  const auto expected_degree = pair.d - 1;
  if (!F.pieces().empty() || !F.tail() || F.tail()->degree() != expected_degree ||
      Polynomial::monomial(F.tail()->leading(), static_cast<unsigned>(expected_degree)) != *F.tail() ||
      F.tail()->leading().sign() <= 0) {
    throw ValidationError("Hilbert density must be a single unbounded term e*x^(d-1) with e > 0");
  }
  if (!pair.f.has_compact_support()) throw ValidationError("HK density must be compactly supported");
  if (!is_continuous(pair.f)) throw ValidationError("HK density must be continuous");

  const auto& bps = pair.f.breakpoints();
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Rational step = (bps[i + 1] - bps[i]) / Rational(kGridPerPiece);
    for (int k = 0; k <= kGridPerPiece; ++k) {
      const Rational x = bps[i] + step * Rational(k);
      if (pw_eval(pair.f, x) > pw_eval(F, x)) {
        throw ValidationError("HK density exceeds the Hilbert density at x = " + x.str());
      }
    }
  }
}

Rational segre_ehk_expansion(const DensityPair& a, const DensityPair& b) {
  return pw_integrate(a.F * b.f) + pw_integrate(b.F * a.f) - pw_integrate(a.f * b.f);
}

DensityPair segre(const DensityPair& a, const DensityPair& b) {
  if (a.d < 2 || b.d < 2) throw DomainError("Segre products need both dimensions >= 2");
  DensityPair out;
  out.F = a.F * b.F;
  out.f = out.F - (a.F - a.f) * (b.F - b.f);
  out.d = a.d + b.d - 1;
  if (a.f.has_compact_support() && b.f.has_compact_support() && pw_integrate(out.f) != segre_ehk_expansion(a, b)) {
    throw std::logic_error("Segre density integral disagrees with its three-integral expansion");
  }
  return out;
}

PiecewisePoly rescale_density(const PiecewisePoly& ambient, long l0, long rank) {
  if (l0 <= 0 || rank <= 0) throw DomainError("rescale needs positive l0 and rank");
  return pw_rescale_arg(ambient, Rational(l0), Rational(l0, rank));
}

PiecewisePoly module_density(const PiecewisePoly& ring_density, long rank) {
  if (rank < 0) throw DomainError("module rank must be non-negative");
  return pw_scale(ring_density, Rational(rank));
}

Rational rank_from_degrees(const std::vector<long>& generator_degrees, const std::vector<long>& relation_degrees) {
  Rational r = 1;
  for (long e : generator_degrees) r *= Rational(e);
  for (long c : relation_degrees) {
    if (c <= 0) throw DomainError("relation degrees must be positive");
    r /= Rational(c);
  }
  return r;
}

}  // namespace hkd
