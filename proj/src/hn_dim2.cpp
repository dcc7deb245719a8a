#include "hkd/hn_dim2.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

// Linear pieces only: non-negative on [lo, hi] iff non-negative at both ends.
void require_non_negative(const PiecewisePoly& f, const char* what) {
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const auto& p = f.pieces()[i];
    if (p(bps[i]).sign() < 0 || p(bps[i + 1]).sign() < 0) {
      throw ValidationError(std::string(what) + " is negative on [" + bps[i].str() + ", " + bps[i + 1].str() + ")");
    }
  }
}

}  // namespace

void validate_hn(const HNData& data) {
  if (data.d <= 0) throw ValidationError("deg O(1) must be positive");
  for (std::size_t i = 0; i < data.components.size(); ++i) {
    if (data.components[i].rank <= 0) throw ValidationError("HN ranks must be positive");
    if (i > 0 && !(data.components[i].slope < data.components[i - 1].slope)) {
      throw ValidationError("HN slopes must be strictly decreasing");
    }
  }
}

PiecewisePoly hn_density(const HNData& data) {
  validate_hn(data);
  const Rational d(data.d);
  const auto& comps = data.components;

  // piece on the region where components i..end still contribute
  auto tail_sum = [&](std::size_t i) {
    Polynomial p;
    for (std::size_t k = i; k < comps.size(); ++k) {
      const Rational r(comps[k].rank);
      p -= Polynomial({comps[k].slope * r - d * r, d * r});
    }
    return p;
  };

  std::vector<Rational> bps{Rational(0)};
  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Rational end = Rational(1) - comps[i].slope / d;
    if (end.sign() <= 0) continue;
    pieces.push_back(tail_sum(i));
    bps.push_back(end);
  }
  PiecewisePoly f(std::move(bps), std::move(pieces));
  if (!is_continuous(f)) throw std::logic_error("HN density is discontinuous");
  require_non_negative(f, "HN density");
  return f;
}

HNData line_bundle_sum(std::span<const long> twist_degrees, long d) {
  std::map<Rational, long, std::greater<>> merged;
  for (long di : twist_degrees) merged[Rational((1 - di) * d)] += 1;
  HNData out;
  out.d = d;
  for (const auto& [slope, rank] : merged) out.components.push_back({slope, rank});
  return out;
}

PiecewisePoly dim2_pair_density(const HNData& syzygy, std::span<const long> twist_degrees, long d) {
  if (!syzygy.components.empty() && syzygy.d != d) {
    throw ValidationError("syzygy bundle data uses a different deg O(1)");
  }
  HNData v = syzygy;
  v.d = d;
  PiecewisePoly f = hn_density(v) - hn_density(line_bundle_sum(twist_degrees, d));
  require_non_negative(f, "pair density");
  return f;
}

}  // namespace hkd
