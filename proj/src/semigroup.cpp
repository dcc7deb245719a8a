#include "hkd/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hkd/errors.hpp"
#include "hkd/rational.hpp"

namespace hkd {

long SemigroupSpec::degree(std::span<const long> v) const {
  long deg = 0;
  for (std::size_t i = 0; i < v.size(); ++i) deg += weights[i] * v[i];
  return deg;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void SemigroupSpec::validate() const {
  if (rank < 1) throw ValidationError("semigroup rank must be positive");
  if (static_cast<int>(weights.size()) != rank) throw ValidationError("semigroup weights must have length rank");
  for (long w : weights) {
    if (w <= 0) throw ValidationError("semigroup degree weights must be positive");
  }
  if (generators.empty()) throw ValidationError("semigroup needs at least one generator");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != rank) throw ValidationError("semigroup generator has wrong length");
    if (std::any_of(g.begin(), g.end(), [](long c) { return c < 0; })) {
      throw ValidationError("semigroup generators must have non-negative coordinates");
    }
    if (degree(g) <= 0) throw ValidationError("semigroup generators must have positive degree");
  }
  if (!is_prime(p)) throw DomainError("characteristic p = " + std::to_string(p) + " is not prime");
}

int semigroup_dimension(const SemigroupSpec& spec) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : spec.generators) rows.emplace_back(g.begin(), g.end());
  int rank = 0;
  const auto cols = static_cast<std::size_t>(spec.rank);
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [c](const auto& r) { return !r[c].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational factor = rows[r][c] / prow[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * prow[k];
    }
    ++rank;
  }
  return rank;
}

long semigroup_degree_gcd(const SemigroupSpec& spec) {
  long g = 0;
  for (const auto& gen : spec.generators) g = std::gcd(g, spec.degree(gen));
  return g;
}

Semigroup::Semigroup(SemigroupSpec spec, long max_degree, std::size_t point_cap)
    : spec_(std::move(spec)), max_degree_(max_degree) {
  spec_.validate();
  if (max_degree_ < 0) throw DomainError("enumeration degree bound must be non-negative");

  const auto rank = static_cast<std::size_t>(spec_.rank);
  bounds_.resize(rank);
  shifts_.resize(rank);
  masks_.resize(rank);
  unsigned used = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    bounds_[i] = max_degree_ / spec_.weights[i];
    const auto bits = std::max<unsigned long>(1, std::bit_width(static_cast<unsigned long>(bounds_[i])));
    shifts_[i] = used;
    masks_[i] = (bits >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    used += static_cast<unsigned>(bits);
  }
  if (used > 64) {
    throw ResourceError("semigroup of rank " + std::to_string(rank) + " up to degree " + std::to_string(max_degree_) +
                        " does not fit 64-bit packed keys");
  }

  std::vector<std::pair<long, std::uint64_t>> steps;  // (degree, packed generator)
  for (const auto& g : spec_.generators) {
    const long deg = spec_.degree(g);
    if (deg <= max_degree_) steps.emplace_back(deg, pack(g));
  }

  layers_.resize(static_cast<std::size_t>(max_degree_) + 1);
  layers_[0].push_back(0);
  size_ = 1;
  std::vector<std::uint64_t> candidates;
  for (long d = 1; d <= max_degree_; ++d) {
    candidates.clear();
    for (const auto& [deg, key] : steps) {
      if (deg > d) continue;
      for (std::uint64_t base : layers_[static_cast<std::size_t>(d - deg)]) candidates.push_back(base + key);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    size_ += candidates.size();
    if (size_ > point_cap) {
      throw ResourceError("semigroup enumeration exceeded the point cap of " + std::to_string(point_cap) +
                          " at degree " + std::to_string(d));
    }
    layers_[static_cast<std::size_t>(d)] = candidates;
  }
}

std::uint64_t Semigroup::pack(std::span<const long> v) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < v.size(); ++i) key |= static_cast<std::uint64_t>(v[i]) << shifts_[i];
  return key;
}

void Semigroup::unpack(std::uint64_t key, std::span<long> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<long>((key >> shifts_[i]) & masks_[i]);
}

Point Semigroup::unpack(std::uint64_t key) const {
  Point p(static_cast<std::size_t>(spec_.rank));
  unpack(key, p);
  return p;
}

bool Semigroup::contains(std::span<const long> v) const {
  if (static_cast<int>(v.size()) != spec_.rank) throw DomainError("membership query has wrong dimension");
  if (std::any_of(v.begin(), v.end(), [](long c) { return c < 0; })) return false;
  const long deg = spec_.degree(v);
  if (deg > max_degree_) {
    throw ResourceError("membership query at degree " + std::to_string(deg) + " beyond enumeration bound " +
                        std::to_string(max_degree_));
  }
  const auto& layer = layers_[static_cast<std::size_t>(deg)];
  return std::binary_search(layer.begin(), layer.end(), pack(v));
}

std::span<const std::uint64_t> Semigroup::layer(long degree) const {
  if (degree < 0) return {};
  if (degree > max_degree_) {
    throw ResourceError("degree " + std::to_string(degree) + " beyond enumeration bound " +
                        std::to_string(max_degree_));
  }
  return layers_[static_cast<std::size_t>(degree)];
}

std::vector<Point> Semigroup::points_of_degree(long degree) const {
  std::vector<Point> out;
  for (std::uint64_t key : layer(degree)) out.push_back(unpack(key));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hkd
