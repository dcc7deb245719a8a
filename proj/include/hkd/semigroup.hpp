#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hkd {

using Point = std::vector<long>;

inline constexpr std::size_t kDefaultPointCap = 50'000'000;

/// Affine semigroup in Z^rank generated by non-negative, nonzero vectors,
/// graded by deg(v) = <weights, v> with positive weights.
struct SemigroupSpec {
  int rank = 0;
  std::vector<Point> generators;
  std::vector<long> weights;
  long p = 5;

  [[nodiscard]] long degree(std::span<const long> v) const;
  /// Throws ValidationError on shape or sign violations, DomainError if p is not prime.
  void validate() const;

  friend bool operator==(const SemigroupSpec&, const SemigroupSpec&) = default;
};

/// Rank of the group generated by the generators (Krull dimension of k[S]).
int semigroup_dimension(const SemigroupSpec& spec);

/// gcd of the generator degrees, which is the gcd of all nonzero semigroup degrees.
long semigroup_degree_gcd(const SemigroupSpec& spec);

bool is_prime(long p);

/// All semigroup elements of degree <= max_degree, bucketed by degree.
///
/// Points are packed into 64-bit keys (one bit field per coordinate, sized
/// from max_degree) so that each degree layer is a sorted key vector and
/// membership is a binary search. Built by a degree-ordered frontier: layer D
/// is the deduplicated union of (layer D - deg g) + g over the generators.
/// Immutable after construction.
class Semigroup {
 public:
  /// Throws ResourceError when more than `point_cap` points would be produced
  /// or when the coordinates cannot be packed into 64 bits.
  Semigroup(SemigroupSpec spec, long max_degree, std::size_t point_cap = kDefaultPointCap);

  [[nodiscard]] const SemigroupSpec& spec() const { return spec_; }
  [[nodiscard]] long max_degree() const { return max_degree_; }
  [[nodiscard]] std::size_t size() const { return size_; }

  /// Membership for any integer vector; throws ResourceError if its degree
  /// exceeds max_degree (the answer would be unknown).
  [[nodiscard]] bool contains(std::span<const long> v) const;
  [[nodiscard]] std::span<const std::uint64_t> layer(long degree) const;
  [[nodiscard]] std::size_t count_in_degree(long degree) const { return layer(degree).size(); }

  [[nodiscard]] std::uint64_t pack(std::span<const long> v) const;
  void unpack(std::uint64_t key, std::span<long> out) const;
  [[nodiscard]] Point unpack(std::uint64_t key) const;
  /// Coordinate i of a packed key.
  [[nodiscard]] long field(std::uint64_t key, int i) const {
    return static_cast<long>((key >> shifts_[static_cast<std::size_t>(i)]) & masks_[static_cast<std::size_t>(i)]);
  }
  /// Largest value coordinate i can take below max_degree.
  [[nodiscard]] long coordinate_bound(int i) const { return bounds_[static_cast<std::size_t>(i)]; }

  [[nodiscard]] std::vector<Point> points_of_degree(long degree) const;

 private:
  SemigroupSpec spec_;
  long max_degree_;
  std::size_t size_ = 0;
  std::vector<long> bounds_;
  std::vector<unsigned> shifts_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::uint64_t>> layers_;
};

}  // namespace hkd
