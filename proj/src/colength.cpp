#include "hkd/colength.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

constexpr int kMaxRank = 32;

// One Frobenius-scaled ideal generator, pre-packed when it fits the key layout.
struct ScaledGenerator {
  Point coords;
  long degree = 0;
  std::uint64_t key = 0;
  bool packable = false;
};

class ColengthKernel {
 public:
  ColengthKernel(const Semigroup& semigroup, const MonomialIdealSpec& ideal, long q) : semigroup_(semigroup) {
    const auto& spec = semigroup.spec();
    if (spec.rank > kMaxRank) throw DomainError("semigroup rank above " + std::to_string(kMaxRank));
    for (const auto& a : ideal.generators) {
      ScaledGenerator g;
      g.coords.resize(a.size());
      std::transform(a.begin(), a.end(), g.coords.begin(), [q](long c) { return c * q; });
      g.degree = spec.degree(g.coords);
      g.packable = g.degree <= semigroup.max_degree();
      if (g.packable) g.key = semigroup.pack(g.coords);
      scaled_.push_back(std::move(g));
    }
  }

  std::uint64_t count(long m) const {
    const auto layer = semigroup_.layer(m);
    const int rank = semigroup_.spec().rank;
    std::array<long, kMaxRank> coords{};
    std::uint64_t survivors = 0;
    for (std::uint64_t key : layer) {
      semigroup_.unpack(key, std::span<long>(coords.data(), static_cast<std::size_t>(rank)));
      bool killed = false;
      for (const auto& g : scaled_) {
        if (!g.packable || g.degree > m) continue;
        bool dominates = true;
        for (int i = 0; i < rank; ++i) {
          if (coords[static_cast<std::size_t>(i)] < g.coords[static_cast<std::size_t>(i)]) {
            dominates = false;
            break;
          }
        }
        if (!dominates) continue;
        // fieldwise difference is non-negative, so plain subtraction of keys is exact
        const auto rest = semigroup_.layer(m - g.degree);
        if (std::binary_search(rest.begin(), rest.end(), key - g.key)) {
          killed = true;
          break;
        }
      }
      if (!killed) ++survivors;
    }
    return survivors;
  }

 private:
  const Semigroup& semigroup_;
  std::vector<ScaledGenerator> scaled_;
};

void check_range(const Semigroup& semigroup, long max_m) {
  if (max_m > semigroup.max_degree()) {
    throw ResourceError("colength requested up to degree " + std::to_string(max_m) + " but semigroup enumerated to " +
                        std::to_string(semigroup.max_degree()));
  }
}

}  // namespace

void validate_ideal(const Semigroup& semigroup, const MonomialIdealSpec& ideal) {
  if (ideal.generators.empty()) throw ValidationError("monomial ideal needs at least one generator");
  for (const auto& a : ideal.generators) {
    if (static_cast<int>(a.size()) != semigroup.spec().rank) {
      throw ValidationError("ideal generator has wrong dimension");
    }
    if (!semigroup.contains(a)) throw ValidationError("ideal generator is not an element of the semigroup");
  }
}

std::uint64_t monomial_colength_by_degree(const Semigroup& semigroup, const MonomialIdealSpec& ideal, long q,
                                          long m) {
  if (m < 0) return 0;
  check_range(semigroup, m);
  return ColengthKernel(semigroup, ideal, q).count(m);
}

std::vector<std::uint64_t> colengths_serial(const Semigroup& semigroup, const MonomialIdealSpec& ideal, long q,
                                            long max_m) {
  check_range(semigroup, max_m);
  const ColengthKernel kernel(semigroup, ideal, q);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(max_m + 1));
  for (long m = 0; m <= max_m; ++m) out[static_cast<std::size_t>(m)] = kernel.count(m);
  return out;
}

std::vector<std::uint64_t> colengths_parallel(const Semigroup& semigroup, const MonomialIdealSpec& ideal, long q,
                                              long max_m) {
  check_range(semigroup, max_m);
  const ColengthKernel kernel(semigroup, ideal, q);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(max_m + 1));
  // layer sizes grow with m, so hand out degrees dynamically
#pragma omp parallel for schedule(dynamic, 1)
  for (long m = 0; m <= max_m; ++m) out[static_cast<std::size_t>(m)] = kernel.count(m);
  return out;
}

}  // namespace hkd
