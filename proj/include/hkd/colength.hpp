#pragma once

#include <cstdint>
#include <vector>

#include "hkd/semigroup.hpp"

namespace hkd {

/// Monomial ideal I = (t^{a_1}, ..., t^{a_t}) of a semigroup ring k[S]; each
/// a_j is a lattice point of S. The Frobenius power I^[q] is generated by q * a_j.
struct MonomialIdealSpec {
  std::vector<Point> generators;

  friend bool operator==(const MonomialIdealSpec&, const MonomialIdealSpec&) = default;
};

/// Checks t >= 1, matching dimensions and membership of every a_j in S.
void validate_ideal(const Semigroup& semigroup, const MonomialIdealSpec& ideal);

/// #{ s in S : deg s = m, s - q*a_j not in S for every j } = l(k[S]/I^[q])_m.
std::uint64_t monomial_colength_by_degree(const Semigroup& semigroup, const MonomialIdealSpec& ideal, long q,
                                          long m);

// Degree-wise colengths l(k[S]/I^[q])_m for m = 0..max_m. Both variants
// return identical vectors; the serial one is the reference used by tests.
std::vector<std::uint64_t> colengths_serial(const Semigroup& semigroup, const MonomialIdealSpec& ideal, long q,
                                            long max_m);
std::vector<std::uint64_t> colengths_parallel(const Semigroup& semigroup, const MonomialIdealSpec& ideal, long q,
                                              long max_m);

}  // namespace hkd
