#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hkd/betti.hpp"
#include "hkd/bivariate.hpp"
#include "hkd/combinators.hpp"
#include "hkd/lattice.hpp"

namespace hkd {

enum class AdeFamily { A, D, E6, E7, E8 };

std::string to_string(AdeFamily family);
/// Accepts A, D, E6, E7, E8 (case-insensitive). ParseError otherwise.
AdeFamily parse_family(std::string_view text);

/// Invariant ring S = k[x1, x2]^G = k[h1, h2, h3] of a finite group G, with
/// the Hilbert-Burch data of (h1, h2, h3) k[x1, x2] and the values printed
/// alongside it in the literature.
struct AdeEntry {
  AdeFamily family = AdeFamily::A;
  std::optional<int> n;
  std::string characteristic_rule;
  std::vector<long> generator_degrees;  // deg h1, deg h2, deg h3
  long relation_degree = 0;
  BettiTable betti{2, {}};
  std::vector<BivariatePoly> generators;
  std::optional<HbMatrix> hb_matrix;
  std::optional<Rational> printed_ehk;
  std::optional<PiecewisePoly> printed_table;
  long printed_group_order = 0;
};

/// n >= 2 is required for A and D and forbidden for E. DomainError otherwise.
AdeEntry ade_entry(AdeFamily family, std::optional<int> n = std::nullopt);

/// DomainError when p is not prime or violates the characteristic rule of the entry.
void check_characteristic(const AdeEntry& entry, long p);

/// gcd of the generator degrees.
long catalog_l0(const AdeEntry& entry);
/// prod deg h_i / relation degree; must be an integer.
long catalog_rank(const AdeEntry& entry);

enum class Agreement { agree, discrepancy, absent };
std::string to_string(Agreement a);

struct CatalogVerdict {
  Rational ehk;
  long rank = 0;
  long l0 = 1;
  /// Whether e_HK = 2 - 1/rank.
  bool two_minus_inverse_rank = false;
  Agreement ehk_vs_printed = Agreement::absent;
  Agreement table_vs_printed = Agreement::absent;
  std::optional<SupDistance> table_distance;
  Agreement rank_vs_group_order = Agreement::absent;
  std::vector<std::string> notes;

  [[nodiscard]] bool agrees() const;
};

struct CatalogResult {
  AdeEntry entry;
  DensityPair pair;
  CatalogVerdict verdict;
};

/// Density of (S, m_S) from the Betti table (k[x1, x2] closed form, then
/// rescaled by l0 and the rank) and its comparison with the printed values.
CatalogResult catalog_density(const AdeEntry& entry);

/// Semigroup <(1,1), (n,0), (0,n)> in Z^2 with weights (1,1) together with its
/// maximal ideal: the lattice presentation of the A_n invariant ring.
LatticeProblem a_family_lattice(int n, long p, std::size_t point_cap = kDefaultPointCap);

struct CrosscheckRow {
  int level = 0;
  long q = 0;
  SupDistance to_derived;
  std::optional<SupDistance> to_printed;
  Rational integral;
};

/// Lattice approximants g_n of the A family against the derived table and the printed one.
std::vector<CrosscheckRow> catalog_lattice_crosscheck(const AdeEntry& entry, std::span<const int> levels, long p,
                                                      std::size_t point_cap = kDefaultPointCap);

struct ColengthCrosscheck {
  long q = 0;
  long max_degree = 0;
  long mismatches = 0;
  std::optional<long> first_mismatch;
};

/// For the A family: colengths of (x1 x2, x1^n, x2^n)^[q] in k[x1, x2] by
/// lattice counting against sum_j B(j) l(R_{m - jq}), for all m <= m~ q with
/// m~ the support bound of the monomial ideal.
ColengthCrosscheck catalog_colength_crosscheck(const AdeEntry& entry, long q, long p);

/// I_2(psi) against (h1, h2, h3). DomainError when no matrix is on record.
MinorCheck catalog_minor_check(const AdeEntry& entry);

}  // namespace hkd
