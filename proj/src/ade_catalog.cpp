#include "hkd/ade_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hkd/errors.hpp"
#include "hkd/graded_ring.hpp"

namespace hkd {

namespace {

using T = BivariatePoly;

T mono(const QuadNumber& c, int a, int b) { return T::term(c, a, b); }

BettiTable hb_betti(const std::vector<long>& gen_degrees, long syz_degree) {
  std::map<long, long> first;
  for (long e : gen_degrees) first[e] += 1;
  std::vector<BettiEntry> entries;
  for (const auto& [j, c] : first) entries.push_back({1, j, c});
  entries.push_back({2, syz_degree, 2});
  return BettiTable(2, entries);
}

PiecewisePoly table(std::vector<Rational> bps, std::vector<Polynomial> pieces) {
  return PiecewisePoly(std::move(bps), std::move(pieces));
}

AdeEntry a_entry(int n) {
  AdeEntry e;
  e.family = AdeFamily::A;
  e.n = n;
  e.characteristic_rule = "p does not divide n";
  e.generator_degrees = {2, n, n};
  e.relation_degree = 2L * n;
  e.betti = hb_betti(e.generator_degrees, n + 1);
  e.generators = {mono(1, 1, 1), mono(1, n, 0), mono(1, 0, n)};
  HbMatrix m;
  m[0] = {mono(1, n - 1, 0), mono(-1, 0, 1), T()};
  m[1] = {mono(1, 0, n - 1), T(), mono(-1, 1, 0)};
  e.hb_matrix = m;
  e.printed_group_order = n;
  const Rational den(n + 1);
  if (n % 2 == 0) {
    // [1, n/2) is empty for n = 2
    std::vector<Rational> bps{0, 1};
    std::vector<Polynomial> pieces{Polynomial({0, Rational(4) / den})};
    if (n > 2) {
      bps.emplace_back(n, 2);
      pieces.push_back(Polynomial({Rational(4) / den}));
    }
    bps.emplace_back(n + 1, 2);
    pieces.push_back(Polynomial({Rational(4 + 4L * n) / den, Rational(-8) / den}));
    e.printed_table = table(bps, pieces);
  } else {
    e.printed_table = table({0, 2, n, n + 1}, {Polynomial({0, Rational(1) / den}), Polynomial({Rational(2) / den}),
                                                Polynomial({Rational(2 + 2L * n) / den, Rational(-2) / den})});
  }
  return e;
}

AdeEntry d_entry(int n) {
  AdeEntry e;
  e.family = AdeFamily::D;
  e.n = n;
  e.characteristic_rule = "p >= 3 and p does not divide n";
  e.generator_degrees = {4, 2L * n, 2L * n + 2};
  e.relation_degree = 4L * n + 4;
  e.betti = hb_betti(e.generator_degrees, 2L * n + 3);
  const int sign = n % 2 == 0 ? 1 : -1;
  e.generators = {mono(-2, 2, 2), mono(1, 2 * n, 0) + mono(sign, 0, 2 * n),
                  mono(1, 2 * n + 1, 1) - mono(sign, 1, 2 * n + 1)};
  e.printed_group_order = 4L * n;
  e.printed_ehk = Rational(2) - Rational(1, 4L * n);
  if (n % 2 == 0) {
    HbMatrix m;
    m[0] = {mono(-2, n - 1, 0), mono(1, 1, 2), mono(1, 0, 1)};
    m[1] = {mono(-2, 0, n - 1), mono(-1, 2, 1), mono(1, 1, 0)};
    e.hb_matrix = m;
    if (n > 2) {
      const Rational den(n - 2);
      e.printed_table = table({0, 2, n, n + 1, Rational(2L * n + 3, 2)},
                              {Polynomial({0, Rational(1) / den}), Polynomial({Rational(2) / den}),
                               Polynomial({Rational(n + 2) / den, Rational(-1) / den}),
                               Polynomial({Rational(2L * n + 3) / den, Rational(-2) / den})});
    }
  }
  return e;
}

AdeEntry e6_entry() {
  AdeEntry e;
  e.family = AdeFamily::E6;
  e.characteristic_rule = "p >= 5";
  e.generator_degrees = {6, 4, 4};
  e.relation_degree = 12;
  e.betti = hb_betti(e.generator_degrees, 7);
  const QuadNumber a = QuadNumber(0, 2, -3);  // 2 sqrt(-3)
  const QuadNumber half_a = QuadNumber(0, 1, -3);
  e.generators = {mono(1, 5, 1) - mono(1, 1, 5), mono(1, 4, 0) + mono(a, 2, 2) + mono(1, 0, 4),
                  mono(1, 4, 0) - mono(a, 2, 2) + mono(1, 0, 4)};
  HbMatrix m;
  m[0] = {mono(1, 1, 0), mono(-half_a, 2, 1) - mono(1, 0, 3), mono(half_a, 2, 1) - mono(1, 0, 3)};
  m[1] = {mono(1, 0, 1), mono(1, 3, 0) + mono(half_a, 1, 2), mono(1, 3, 0) - mono(half_a, 1, 2)};
  e.hb_matrix = m;
  e.printed_group_order = 24;
  e.printed_table = table({0, 2, 3, Rational(7, 2)}, {Polynomial({0, Rational(1, 6)}), Polynomial({Rational(4, 6), Rational(-1, 6)}),
                                                      Polynomial({Rational(7, 6), Rational(-2, 6)})});
  return e;
}

AdeEntry e7_entry() {
  AdeEntry e;
  e.family = AdeFamily::E7;
  e.characteristic_rule = "p >= 5";
  e.generator_degrees = {6, 8, 12};
  e.relation_degree = 24;
  e.betti = hb_betti(e.generator_degrees, 13);
  e.generators = {mono(1, 5, 1) - mono(1, 1, 5), mono(1, 8, 0) + mono(14, 4, 4) + mono(1, 0, 8),
                  mono(1, 12, 0) - mono(33, 8, 4) - mono(33, 4, 8) + mono(1, 0, 12)};
  HbMatrix m;
  m[0] = {mono(-7, 4, 3) - mono(1, 0, 7), mono(1, 5, 0), mono(1, 1, 0)};
  m[1] = {mono(7, 3, 4) + mono(1, 7, 0), mono(1, 0, 5), mono(1, 0, 1)};
  e.hb_matrix = m;
  e.printed_group_order = 24;
  e.printed_ehk = Rational(2) - Rational(1, 24);
  e.printed_table = table({0, 6, 8, 12, 13}, {Polynomial({0, Rational(1, 48)}), Polynomial({Rational(6, 48)}),
                                              Polynomial({Rational(14, 48), Rational(-1, 48)}),
                                              Polynomial({Rational(26, 48), Rational(-2, 48)})});
  return e;
}

AdeEntry e8_entry() {
  AdeEntry e;
  e.family = AdeFamily::E8;
  e.characteristic_rule = "p >= 7";
  e.generator_degrees = {12, 30, 20};
  e.relation_degree = 60;
  e.betti = hb_betti(e.generator_degrees, 31);
  e.generators = {
      mono(1, 11, 1) + mono(11, 6, 6) - mono(1, 1, 11),
      mono(1, 30, 0) + mono(1, 0, 30) + mono(522, 25, 5) - mono(522, 5, 25) - mono(10005, 20, 10) - mono(10005, 10, 20),
      mono(-1, 20, 0) - mono(1, 0, 20) + mono(228, 15, 5) - mono(228, 5, 15) - mono(494, 10, 10)};
  const Rational eleven_halves(11, 2);
  const QuadNumber a = 228;
  const QuadNumber half_b = 247;
  HbMatrix m;
  m[0] = {mono(1, 1, 0), mono(-1, 11, 0) - mono(eleven_halves, 6, 5),
          mono(1, 0, 19) + mono(a, 5, 14) + mono(half_b, 10, 9)};
  m[1] = {mono(1, 0, 1), mono(-1, 0, 11) + mono(eleven_halves, 5, 6),
          mono(-1, 19, 0) + mono(a, 14, 5) - mono(half_b, 9, 10)};
  e.hb_matrix = m;
  e.printed_group_order = 120;
  e.printed_ehk = Rational(2) - Rational(1, 120);
  e.printed_table = table({0, 6, 10, 15, Rational(31, 2)},
                          {Polynomial({0, Rational(1, 30)}), Polynomial({Rational(6, 30)}),
                           Polynomial({Rational(16, 30), Rational(-1, 30)}), Polynomial({Rational(31, 30), Rational(-2, 30)})});
  return e;
}

Agreement compare(const Rational& derived, const std::optional<Rational>& printed) {
  if (!printed) return Agreement::absent;
  return derived == *printed ? Agreement::agree : Agreement::discrepancy;
}

}  // namespace

std::string to_string(AdeFamily family) {
  switch (family) {
    case AdeFamily::A: return "A";
    case AdeFamily::D: return "D";
    case AdeFamily::E6: return "E6";
    case AdeFamily::E7: return "E7";
    case AdeFamily::E8: return "E8";
  }
  return "?";
}

AdeFamily parse_family(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  if (up == "A") return AdeFamily::A;
  if (up == "D") return AdeFamily::D;
  if (up == "E6") return AdeFamily::E6;
  if (up == "E7") return AdeFamily::E7;
  if (up == "E8") return AdeFamily::E8;
  throw ParseError("unknown family '" + std::string(text) + "' (expected A, D, E6, E7 or E8)");
}

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::agree: return "agree";
    case Agreement::discrepancy: return "discrepancy";
    case Agreement::absent: return "absent";
  }
  return "?";
}

AdeEntry ade_entry(AdeFamily family, std::optional<int> n) {
  const bool parametric = family == AdeFamily::A || family == AdeFamily::D;
  if (parametric && (!n || *n < 2)) throw DomainError(to_string(family) + "_n needs n >= 2");
  if (!parametric && n) throw DomainError(to_string(family) + " takes no parameter n");
  switch (family) {
    case AdeFamily::A: return a_entry(*n);
    case AdeFamily::D: return d_entry(*n);
    case AdeFamily::E6: return e6_entry();
    case AdeFamily::E7: return e7_entry();
    case AdeFamily::E8: return e8_entry();
  }
  throw DomainError("unknown family");
}

void check_characteristic(const AdeEntry& entry, long p) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  bool ok = true;
  switch (entry.family) {
    case AdeFamily::A: ok = *entry.n % p != 0; break;
    case AdeFamily::D: ok = p >= 3 && *entry.n % p != 0; break;
    case AdeFamily::E6:
    case AdeFamily::E7: ok = p >= 5; break;
    case AdeFamily::E8: ok = p >= 7; break;
  }
  if (!ok) {
    throw DomainError("characteristic " + std::to_string(p) + " not allowed for " + to_string(entry.family) +
                      " (" + entry.characteristic_rule + ")");
  }
}

long catalog_l0(const AdeEntry& entry) {
  long g = 0;
  for (long e : entry.generator_degrees) g = std::gcd(g, e);
  return g;
}

long catalog_rank(const AdeEntry& entry) {
  const Rational r = rank_from_degrees(entry.generator_degrees, {entry.relation_degree});
  if (!r.is_integer()) throw ValidationError("degree data give a non-integral rank " + r.str());
  return r.numerator().get_si();
}

bool CatalogVerdict::agrees() const {
  return ehk_vs_printed != Agreement::discrepancy && table_vs_printed != Agreement::discrepancy &&
         rank_vs_group_order != Agreement::discrepancy;
}

CatalogResult catalog_density(const AdeEntry& entry) {
  const PiecewisePoly ambient = closed_form_density(entry.betti, Rational(1), 2);
  const long l0 = catalog_l0(entry);
  const long rank = catalog_rank(entry);

  CatalogResult out{entry, {}, {}};
  out.pair.d = 2;
  out.pair.f = rescale_density(ambient, l0, rank);
  const auto spec = GradedRingSpec::complete_intersection(entry.generator_degrees, {entry.relation_degree});
  out.pair.F = hilbert_density(spec);

  auto& v = out.verdict;
  v.rank = rank;
  v.l0 = l0;
  v.ehk = pw_integrate(out.pair.f);
  const Rational closed = ehk_closed_form(entry.betti, Rational(1), 2) / Rational(rank);
  if (closed != v.ehk) throw std::logic_error("catalog e_HK disagrees with its closed form");
  v.two_minus_inverse_rank = v.ehk == Rational(2) - Rational(1, rank);
  v.ehk_vs_printed = compare(v.ehk, entry.printed_ehk);
  v.rank_vs_group_order = rank == entry.printed_group_order ? Agreement::agree : Agreement::discrepancy;
  if (v.rank_vs_group_order == Agreement::discrepancy) {
    v.notes.push_back("rank from degrees is " + std::to_string(rank) + ", printed |G| is " +
                      std::to_string(entry.printed_group_order));
  }
  if (entry.printed_table) {
    v.table_distance = pw_sup_distance(out.pair.f, *entry.printed_table);
    v.table_vs_printed = out.pair.f == *entry.printed_table ? Agreement::agree : Agreement::discrepancy;
    if (v.table_vs_printed == Agreement::discrepancy) {
      v.notes.push_back("printed table integrates to " + pw_integrate(*entry.printed_table).str() +
                        ", derived density to " + v.ehk.str());
    }
  }
  return out;
}

LatticeProblem a_family_lattice(int n, long p, std::size_t point_cap) {
  SemigroupSpec spec;
  spec.rank = 2;
  spec.generators = {{1, 1}, {n, 0}, {0, n}};
  spec.weights = {1, 1};
  spec.p = p;
  MonomialIdealSpec ideal{spec.generators};
  return LatticeProblem(spec, ideal, point_cap);
}

std::vector<CrosscheckRow> catalog_lattice_crosscheck(const AdeEntry& entry, std::span<const int> levels, long p,
                                                      std::size_t point_cap) {
  if (entry.family != AdeFamily::A) {
    throw DomainError("lattice cross-check needs a monomial presentation (A family only)");
  }
  check_characteristic(entry, p);
  const auto derived = catalog_density(entry).pair.f;
  const auto problem = a_family_lattice(*entry.n, p, point_cap);
  std::vector<CrosscheckRow> rows;
  for (int level : levels) {
    const auto approx = build_approximant(problem, level);
    CrosscheckRow row;
    row.level = level;
    row.q = approx.q;
    row.to_derived = pw_sup_distance(approx.g_n, derived);
    if (entry.printed_table) row.to_printed = pw_sup_distance(approx.g_n, *entry.printed_table);
    row.integral = pw_integrate(approx.f_n);
    rows.push_back(std::move(row));
  }
  return rows;
}

ColengthCrosscheck catalog_colength_crosscheck(const AdeEntry& entry, long q, long p) {
  if (entry.family != AdeFamily::A) {
    throw DomainError("colength cross-check needs a monomial presentation (A family only)");
  }
  check_characteristic(entry, p);
  const int n = *entry.n;
  SemigroupSpec plane;
  plane.rank = 2;
  plane.generators = {{1, 0}, {0, 1}};
  plane.weights = {1, 1};
  plane.p = p;
  MonomialIdealSpec ideal{{{1, 1}, {n, 0}, {0, n}}};

  ColengthCrosscheck out;
  out.q = q;
  out.max_degree = (support_bound(plane, ideal).m_tilde * Rational(q)).floor().get_si();
  Semigroup s(plane, out.max_degree);
  validate_ideal(s, ideal);
  const auto counted = colengths_parallel(s, ideal, q, out.max_degree);
  const HilbertFunction h(GradedRingSpec::polynomial_ring(2));
  for (long m = 0; m <= out.max_degree; ++m) {
    if (BigInt(static_cast<unsigned long>(counted[m])) != colength_by_degree(entry.betti, h, q, m)) {
      ++out.mismatches;
      if (!out.first_mismatch) out.first_mismatch = m;
    }
  }
  return out;
}

MinorCheck catalog_minor_check(const AdeEntry& entry) {
  if (!entry.hb_matrix) throw DomainError("no Hilbert-Burch matrix on record for this entry");
  return compare_minors(hilbert_burch_minors(*entry.hb_matrix), entry.generators);
}

}  // namespace hkd
