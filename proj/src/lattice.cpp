#include "hkd/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

constexpr std::size_t kMaxWords = 2'000'000;

long ipow(long base, int exp) {
  long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (1L << 62) / base) throw ResourceError("q = p^n overflows 64-bit integers");
    out *= base;
  }
  return out;
}

bool in_ideal(const Semigroup& semigroup, const MonomialIdealSpec& ideal, const Point& v) {
  Point rest(v.size());
  for (const auto& a : ideal.generators) {
    std::transform(v.begin(), v.end(), a.begin(), rest.begin(), std::minus<>());
    if (semigroup.contains(rest)) return true;
  }
  return false;
}

}  // namespace

SupportBound support_bound(const SemigroupSpec& spec, const MonomialIdealSpec& ideal, int max_power) {
  spec.validate();
  if (ideal.generators.empty()) throw ValidationError("monomial ideal needs at least one generator");
  long m_mu = 0;
  for (const auto& g : spec.generators) m_mu = std::max(m_mu, spec.degree(g));
  const long n0 = semigroup_degree_gcd(spec);

  {
    long top = 0;
    for (const auto& a : ideal.generators) top = std::max(top, spec.degree(a));
    validate_ideal(Semigroup(spec, top), ideal);
  }

  // words = generators of J^l, i.e. all sums of l semigroup generators
  std::set<Point> words{Point(static_cast<std::size_t>(spec.rank), 0)};
  for (int l = 1; l <= max_power; ++l) {
    std::set<Point> next;
    for (const auto& w : words) {
      for (const auto& g : spec.generators) {
        Point v(w);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += g[i];
        next.insert(std::move(v));
      }
    }
    if (next.size() > kMaxWords) throw ResourceError("support bound search exceeded the word cap");
    words = std::move(next);
    long top = 0;
    for (const auto& w : words) top = std::max(top, spec.degree(w));
    const Semigroup semigroup(spec, top);
    const bool contained = std::all_of(words.begin(), words.end(),
                                       [&](const Point& w) { return in_ideal(semigroup, ideal, w); });
    if (contained) {
      const auto s = static_cast<int>(ideal.generators.size());
      return {Rational(m_mu * l * s, n0), m_mu, l, s};
    }
  }
  throw ValidationError("no power J^l with l <= " + std::to_string(max_power) +
                        " lies in the ideal; the ideal does not have finite colength");
}

LatticeProblem::LatticeProblem(SemigroupSpec spec, MonomialIdealSpec ideal, std::size_t point_cap)
    : spec_(std::move(spec)),
      ideal_(std::move(ideal)),
      point_cap_(point_cap),
      n0_(semigroup_degree_gcd(spec_)),
      dimension_(semigroup_dimension(spec_)),
      bound_(support_bound(spec_, ideal_)) {
  if (dimension_ < 2) throw DomainError("density functions need dimension >= 2");
}

long LatticeProblem::q_for_level(int level) const {
  if (level < 1) throw DomainError("approximant level must be at least 1");
  return ipow(spec_.p, level);
}

long LatticeProblem::cells_for_level(int level) const {
  const Rational reach = bound_.m_tilde * Rational(q_for_level(level));
  return reach.ceil().get_si();
}

long LatticeProblem::degree_for_level(int level) const { return (cells_for_level(level) + 1) * n0_ - 1; }

std::shared_ptr<const Semigroup> LatticeProblem::semigroup(long max_degree) const {
  const std::lock_guard lock(mutex_);
  if (!cache_ || cache_->max_degree() < max_degree) {
    cache_ = std::make_shared<const Semigroup>(spec_, max_degree, point_cap_);
  }
  return cache_;
}

std::vector<std::pair<Point, long>> enumerate_semigroup(const SemigroupSpec& spec, long max_degree,
                                                        std::size_t point_cap) {
  const Semigroup semigroup(spec, max_degree, point_cap);
  std::vector<std::pair<Point, long>> out;
  out.reserve(semigroup.size());
  for (long d = 0; d <= max_degree; ++d) {
    for (auto& p : semigroup.points_of_degree(d)) out.emplace_back(std::move(p), d);
  }
  return out;
}

DensityApproximant build_approximant(const LatticeProblem& problem, int level) {
  const long q = problem.q_for_level(level);
  const long cells = problem.cells_for_level(level);
  const long n0 = problem.n0();
  const auto semigroup = problem.semigroup(problem.degree_for_level(level));
  const auto colengths = colengths_parallel(*semigroup, problem.ideal(), q, problem.degree_for_level(level));

  const Rational scale = Rational(1) / pow(Rational(q), static_cast<unsigned>(problem.dimension() - 1));
  std::vector<Rational> values(static_cast<std::size_t>(cells) + 1);
  for (long m = 0; m <= cells; ++m) {
    std::uint64_t window = 0;
    for (long j = 0; j < n0; ++j) window += colengths[static_cast<std::size_t>(m * n0 + j)];
    values[static_cast<std::size_t>(m)] = Rational(static_cast<long>(window)) * scale;
  }
  if (!values.back().is_zero()) {
    throw std::logic_error("colength nonzero beyond the support bound at level " + std::to_string(level));
  }

  const Rational qr(q);
  std::vector<Rational> bps;
  std::vector<Polynomial> steps;
  std::vector<Polynomial> ramps;
  for (long m = 0; m < cells; ++m) {
    const Rational& lo = values[static_cast<std::size_t>(m)];
    const Rational& hi = values[static_cast<std::size_t>(m + 1)];
    bps.push_back(Rational(m) / qr);
    steps.push_back(Polynomial::constant(lo));
    // lo + (hi - lo) * (q x - m)
    const Rational slope = (hi - lo) * qr;
    ramps.push_back(Polynomial({lo - (hi - lo) * Rational(m), slope}));
  }
  bps.push_back(Rational(cells) / qr);
  return {level, q, PiecewisePoly(bps, std::move(steps)), PiecewisePoly(bps, std::move(ramps))};
}

std::vector<ConvergenceRow> convergence_report(const LatticeProblem& problem, std::span<const int> levels,
                                               const PiecewisePoly* reference) {
  if (levels.empty()) throw DomainError("convergence report needs at least one level");
  std::vector<ConvergenceRow> rows;
  for (int level : levels) {
    const auto approx = build_approximant(problem, level);
    ConvergenceRow row{level, approx.q, {}, pw_integrate(approx.f_n)};
    if (reference) {
      row.distance = pw_sup_distance(approx.g_n, *reference);
    } else {
      row.distance = pw_sup_distance(approx.g_n, build_approximant(problem, level + 1).g_n);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int max_feasible_level(const LatticeProblem& problem, int requested) {
  int best = 0;
  for (int level = 1; level <= requested; ++level) {
    try {
      (void)problem.semigroup(problem.degree_for_level(level));
    } catch (const ResourceError&) {
      break;
    }
    best = level;
  }
  return best;
}

}  // namespace hkd
