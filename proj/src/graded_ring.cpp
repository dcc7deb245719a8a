#include "hkd/graded_ring.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

long presentation_n0(const GradedRingSpec& spec);

long presentation_n0(const GradedRingSpec& spec) {
  return std::visit(overloaded{
                        [](const CompleteIntersection& ci) {
                          long g = 0;
                          for (long e : ci.generator_degrees) g = std::gcd(g, e);
                          return g;
                        },
                        [](const SemigroupSpec& s) { return semigroup_degree_gcd(s); },
                        [](const VeroneseOf& v) {
                          const long base = presentation_n0(*v.base);
                          return base / std::gcd(base, v.factor);
                        },
                    },
                    spec.presentation());
}

// Degree window (in the ring's own grading) over which n0 is cross-checked.
long verification_window(const GradedRingSpec& spec) {
  return std::visit(overloaded{
                        [](const CompleteIntersection& ci) {
                          const long s = std::accumulate(ci.generator_degrees.begin(), ci.generator_degrees.end(), 0L);
                          return std::max(16L, 4 * s);
                        },
                        [](const SemigroupSpec& sg) {
                          long s = 0;
                          for (const auto& g : sg.generators) s += sg.degree(g);
                          return std::max(16L, 4 * s);
                        },
                        [](const VeroneseOf& v) { return verification_window(*v.base); },
                    },
                    spec.presentation());
}

}  // namespace

GradedRingSpec GradedRingSpec::complete_intersection(std::vector<long> generator_degrees,
                                                     std::vector<long> relation_degrees) {
  if (generator_degrees.empty()) throw ValidationError("complete intersection needs generators");
  for (long e : generator_degrees) {
    if (e <= 0) throw ValidationError("generator degrees must be positive");
  }
  for (long c : relation_degrees) {
    if (c <= 0) throw ValidationError("relation degrees must be positive");
  }
  if (relation_degrees.size() >= generator_degrees.size()) {
    throw ValidationError("complete intersection needs fewer relations than generators");
  }
  return GradedRingSpec(CompleteIntersection{std::move(generator_degrees), std::move(relation_degrees)});
}

GradedRingSpec GradedRingSpec::semigroup(SemigroupSpec spec) {
  spec.validate();
  return GradedRingSpec(std::move(spec));
}

GradedRingSpec GradedRingSpec::polynomial_ring(int d) {
  return complete_intersection(std::vector<long>(static_cast<std::size_t>(d), 1), {});
}

int GradedRingSpec::dimension() const {
  return std::visit(overloaded{
                        [](const CompleteIntersection& ci) {
                          return static_cast<int>(ci.generator_degrees.size() - ci.relation_degrees.size());
                        },
                        [](const SemigroupSpec& s) { return semigroup_dimension(s); },
                        [](const VeroneseOf& v) { return v.base->dimension(); },
                    },
                    presentation_);
}

GradedRingSpec veronese(const GradedRingSpec& spec, long m) {
  if (m < 1) throw DomainError("Veronese factor must be positive");
  if (m == 1) return spec;
  // nested Veronese collapses to a single factor
  if (const auto* v = std::get_if<VeroneseOf>(&spec.presentation())) {
    return GradedRingSpec(VeroneseOf{v->base, v->factor * m});
  }
  return GradedRingSpec(VeroneseOf{std::make_shared<const GradedRingSpec>(spec), m});
}

struct HilbertFunction::State {
  explicit State(GradedRingSpec s) : spec(std::move(s)) {}

  GradedRingSpec spec;
  std::size_t point_cap;
  int dimension;
  long n0;
  std::unique_ptr<HilbertFunction> base;  // Veronese only

  std::mutex mutex;
  std::vector<BigInt> memo;  // l(R_0..R_N)

  void extend(long m) {
    const long target = std::max({m, 2 * static_cast<long>(memo.size()), 64L});
    if (const auto* ci = std::get_if<CompleteIntersection>(&spec.presentation())) {
      const auto n = static_cast<std::size_t>(target) + 1;
      std::vector<BigInt> series(n, 0);
      series[0] = 1;
      for (long c : ci->relation_degrees) {
        const auto step = static_cast<std::size_t>(c);
        for (std::size_t k = n; k-- > step;) series[k] -= series[k - step];
      }
      for (long e : ci->generator_degrees) {
        const auto step = static_cast<std::size_t>(e);
        for (std::size_t k = step; k < n; ++k) series[k] += series[k - step];
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (series[k] < 0) {
          throw ValidationError("Hilbert series of the complete intersection has a negative coefficient in degree " +
                                std::to_string(k) + "; relation degrees are inconsistent");
        }
      }
      memo = std::move(series);
    } else if (const auto* sg = std::get_if<SemigroupSpec>(&spec.presentation())) {
      const Semigroup semigroup(*sg, target, point_cap);
      memo.assign(static_cast<std::size_t>(target) + 1, 0);
      for (long k = 0; k <= target; ++k) memo[static_cast<std::size_t>(k)] = semigroup.count_in_degree(k);
    }
  }
};

HilbertFunction::HilbertFunction(GradedRingSpec spec, std::size_t point_cap)
    : state_(std::make_shared<State>(std::move(spec))) {
  state_->point_cap = point_cap;
  state_->dimension = state_->spec.dimension();
  state_->n0 = presentation_n0(state_->spec);
  if (const auto* v = std::get_if<VeroneseOf>(&state_->spec.presentation())) {
    state_->base = std::make_unique<HilbertFunction>(*v->base, point_cap);
  }
}

BigInt HilbertFunction::operator()(long m) const {
  if (m < 0) return 0;
  if (const auto* v = std::get_if<VeroneseOf>(&state_->spec.presentation())) return (*state_->base)(m * v->factor);
  const std::lock_guard lock(state_->mutex);
  if (static_cast<std::size_t>(m) >= state_->memo.size()) state_->extend(m);
  return state_->memo[static_cast<std::size_t>(m)];
}

int HilbertFunction::dimension() const { return state_->dimension; }
long HilbertFunction::n0() const { return state_->n0; }
const GradedRingSpec& HilbertFunction::spec() const { return state_->spec; }

BigInt hilbert_fn(const GradedRingSpec& spec, long m) { return HilbertFunction(spec)(m); }

long gcd_degrees(const GradedRingSpec& spec) {
  const HilbertFunction h(spec);
  const long claimed = h.n0();
  long observed = 0;
  const long window = verification_window(spec);
  for (long m = 1; m <= window; ++m) {
    if (h(m) != 0) observed = std::gcd(observed, m);
  }
  if (observed != claimed) {
    throw ValidationError("support gcd " + std::to_string(observed) + " observed on degrees <= " +
                          std::to_string(window) + " disagrees with generator gcd " + std::to_string(claimed));
  }
  return claimed;
}

namespace {

BigInt binomial(long n, long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt window_sum(const HilbertFunction& h, long M) {
  BigInt s = 0;
  const long n0 = h.n0();
  for (long j = 0; j < n0; ++j) s += h(M * n0 + j);
  return s;
}

// (d-1)-th forward difference with step M starting at M, normalized by (d-1)! M^{d-1}.
Rational fit_at_scale(const HilbertFunction& h, long M) {
  const long order = h.dimension() - 1;
  BigInt acc = 0;
  for (long k = 0; k <= order; ++k) {
    const BigInt term = binomial(order, k) * window_sum(h, (k + 1) * M);
    if ((order - k) % 2 == 0) acc += term;
    else acc -= term;
  }
  return Rational(acc) / (Rational(factorial(order)) * pow(Rational(M), static_cast<unsigned>(order)));
}

}  // namespace

Rational fit_density_coefficient(const HilbertFunction& h, const DensityFitOptions& options) {
  const long d = h.dimension();
  if (d < 2) throw DomainError("Hilbert density needs dimension >= 2, got " + std::to_string(d));
  for (long M = options.initial_scale; (2 * M * d + 1) * h.n0() <= options.max_degree; M *= 2) {
    const Rational coarse = fit_at_scale(h, M);
    const Rational fine = fit_at_scale(h, 2 * M);
    const Rational spread = abs(coarse - fine);
    if (fine.sign() > 0 && spread <= options.tolerance * fine) return simplest_between(fine - spread, fine + spread);
  }
  throw ResourceError("degree bound too small: density fit did not stabilize below degree " +
                      std::to_string(options.max_degree));
}

Rational hilbert_density_coefficient(const GradedRingSpec& spec, const DensityFitOptions& options) {
  const int d = spec.dimension();
  if (d < 2) throw DomainError("Hilbert density needs dimension >= 2, got " + std::to_string(d));
  if (const auto* ci = std::get_if<CompleteIntersection>(&spec.presentation())) {
    Rational e = pow(Rational(presentation_n0(spec)), static_cast<unsigned>(d));
    for (long c : ci->relation_degrees) e *= Rational(c);
    for (long g : ci->generator_degrees) e /= Rational(g);
    return e / Rational(factorial(d - 1));
  }
  return fit_density_coefficient(HilbertFunction(spec), options);
}

PiecewisePoly hilbert_density(const GradedRingSpec& spec, const DensityFitOptions& options) {
  const Rational e = hilbert_density_coefficient(spec, options);
  return PiecewisePoly::unbounded(Polynomial::monomial(e, static_cast<unsigned>(spec.dimension() - 1)));
}

}  // namespace hkd
