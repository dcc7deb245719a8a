#include "hkd/betti.hpp"

#include <stdexcept>
#include <string>

namespace hkd {

BettiTable::BettiTable(int d, const std::vector<BettiEntry>& entries) : d_(d) {
  if (d < 1) throw ValidationError("Betti table length must be at least 1");
  entries_[{0, 0}] = 1;
  bool explicit_unit = false;
  for (const auto& e : entries) {
    if (e.i < 0 || e.i > d) {
      throw ValidationError("Betti entry with homological index " + std::to_string(e.i) + " outside [0, " +
                            std::to_string(d) + "]");
    }
    if (e.j < 0) throw ValidationError("Betti entry with negative internal degree");
    if (e.count < 0) throw ValidationError("Betti numbers must be non-negative");
    if (e.i == 0) {
      if (e.j != 0 || e.count != 1 || explicit_unit) {
        throw ValidationError("the only homological-degree-0 Betti number is beta_{0,0} = 1");
      }
      explicit_unit = true;
      continue;
    }
    if (e.count == 0) continue;
    if (!entries_.emplace(std::make_pair(e.i, e.j), e.count).second) {
      throw ValidationError("duplicate Betti entry (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    }
    max_degree_ = std::max(max_degree_, e.j);
  }
}

long BettiTable::beta(int i, long j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::map<long, long> b_numbers(const BettiTable& t) {
  std::map<long, long> out;
  for (const auto& [key, count] : t.entries()) out[key.second] += (key.first % 2 == 0) ? count : -count;
  return out;
}

long b_number(const BettiTable& t, long j) {
  long b = 0;
  for (int i = 0; i <= t.length(); ++i) b += (i % 2 == 0 ? 1 : -1) * t.beta(i, j);
  return b;
}

Polynomial betti_residual(const BettiTable& t) {
  const auto exponent = static_cast<unsigned>(t.length() - 1);
  Polynomial residual;
  for (const auto& [j, b] : b_numbers(t)) residual += Polynomial::shifted_power(Rational(j), exponent) * Rational(b);
  return residual;
}

BettiViolation::BettiViolation(Polynomial residual)
    : ValidationError("Betti table fails the vanishing identity; residual " + residual.str()),
      residual_(std::move(residual)) {}

void validate_betti(const BettiTable& t) {
  Polynomial residual = betti_residual(t);
  if (!residual.is_zero()) throw BettiViolation(std::move(residual));
}

BigInt colength_by_degree(const BettiTable& t, const HilbertFunction& h, long q, long m) {
  BigInt total = 0;
  for (const auto& [j, b] : b_numbers(t)) total += BigInt(b) * h(m - j * q);
  if (total < 0) {
    throw ValidationError("negative colength " + total.get_str() + " in degree " + std::to_string(m) +
                          ": Betti table and Hilbert function are inconsistent");
  }
  return total;
}

namespace {

void check_density_args(const BettiTable& t, const Rational& e0, int d) {
  if (d < 2) throw DomainError("density functions need dimension >= 2");
  if (d != t.length()) {
    throw ValidationError("dimension " + std::to_string(d) + " differs from resolution length " +
                          std::to_string(t.length()));
  }
  if (e0.sign() <= 0) throw DomainError("Hilbert-Samuel coefficient must be positive");
  validate_betti(t);
}

}  // namespace

PiecewisePoly closed_form_density(const BettiTable& t, const Rational& e0, int d) {
  check_density_args(t, e0, d);
  const auto exponent = static_cast<unsigned>(d - 1);
  const long l = t.max_degree();
  std::vector<Rational> bps;
  std::vector<Polynomial> pieces;
  Polynomial running;
  for (long i = 0; i < l; ++i) {
    const long b = b_number(t, i);
    if (b != 0) running += Polynomial::shifted_power(Rational(i), exponent) * Rational(b);
    bps.emplace_back(i);
    pieces.push_back(running * e0);
  }
  bps.emplace_back(l);
  PiecewisePoly f(std::move(bps), std::move(pieces));
  if (!is_continuous(f)) throw std::logic_error("closed-form density is discontinuous despite a valid Betti table");
  return f;
}

Rational ehk_closed_form(const BettiTable& t, const Rational& e0, int d) {
  check_density_args(t, e0, d);
  const long l = t.max_degree();
  Rational sum;
  for (const auto& [j, b] : b_numbers(t)) sum += Rational(b) * pow(Rational(l - j), static_cast<unsigned>(d));
  const Rational ehk = e0 * sum / Rational(d);
  if (ehk != pw_integrate(closed_form_density(t, e0, d))) {
    throw std::logic_error("closed-form e_HK disagrees with the integral of the density");
  }
  return ehk;
}

}  // namespace hkd
