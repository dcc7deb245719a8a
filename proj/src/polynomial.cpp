#include "hkd/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hkd {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_power(const Rational& a, unsigned k) {
  // binomial expansion of (x - a)^k
  std::vector<Rational> v(k + 1);
  BigInt binom = 1;
  for (unsigned i = 0; i <= k; ++i) {
    // coefficient of x^i is C(k, i) * (-a)^(k - i)
    v[i] = Rational(binom) * pow(-a, k - i);
    binom = binom * (k - i) / (i + 1);
  }
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
  return Polynomial(std::move(v));
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
  const Polynomial anti = antiderivative();
  return anti(b) - anti(a);
}

Polynomial Polynomial::compose_scale(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  Rational power = 1;
  for (auto& coeff : v) {
    coeff *= power;
    power *= c;
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (k == 0) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hkd
