#include "hkd/bivariate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hkd/errors.hpp"

namespace hkd {

QuadNumber::QuadNumber(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  normalize();
}

void QuadNumber::join_radicand(const QuadNumber& o) {
  if (o.b_.is_zero()) return;
  if (b_.is_zero()) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_) throw DomainError("mixing quadratic extensions with radicands " + d_.str() + " and " + o.d_.str());
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  join_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  join_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  join_radicand(o);
  const Rational a = a_ * o.a_ + d_ * b_ * o.b_;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o) {
  join_radicand(o);
  const Rational norm = o.a_ * o.a_ - d_ * o.b_ * o.b_;
  if (norm.is_zero()) throw DomainError("division by zero (or a zero divisor) in quadratic extension");
  const QuadNumber conj(o.a_ / norm, -o.b_ / norm, d_);
  return *this *= conj;
}

std::string QuadNumber::str() const {
  if (b_.is_zero()) return a_.str();
  std::ostringstream os;
  os << "(";
  if (!a_.is_zero()) os << a_ << (b_.sign() < 0 ? " - " : " + ");
  else if (b_.sign() < 0) os << "-";
  os << abs(b_) << "*sqrt(" << d_ << "))";
  return os.str();
}

BivariatePoly::BivariatePoly(std::map<Exponent, QuadNumber> terms) : terms_(std::move(terms)) { prune(); }

BivariatePoly BivariatePoly::term(const QuadNumber& c, int a, int b) { return BivariatePoly({{{a, b}, c}}); }

void BivariatePoly::prune() { std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); }); }

bool BivariatePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int deg = terms_.begin()->first.first + terms_.begin()->first.second;
  return std::all_of(terms_.begin(), terms_.end(),
                     [deg](const auto& kv) { return kv.first.first + kv.first.second == deg; });
}

int BivariatePoly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.first + e.second);
  return deg;
}

QuadNumber BivariatePoly::coefficient(int a, int b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? QuadNumber() : it->second;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  prune();
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  prune();
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const QuadNumber& c) {
  for (auto& [e, coeff] : terms_) coeff *= c;
  prune();
  return *this;
}

BivariatePoly operator*(const BivariatePoly& x, const BivariatePoly& y) {
  std::map<BivariatePoly::Exponent, QuadNumber> out;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) out[{ex.first + ey.first, ex.second + ey.second}] += cx * cy;
  }
  return BivariatePoly(std::move(out));
}

std::string BivariatePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest x1 power first reads naturally for binary forms
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    if (it->first.first > 0) os << "*x1^" << it->first.first;
    if (it->first.second > 0) os << "*x2^" << it->first.second;
  }
  return os.str();
}

std::array<BivariatePoly, 3> hilbert_burch_minors(const HbMatrix& psi) {
  for (const auto& row : psi) {
    for (const auto& entry : row) {
      if (!entry.is_homogeneous()) throw ValidationError("Hilbert-Burch matrix entry is not homogeneous: " + entry.str());
    }
  }
  std::array<BivariatePoly, 3> minors;
  for (int k = 0; k < 3; ++k) {
    std::array<std::size_t, 2> cols{};
    std::size_t n = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      if (static_cast<int>(c) != k) cols[n++] = c;
    }
    BivariatePoly det = psi[0][cols[0]] * psi[1][cols[1]] - psi[0][cols[1]] * psi[1][cols[0]];
    if (k % 2 == 1) det = -det;
    if (!det.is_homogeneous()) {
      throw ValidationError("minor " + std::to_string(k) + " is not homogeneous; column degrees are inconsistent");
    }
    minors[static_cast<std::size_t>(k)] = std::move(det);
  }
  return minors;
}

std::optional<QuadNumber> proportionality(const BivariatePoly& p, const BivariatePoly& q) {
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  const auto& [exp, qc] = *q.terms().begin();
  const QuadNumber c = p.coefficient(exp.first, exp.second) / qc;
  if (c.is_zero()) return std::nullopt;
  if (q * c != p) return std::nullopt;
  return c;
}

namespace {

using Vec = std::vector<QuadNumber>;

// Echelon basis over the coefficient field; each vector has a distinct pivot.
class EchelonBasis {
 public:
  void reduce(Vec& v) const {
    for (const auto& [pivot, b] : rows_) {
      if (v[pivot].is_zero()) continue;
      const QuadNumber factor = v[pivot] / b[pivot];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= factor * b[k];
    }
  }

  void insert(Vec v) {
    reduce(v);
    const auto it = std::find_if(v.begin(), v.end(), [](const QuadNumber& c) { return !c.is_zero(); });
    if (it == v.end()) return;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    // keep earlier rows reduced at the new pivot so reduce() stays a single pass
    for (auto& [p, b] : rows_) {
      if (b[pivot].is_zero()) continue;
      const QuadNumber factor = b[pivot] / v[pivot];
      for (std::size_t k = 0; k < b.size(); ++k) b[k] -= factor * v[k];
    }
    rows_.emplace_back(pivot, std::move(v));
  }

 private:
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

Vec coefficient_vector(const BivariatePoly& f, int degree) {
  Vec v(static_cast<std::size_t>(degree) + 1);
  for (const auto& [e, c] : f.terms()) v[static_cast<std::size_t>(e.first)] = c;
  return v;
}

}  // namespace

bool in_ideal(const BivariatePoly& f, std::span<const BivariatePoly> generators) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw ValidationError("ideal membership needs a homogeneous polynomial");
  const int degree = f.degree();
  EchelonBasis basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw ValidationError("ideal membership needs homogeneous generators");
    const int shift = degree - g.degree();
    for (int a = 0; a <= shift; ++a) basis.insert(coefficient_vector(BivariatePoly::term(1, a, shift - a) * g, degree));
  }
  Vec v = coefficient_vector(f, degree);
  basis.reduce(v);
  return std::all_of(v.begin(), v.end(), [](const QuadNumber& c) { return c.is_zero(); });
}

MinorCheck compare_minors(const std::array<BivariatePoly, 3>& minors, const std::vector<BivariatePoly>& generators) {
  MinorCheck out;
  if (generators.size() != 3) {
    out.detail = "expected three generators";
    return out;
  }
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::array<QuadNumber, 3> scalars;
    bool ok = true;
    for (std::size_t k = 0; k < 3 && ok; ++k) {
      const auto c = proportionality(minors[k], generators[static_cast<std::size_t>(perm[k])]);
      if (c) scalars[k] = *c;
      else ok = false;
    }
    if (ok) {
      out.match = MinorMatch::proportional;
      out.assignment = perm;
      out.scalars = scalars;
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::size_t k = 0; k < 3; ++k) {
    if (!in_ideal(minors[k], generators)) {
      out.offending_minor = static_cast<int>(k);
      out.detail = "minor " + std::to_string(k) + " = " + minors[k].str() + " is not in (h1, h2, h3)";
      return out;
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (!in_ideal(generators[k], minors)) {
      out.detail = "generator h" + std::to_string(k + 1) + " is not in the ideal of minors";
      return out;
    }
  }
  out.match = MinorMatch::same_ideal;
  return out;
}

}  // namespace hkd
