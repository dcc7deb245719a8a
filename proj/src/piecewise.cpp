#include "hkd/piecewise.hpp"

#include <algorithm>
#include <cmath>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

const Polynomial kZeroPolynomial{};

Polynomial apply(const Polynomial& a, const Polynomial& b, CombineOp op) {
  switch (op) {
    case CombineOp::add:
      return a + b;
    case CombineOp::sub:
      return a - b;
    case CombineOp::mul:
      return a * b;
  }
  return {};
}

}  // namespace

PiecewisePoly::PiecewisePoly() : breakpoints_{Rational(0)} {}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                             std::optional<Polynomial> tail)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), tail_(std::move(tail)) {
  if (breakpoints_.empty() || !breakpoints_.front().is_zero()) {
    throw DomainError("piecewise polynomial breakpoints must start at 0");
  }
  if (pieces_.size() + 1 != breakpoints_.size()) {
    throw DomainError("piecewise polynomial needs exactly one piece per breakpoint interval");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw DomainError("piecewise polynomial breakpoints must be strictly increasing");
    }
  }
  normalize();
}

PiecewisePoly PiecewisePoly::unbounded(Polynomial tail) { return PiecewisePoly({Rational(0)}, {}, std::move(tail)); }

void PiecewisePoly::normalize() {
  if (tail_ && tail_->is_zero()) tail_.reset();

  std::vector<Rational> bps{breakpoints_.front()};
  std::vector<Polynomial> ps;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!ps.empty() && ps.back() == pieces_[i]) {
      bps.back() = breakpoints_[i + 1];
    } else {
      ps.push_back(std::move(pieces_[i]));
      bps.push_back(breakpoints_[i + 1]);
    }
  }
  const Polynomial& beyond = tail_ ? *tail_ : kZeroPolynomial;
  while (!ps.empty() && ps.back() == beyond) {
    ps.pop_back();
    bps.pop_back();
  }
  breakpoints_ = std::move(bps);
  pieces_ = std::move(ps);
}

int PiecewisePoly::degree() const {
  int deg = tail_ ? tail_->degree() : -1;
  for (const auto& p : pieces_) deg = std::max(deg, p.degree());
  return deg;
}

const Polynomial& PiecewisePoly::polynomial_at(const Rational& x) const {
  // first breakpoint strictly greater than x closes the interval containing x
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it == breakpoints_.end()) return tail_ ? *tail_ : kZeroPolynomial;
  const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  return pieces_[idx - 1];
}

bool is_continuous(const PiecewisePoly& f) {
  const auto& bps = f.breakpoints();
  const auto& ps = f.pieces();
  const Polynomial& beyond = f.tail() ? *f.tail() : kZeroPolynomial;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Polynomial& right = (i + 1 < ps.size()) ? ps[i + 1] : beyond;
    if (ps[i](bps[i + 1]) != right(bps[i + 1])) return false;
  }
  return true;
}

Rational pw_eval(const PiecewisePoly& f, const Rational& x) {
  if (x.sign() < 0) throw DomainError("piecewise polynomial evaluated at negative x = " + x.str());
  return f.polynomial_at(x)(x);
}

Rational pw_integrate(const PiecewisePoly& f) {
  if (!f.has_compact_support()) throw DomainError("integral of a function with an unbounded tail diverges");
  Rational total;
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < f.pieces().size(); ++i) total += f.pieces()[i].integrate(bps[i], bps[i + 1]);
  return total;
}

PiecewisePoly pw_combine(const PiecewisePoly& f, const PiecewisePoly& g, CombineOp op) {
  std::vector<Rational> bps;
  bps.reserve(f.breakpoints().size() + g.breakpoints().size());
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(bps));
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<Polynomial> pieces;
  pieces.reserve(bps.size() - 1);
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    pieces.push_back(apply(f.polynomial_at(bps[i]), g.polynomial_at(bps[i]), op));
  }
  std::optional<Polynomial> tail;
  if (f.tail() || g.tail()) {
    const Polynomial& ft = f.tail() ? *f.tail() : kZeroPolynomial;
    const Polynomial& gt = g.tail() ? *g.tail() : kZeroPolynomial;
    tail = apply(ft, gt, op);
  }
  return {std::move(bps), std::move(pieces), std::move(tail)};
}

PiecewisePoly pw_scale(const PiecewisePoly& f, const Rational& s) {
  std::vector<Polynomial> pieces;
  pieces.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) pieces.push_back(p * s);
  std::optional<Polynomial> tail;
  if (f.tail()) tail = *f.tail() * s;
  return {f.breakpoints(), std::move(pieces), std::move(tail)};
}

PiecewisePoly pw_rescale_arg(const PiecewisePoly& f, const Rational& c, const Rational& s) {
  if (c.sign() <= 0) throw DomainError("argument rescale factor must be positive, got " + c.str());
  std::vector<Rational> bps;
  bps.reserve(f.breakpoints().size());
  for (const auto& b : f.breakpoints()) bps.push_back(b / c);
  std::vector<Polynomial> pieces;
  pieces.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) pieces.push_back(p.compose_scale(c) * s);
  std::optional<Polynomial> tail;
  if (f.tail()) tail = f.tail()->compose_scale(c) * s;
  return {std::move(bps), std::move(pieces), std::move(tail)};
}

namespace {

constexpr int kSupSamples = 1024;
const BigInt kDivisorSearchLimit("1000000000000", 10);

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> small;
  std::vector<BigInt> large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Synthetic division of integer-valued coefficients by (x - r); assumes r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& r) {
  const std::size_t n = coeffs.size() - 1;
  std::vector<Rational> out(n);
  Rational carry;
  for (std::size_t k = n; k-- > 0;) {
    carry = coeffs[k + 1] + carry * r;
    out[k] = carry;
  }
  return out;
}

Rational max_abs_on(const Polynomial& p, const std::vector<Rational>& points) {
  Rational best;
  for (const auto& x : points) best = max(best, abs(p(x)));
  return best;
}

SupDistance sup_abs_on_interval(const Polynomial& p, const Rational& a, const Rational& b) {
  std::vector<Rational> points{a, b};
  if (p.degree() <= 1) return {max_abs_on(p, points), true};

  if (auto roots = rational_roots(p.derivative())) {
    for (const auto& r : *roots) {
      if (a < r && r < b) points.push_back(r);
    }
    return {max_abs_on(p, points), true};
  }

  // Sampled maximum padded by L * h / 2, with L >= max |p'| on [a, b].
  const Rational width = b - a;
  const Rational h = width / Rational(kSupSamples);
  Rational sampled;
  for (int k = 0; k <= kSupSamples; ++k) sampled = max(sampled, abs(p(a + h * Rational(k))));
  const Rational reach = max(abs(a), abs(b));
  Rational lipschitz;
  Rational power = 1;
  const Polynomial dp = p.derivative();
  for (const auto& c : dp.coefficients()) {
    lipschitz += abs(c) * power;
    power *= reach;
  }
  return {sampled + lipschitz * h / Rational(2), false};
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  // clear denominators
  BigInt lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<Rational> coeffs;
  for (const auto& c : p.coefficients()) coeffs.push_back(c * Rational(lcm));

  std::vector<Rational> roots;
  while (coeffs.size() > 1 && coeffs.front().is_zero()) {
    roots.emplace_back(0);
    coeffs.erase(coeffs.begin());
  }
  if (coeffs.size() == 1) return roots;

  const BigInt a0 = coeffs.front().numerator();
  const BigInt an = coeffs.back().numerator();
  if (abs(a0) > kDivisorSearchLimit || abs(an) > kDivisorSearchLimit) return std::nullopt;

  const auto num_divs = positive_divisors(a0);
  const auto den_divs = positive_divisors(an);
  for (const auto& pd : num_divs) {
    for (const auto& qd : den_divs) {
      for (int sign : {1, -1}) {
        const Rational candidate(BigInt(pd * sign), qd);
        if (candidate.denominator() != qd) continue;  // visited in lowest terms already
        while (coeffs.size() > 1 && Polynomial(coeffs)(candidate).is_zero()) {
          roots.push_back(candidate);
          coeffs = deflate(coeffs, candidate);
        }
      }
    }
  }
  if (coeffs.size() > 1) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

SupDistance pw_sup_distance(const PiecewisePoly& f, const PiecewisePoly& g) {
  const PiecewisePoly diff = pw_combine(f, g, CombineOp::sub);
  if (!diff.has_compact_support()) throw DomainError("sup distance is unbounded: tails differ");
  SupDistance out{Rational(0), true};
  const auto& bps = diff.breakpoints();
  for (std::size_t i = 0; i < diff.pieces().size(); ++i) {
    const auto piece = sup_abs_on_interval(diff.pieces()[i], bps[i], bps[i + 1]);
    out.value = max(out.value, piece.value);
    out.exact = out.exact && piece.exact;
  }
  return out;
}

}  // namespace hkd
