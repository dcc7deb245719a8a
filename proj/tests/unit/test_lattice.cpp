#include <doctest.h>

#include <omp.h>

#include <random>

#include "../support/oracles.hpp"
#include "hkd/errors.hpp"
#include "hkd/lattice.hpp"

using namespace hkd;

namespace {

SemigroupSpec make(int rank, std::vector<Point> gens, std::vector<long> w, long p = 5) {
  SemigroupSpec s;
  s.rank = rank;
  s.generators = std::move(gens);
  s.weights = std::move(w);
  s.p = p;
  return s;
}

SemigroupSpec a2(long p = 5) { return make(2, {{1, 1}, {2, 0}, {0, 2}}, {1, 1}, p); }
SemigroupSpec plane(long p = 2) { return make(2, {{1, 0}, {0, 1}}, {1, 1}, p); }

std::set<Point> as_set(const std::vector<std::pair<Point, long>>& pts) {
  std::set<Point> out;
  for (const auto& [p, d] : pts) out.insert(p);
  return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(as_set(enumerate_semigroup(a2(), 4)) ==
        std::set<Point>{{0, 0}, {1, 1}, {2, 0}, {0, 2}, {2, 2}, {3, 1}, {1, 3}, {4, 0}, {0, 4}});
  CHECK(as_set(enumerate_semigroup(make(1, {{1}}, {1}), 3)) == std::set<Point>{{0}, {1}, {2}, {3}});
  CHECK(as_set(enumerate_semigroup(make(1, {{2}, {3}}, {1}), 7)) ==
        std::set<Point>{{0}, {2}, {3}, {4}, {5}, {6}, {7}});
}

TEST_CASE("enumeration agrees with the recursive oracle") {
  const std::vector<SemigroupSpec> specs{
      a2(), make(2, {{1, 1}, {3, 0}, {0, 3}}, {1, 1}), make(2, {{1, 2}, {2, 1}, {1, 0}}, {2, 3}),
      make(3, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}, {1, 1, 1}),
      make(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}, {1, 1, 1, 1})};
  for (const auto& s : specs) {
    const auto ours = as_set(enumerate_semigroup(s, 18));
    const auto ref = oracle::semigroup_points(s.generators, s.weights, 18);
    CHECK(ours == ref);
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(Semigroup(plane(), 1000, 100), ResourceError);
  const Semigroup s(a2(), 6);
  CHECK(s.contains(Point{3, 3}));
  CHECK_FALSE(s.contains(Point{3, 2}));
  CHECK_FALSE(s.contains(Point{-1, 1}));
  CHECK_THROWS_AS((void)s.contains(Point{9, 1}), ResourceError);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(make(2, {{1, -1}}, {1, 1}).validate(), ValidationError);
  CHECK_THROWS_AS(make(2, {{0, 0}}, {1, 1}).validate(), ValidationError);
  CHECK_THROWS_AS(make(2, {{1, 0}}, {1, 0}).validate(), ValidationError);
  CHECK_THROWS_AS(make(2, {{1, 0, 0}}, {1, 1}).validate(), ValidationError);
  CHECK_THROWS_AS(make(2, {{1, 0}}, {1, 1}, 4).validate(), DomainError);
  CHECK(semigroup_dimension(a2()) == 2);
  CHECK(semigroup_dimension(make(3, {{1, 1, 0}, {2, 2, 0}}, {1, 1, 1})) == 1);
  CHECK(semigroup_degree_gcd(a2()) == 2);
}

TEST_CASE("colength examples") {
  const Semigroup s(a2(2), 12);
  const MonomialIdealSpec m{{{1, 1}, {2, 0}, {0, 2}}};
  const auto col = colengths_serial(s, m, 2, 12);
  std::uint64_t total = 0;
  for (auto c : col) total += c;
  CHECK(total == 6);
  CHECK(monomial_colength_by_degree(s, m, 2, 2) == 3);
  CHECK(col[4] == 2);  // (3,1), (1,3)

  const Semigroup p(plane(), 10);
  CHECK(monomial_colength_by_degree(p, {{{1, 0}, {0, 1}}}, 4, 3) == 4);
}

TEST_CASE("colengths agree with the scanning oracle") {
  struct Case {
    SemigroupSpec spec;
    MonomialIdealSpec ideal;
  };
  const std::vector<Case> cases{
      {a2(), {{{1, 1}, {2, 0}, {0, 2}}}},
      {make(2, {{1, 1}, {3, 0}, {0, 3}}, {1, 1}), {{{1, 1}, {3, 0}, {0, 3}}}},
      {plane(), {{{1, 1}, {3, 0}, {0, 3}}}},
      {make(1, {{2}, {3}}, {1}), {{{2}, {3}}}},
      {make(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}, {1, 1, 1, 1}),
       {{{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}}},
  };
  for (const auto& c : cases) {
    for (long q : {2L, 3L, 4L}) {
      const long top = 14;
      const Semigroup s(c.spec, top);
      CHECK(colengths_serial(s, c.ideal, q, top) ==
            oracle::colengths(c.spec.generators, c.spec.weights, c.ideal.generators, q, top));
    }
  }
}

TEST_CASE("property: parallel counting equals the serial reference") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coord(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point> gens;
    while (gens.size() < 3) {
      Point g{coord(rng), coord(rng)};
      if (g[0] + g[1] > 0) gens.push_back(g);
    }
    gens.push_back({1, 0});
    gens.push_back({0, 1});
    const auto spec = make(2, gens, {1, 1});
    const MonomialIdealSpec ideal{{gens[0], gens[3], gens[4]}};
    const Semigroup s(spec, 60);
    const auto serial = colengths_serial(s, ideal, 5, 60);
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      CHECK(colengths_parallel(s, ideal, 5, 60) == serial);
    }
  }
  omp_set_num_threads(1);
}

TEST_CASE("property: enlarging the ideal never increases a colength") {
  const Semigroup s(a2(), 40);
  const MonomialIdealSpec small{{{2, 0}, {0, 2}}};
  const MonomialIdealSpec large{{{2, 0}, {0, 2}, {1, 1}}};
  const auto a = colengths_serial(s, small, 5, 40);
  const auto b = colengths_serial(s, large, 5, 40);
  for (std::size_t m = 0; m < a.size(); ++m) {
    CHECK(b[m] <= a[m]);
    CHECK(a[m] <= s.count_in_degree(static_cast<long>(m)));
  }
}

TEST_CASE("support bounds") {
  const auto pb = support_bound(plane(), {{{1, 0}, {0, 1}}});
  CHECK(pb.m_tilde == 2);
  CHECK(pb.power == 1);
  const auto ab = support_bound(a2(), {{{1, 1}, {2, 0}, {0, 2}}});
  CHECK(ab.m_tilde >= Rational(3, 2));
  CHECK(ab.m_tilde == 3);

  const auto ns = make(1, {{2}, {3}}, {1}, 2);
  const auto nb = support_bound(ns, {{{2}, {3}}});
  const Semigroup s(ns, 30);
  const auto col = colengths_serial(s, {{{2}, {3}}}, 2, 30);
  long top = 0;
  for (std::size_t m = 0; m < col.size(); ++m) {
    if (col[m] != 0) top = static_cast<long>(m);
  }
  CHECK(top == 5);
  CHECK(nb.m_tilde >= Rational(top, 2));

  CHECK_THROWS_AS(support_bound(plane(), {{{2, 0}}}), ValidationError);
  CHECK_THROWS_AS(support_bound(a2(), {{{1, 0}}}), ValidationError);
  CHECK_THROWS_AS(support_bound(a2(), {{}}), ValidationError);
}

TEST_CASE("approximants") {
  const LatticeProblem problem(a2(2), {{{1, 1}, {2, 0}, {0, 2}}});
  const auto a = build_approximant(problem, 1);
  CHECK(a.q == 2);
  CHECK(pw_eval(a.f_n, 0) == Rational(1, 2));
  CHECK(pw_eval(a.f_n, Rational(1, 2)) == Rational(3, 2));
  CHECK(pw_eval(a.f_n, 1) == 1);
  CHECK(pw_eval(a.f_n, Rational(3, 2)) == 0);
  CHECK(is_continuous(a.g_n));
  CHECK(pw_integrate(a.f_n) == Rational(6, 4));

  const LatticeProblem flat(plane(), {{{1, 0}, {0, 1}}});
  for (int level = 1; level <= 4; ++level) {
    const auto b = build_approximant(flat, level);
    for (long m = 0; m < b.q; ++m) CHECK(pw_eval(b.f_n, Rational(m, b.q)) == Rational(m + 1, b.q));
    for (long m = 0; m <= 2 * b.q; ++m) CHECK(pw_eval(b.g_n, Rational(m, b.q)) == pw_eval(b.f_n, Rational(m, b.q)));
    CHECK(is_continuous(b.g_n));
  }
}

TEST_CASE("convergence reports") {
  const LatticeProblem flat(plane(), {{{1, 0}, {0, 1}}});
  const PiecewisePoly tent({0, 1, 2}, {Polynomial({0, 1}), Polynomial({2, -1})});
  const std::vector<int> levels{1, 2, 3};
  const auto rows = convergence_report(flat, levels, &tent);
  CHECK(rows[0].distance.value == Rational(1, 2));
  CHECK(rows[1].distance.value == Rational(1, 4));
  CHECK(rows[2].distance.value == Rational(1, 8));
  for (const auto& r : rows) CHECK(r.integral == 1);

  const LatticeProblem problem(a2(), {{{1, 1}, {2, 0}, {0, 2}}});
  const auto self = build_approximant(problem, 2).g_n;
  const std::vector<int> two{2};
  CHECK(convergence_report(problem, two, &self)[0].distance.value == 0);

  const std::vector<int> one_two{1, 2};
  const auto cauchy = convergence_report(problem, one_two);
  CHECK(cauchy[1].distance.value < cauchy[0].distance.value);
  CHECK(abs(cauchy[1].integral - Rational(3, 2)) < Rational(1, 10));
  CHECK_THROWS_AS(convergence_report(problem, std::vector<int>{}), DomainError);
}

TEST_CASE("level caps") {
  const LatticeProblem capped(a2(), {{{1, 1}, {2, 0}, {0, 2}}}, 2000);
  const int best = max_feasible_level(capped, 6);
  CHECK(best >= 1);
  CHECK(best < 6);
  CHECK_THROWS_AS(build_approximant(capped, 6), ResourceError);
  CHECK_THROWS_AS((void)capped.q_for_level(0), DomainError);
  CHECK_THROWS_AS(LatticeProblem(make(1, {{2}, {3}}, {1}), {{{2}, {3}}}), DomainError);
}
