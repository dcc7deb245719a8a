#include <doctest.h>

#include "hkd/errors.hpp"
#include "hkd/hn_dim2.hpp"

using namespace hkd;

TEST_CASE("HN densities of simple bundles") {
  CHECK(hn_density({{{1, 1}}, 1}).is_zero());
  CHECK(hn_density({{{0, 2}}, 1}) == PiecewisePoly({0, 1}, {Polynomial({2, -2})}));
  CHECK(hn_density({{{-1, 1}}, 1}) == PiecewisePoly({0, 2}, {Polynomial({2, -1})}));
  CHECK(hn_density({{}, 1}).is_zero());
}

TEST_CASE("two-step filtration") {
  // slopes 1 > -2 with d = 2: breakpoints 1/2 and 2
  const auto f = hn_density({{{1, 1}, {-2, 1}}, 2});
  CHECK(f.breakpoints() == std::vector<Rational>{0, Rational(1, 2), 2});
  CHECK(is_continuous(f));
  CHECK(pw_eval(f, 0) == 5);
  CHECK(pw_eval(f, 1) == 2);
}

TEST_CASE("Koszul tent from the syzygy bundle") {
  const std::vector<long> twists{1, 1};
  const auto f = dim2_pair_density({{{-1, 1}}, 1}, twists, 1);
  CHECK(f == PiecewisePoly({0, 1, 2}, {Polynomial({0, 1}), Polynomial({2, -1})}));
  CHECK(pw_integrate(f) == 1);
  CHECK(dim2_pair_density({{}, 1}, std::vector<long>{}, 1).is_zero());
}

TEST_CASE("doubling d and all slopes keeps the breakpoints") {
  const HNData a{{{Rational(1, 2), 1}, {-3, 2}}, 3};
  HNData b = a;
  b.d *= 2;
  for (auto& c : b.components) c.slope *= 2;
  const auto fa = hn_density(a);
  const auto fb = hn_density(b);
  CHECK(fa.breakpoints() == fb.breakpoints());
  CHECK(fb == Rational(2) * fa);
}

TEST_CASE("line bundle sums merge equal slopes") {
  const std::vector<long> twists{2, 1, 2, 3};
  const auto sum = line_bundle_sum(twists, 2);
  REQUIRE(sum.components.size() == 3);
  CHECK(sum.components[0] == HNComponent{0, 1});
  CHECK(sum.components[1] == HNComponent{-2, 2});
  CHECK(sum.components[2] == HNComponent{-4, 1});
}

TEST_CASE("inconsistent HN data is rejected") {
  CHECK_THROWS_AS(hn_density({{{0, 1}, {1, 1}}, 1}), ValidationError);
  CHECK_THROWS_AS(hn_density({{{0, 0}}, 1}), ValidationError);
  CHECK_THROWS_AS(hn_density({{{0, 1}}, 0}), ValidationError);
  // V = O(0) against O(0)^2 leaves a negative difference
  const std::vector<long> twists{1, 1};
  CHECK_THROWS_AS(dim2_pair_density({{{0, 1}}, 1}, twists, 1), ValidationError);
  CHECK_THROWS_AS(dim2_pair_density({{{-1, 1}}, 2}, twists, 1), ValidationError);
}
