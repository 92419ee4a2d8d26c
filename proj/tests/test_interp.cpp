#include <doctest.h>

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpoly/interp.hpp"

using namespace gpoly;
using namespace gpoly::interp;

TEST_CASE("univariate interpolation recovers a quadratic") {
  const UniPoly p = interpolate_univariate(
      {{Rational(0), Rational(3)}, {Rational(1), Rational(6)}, {Rational(2), Rational(11)}});
  CHECK(p == unipoly({3, 2, 1}));  // 3 + 2x + x^2
}

TEST_CASE("univariate interpolation handles constants and rational nodes") {
  CHECK(interpolate_univariate({{Rational(5), Rational(42)}}) == unipoly({42}));
  const UniPoly p = interpolate_univariate({{rat(1, 2), rat(7, 2)}, {rat(3, 2), rat(15, 2)}});
  CHECK(p == UniPoly({rat(3, 2), Rational(4)}));  // 3/2 + 4x
  CHECK(p.eval(rat(1, 2)) == rat(7, 2));
}

TEST_CASE("univariate interpolation rejects duplicate nodes") {
  CHECK_THROWS_AS(interpolate_univariate({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}),
                  std::invalid_argument);
}

TEST_CASE("grid enumeration is lexicographic with the last axis fastest") {
  Grid grid;
  grid.axes = {{Rational(0), Rational(1)}, {Rational(10), Rational(11), Rational(12)}};
  CHECK(grid.point_count() == 6);
  CHECK(grid.degree_bounds() == std::vector<int>{1, 2});
  CHECK(grid.point(0) == std::vector<Rational>{Rational(0), Rational(10)});
  CHECK(grid.point(1) == std::vector<Rational>{Rational(0), Rational(11)});
  CHECK(grid.point(2) == std::vector<Rational>{Rational(0), Rational(12)});
  CHECK(grid.point(3) == std::vector<Rational>{Rational(1), Rational(10)});
  CHECK(grid.point(5) == std::vector<Rational>{Rational(1), Rational(12)});
}

TEST_CASE("grid interpolation recovers a bivariate polynomial") {
  // p(x,y) = 2xy + x + 3
  Grid grid;
  grid.axes = {{Rational(0), Rational(1)}, {Rational(0), Rational(1)}};
  std::vector<Rational> values;
  for (long long i = 0; i < grid.point_count(); ++i) {
    const auto pt = grid.point(i);
    values.push_back(Rational(2) * pt[0] * pt[1] + pt[0] + Rational(3));
  }
  const MultiCoeffs mc = interpolate_grid(grid, values);
  CHECK(mc.at({0, 0}) == Rational(3));
  CHECK(mc.at({1, 0}) == Rational(1));
  CHECK(mc.at({0, 1}) == Rational(0));
  CHECK(mc.at({1, 1}) == Rational(2));
  CHECK(aggregate_by_total_degree(mc) == unipoly({3, 1, 2}));
}

TEST_CASE("zero-axis grid holds a single constant") {
  Grid grid;
  CHECK(grid.point_count() == 1);
  CHECK(grid.point(0).empty());
  const MultiCoeffs mc = interpolate_grid(grid, {Rational(7)});
  CHECK(mc.size() == 1);
  CHECK(mc.at({}) == Rational(7));
  CHECK(aggregate_by_total_degree(mc) == unipoly({7}));
}

TEST_CASE("grid interpolation rejects duplicate axis nodes and size mismatches") {
  Grid grid;
  grid.axes = {{Rational(1), Rational(1)}};
  CHECK_THROWS_AS(interpolate_grid(grid, {Rational(0), Rational(0)}), std::invalid_argument);
  Grid ok;
  ok.axes = {{Rational(0), Rational(1)}};
  CHECK_THROWS_AS(interpolate_grid(ok, {Rational(0)}), std::invalid_argument);
}

TEST_CASE("random multivariate round trips") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    const int t = static_cast<int>(rng() % 4);  // up to 3 axes here, degree <= 3
    std::vector<int> bounds;
    for (int i = 0; i < t; ++i) bounds.push_back(static_cast<int>(rng() % 4));
    MultiCoeffs mc(bounds);
    for (long long i = 0; i < mc.size(); ++i)
      mc.c[static_cast<std::size_t>(i)] = Rational(static_cast<long>(rng() % 19) - 9);

    Grid grid;
    for (int i = 0; i < t; ++i) {
      std::vector<Rational> nodes;
      for (int v = 0; v <= bounds[static_cast<std::size_t>(i)]; ++v)
        nodes.emplace_back(v + 1);  // 1..d+1
      grid.axes.push_back(std::move(nodes));
    }
    std::vector<Rational> values;
    for (long long i = 0; i < grid.point_count(); ++i) values.push_back(mc.eval(grid.point(i)));
    CHECK(interpolate_grid(grid, values) == mc);
  }
}

TEST_CASE("aggregation sums equal total degrees") {
  MultiCoeffs mc({1, 1, 1});
  mc.at({0, 0, 0}) = Rational(1);
  mc.at({1, 0, 0}) = Rational(2);
  mc.at({0, 1, 0}) = Rational(3);
  mc.at({0, 0, 1}) = Rational(4);
  mc.at({1, 1, 0}) = Rational(5);
  mc.at({1, 1, 1}) = Rational(6);
  CHECK(aggregate_by_total_degree(mc) == unipoly({1, 9, 5, 6}));
}
