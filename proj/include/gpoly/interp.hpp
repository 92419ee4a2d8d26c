#pragma once

#include <vector>

#include "gpoly/rational.hpp"
#include "gpoly/unipoly.hpp"

namespace gpoly::interp {

// Recovers the unique polynomial of degree < samples.size() through the
// given (node, value) pairs; exponents run 0..d. Nodes must be pairwise
// distinct (std::invalid_argument otherwise). Exact throughout.
UniPoly interpolate_univariate(const std::vector<std::pair<Rational, Rational>>& samples);

// Finite evaluation grid: axis i carries bounds[i]+1 pairwise distinct
// nodes. Grid points are enumerated lexicographically with axis 0 slowest
// (the last axis varies fastest); this order is shared with every consumer.
struct Grid {
  std::vector<std::vector<Rational>> axes;

  int axis_count() const { return static_cast<int>(axes.size()); }
  long long point_count() const;
  std::vector<int> degree_bounds() const;  // axes[i].size()-1 per axis

  // The lex_index-th grid point (0 <= lex_index < point_count()).
  std::vector<Rational> point(long long lex_index) const;
};

// Dense coefficient tensor of a multivariate polynomial with per-axis
// degree bounds; entry order matches Grid's lex enumeration of exponents.
struct MultiCoeffs {
  std::vector<int> bounds;  // degree bound per axis
  std::vector<Rational> c;  // size prod(bounds[i]+1)

  explicit MultiCoeffs(std::vector<int> degree_bounds);
  MultiCoeffs() : MultiCoeffs(std::vector<int>{}) {}

  int axis_count() const { return static_cast<int>(bounds.size()); }
  long long size() const { return static_cast<long long>(c.size()); }

  Rational& at(const std::vector<int>& exponents);
  const Rational& at(const std::vector<int>& exponents) const;

  Rational eval(const std::vector<Rational>& point) const;

  bool operator==(const MultiCoeffs& o) const { return bounds == o.bounds && c == o.c; }
};

// Recovers all coefficients of the polynomial with per-axis degree bound
// axes[i].size()-1 from its values on the full grid (values in the grid's
// lex point order). Cost: one inverse Vandermonde application per axis.
MultiCoeffs interpolate_grid(const Grid& grid, const std::vector<Rational>& values);

// Collapses a coefficient tensor to a univariate polynomial by summing
// coefficients of equal total degree; degree bound = sum of axis bounds.
UniPoly aggregate_by_total_degree(const MultiCoeffs& mc);

}  // namespace gpoly::interp
