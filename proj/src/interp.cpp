#include "gpoly/interp.hpp"

#include <stdexcept>

namespace gpoly::interp {

namespace {

// Column i holds the monomial coefficients of the i-th Lagrange basis
// polynomial for `nodes`, so coeffs = M * values recovers a polynomial
// from its values at the nodes.
std::vector<std::vector<Rational>> lagrange_matrix(const std::vector<Rational>& nodes) {
  const std::size_t k = nodes.size();
  if (k == 0) throw std::invalid_argument("interpolation needs at least one node");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (nodes[i] == nodes[j])
        throw std::invalid_argument("interpolation nodes must be pairwise distinct (" +
                                    rat_str(nodes[i]) + " repeats)");

  // full(x) = prod_j (x - nodes[j]), degree k, monic
  std::vector<Rational> full(k + 1, Rational(0));
  full[0] = 1;
  std::size_t deg = 0;
  for (std::size_t j = 0; j < k; ++j) {
    full[deg + 1] = 1;
    for (std::size_t t = deg; t > 0; --t) full[t] = full[t - 1] - nodes[j] * full[t];
    full[0] = -nodes[j] * full[0];
    ++deg;
  }

  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k, Rational(0)));
  std::vector<Rational> quot(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    // synthetic division: full / (x - nodes[i]), exact since nodes[i] is a root
    quot[k - 1] = full[k];
    for (std::size_t t = k - 1; t > 0; --t) quot[t - 1] = full[t] + nodes[i] * quot[t];
    Rational denom(0);  // quot evaluated at nodes[i] = prod_{j != i} (nodes[i] - nodes[j])
    for (std::size_t t = k; t > 0; --t) denom = denom * nodes[i] + quot[t - 1];
    for (std::size_t row = 0; row < k; ++row) m[row][i] = quot[row] / denom;
  }
  return m;
}

}  // namespace

UniPoly interpolate_univariate(const std::vector<std::pair<Rational, Rational>>& samples) {
  std::vector<Rational> nodes;
  nodes.reserve(samples.size());
  for (const auto& [x, y] : samples) {
    (void)y;
    nodes.push_back(x);
  }
  const auto m = lagrange_matrix(nodes);
  std::vector<Rational> coeffs(samples.size(), Rational(0));
  for (std::size_t row = 0; row < samples.size(); ++row)
    for (std::size_t i = 0; i < samples.size(); ++i)
      coeffs[row] += m[row][i] * samples[i].second;
  return UniPoly(std::move(coeffs));
}

long long Grid::point_count() const {
  long long total = 1;
  for (const auto& axis : axes) total *= static_cast<long long>(axis.size());
  return total;
}

std::vector<int> Grid::degree_bounds() const {
  std::vector<int> b;
  b.reserve(axes.size());
  for (const auto& axis : axes) {
    if (axis.empty()) throw std::invalid_argument("grid axis without nodes");
    b.push_back(static_cast<int>(axis.size()) - 1);
  }
  return b;
}

std::vector<Rational> Grid::point(long long lex_index) const {
  if (lex_index < 0 || lex_index >= point_count())
    throw std::invalid_argument("grid point index out of range");
  std::vector<Rational> p(axes.size(), Rational(0));
  for (std::size_t i = axes.size(); i > 0; --i) {
    const auto& axis = axes[i - 1];
    p[i - 1] = axis[static_cast<std::size_t>(lex_index % static_cast<long long>(axis.size()))];
    lex_index /= static_cast<long long>(axis.size());
  }
  return p;
}

MultiCoeffs::MultiCoeffs(std::vector<int> degree_bounds) : bounds(std::move(degree_bounds)) {
  long long total = 1;
  for (int b : bounds) {
    if (b < 0) throw std::invalid_argument("negative degree bound");
    total *= b + 1;
  }
  c.assign(static_cast<std::size_t>(total), Rational(0));
}

namespace {

std::size_t flat_index(const std::vector<int>& bounds, const std::vector<int>& exponents) {
  if (exponents.size() != bounds.size())
    throw std::invalid_argument("exponent tuple arity mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > bounds[i])
      throw std::invalid_argument("exponent exceeds axis degree bound");
    idx = idx * static_cast<std::size_t>(bounds[i] + 1) + static_cast<std::size_t>(exponents[i]);
  }
  return idx;
}

}  // namespace

Rational& MultiCoeffs::at(const std::vector<int>& exponents) {
  return c[flat_index(bounds, exponents)];
}

const Rational& MultiCoeffs::at(const std::vector<int>& exponents) const {
  return c[flat_index(bounds, exponents)];
}

Rational MultiCoeffs::eval(const std::vector<Rational>& point) const {
  if (point.size() != bounds.size())
    throw std::invalid_argument("evaluation point arity mismatch");
  // Horner along axis 0; recurse over the remaining axes.
  struct Rec {
    const std::vector<int>& bounds;
    const std::vector<Rational>& point;
    const std::vector<Rational>& c;
    Rational run(std::size_t axis, std::size_t offset, std::size_t span) const {
      if (axis == bounds.size()) return c[offset];
      const std::size_t width = static_cast<std::size_t>(bounds[axis] + 1);
      const std::size_t sub = span / width;
      Rational acc = run(axis + 1, offset + (width - 1) * sub, sub);
      for (std::size_t k = width - 1; k > 0; --k)
        acc = acc * point[axis] + run(axis + 1, offset + (k - 1) * sub, sub);
      return acc;
    }
  };
  return Rec{bounds, point, c}.run(0, 0, c.size());
}

MultiCoeffs interpolate_grid(const Grid& grid, const std::vector<Rational>& values) {
  if (static_cast<long long>(values.size()) != grid.point_count())
    throw std::invalid_argument("value count does not match grid size");
  MultiCoeffs out(grid.degree_bounds());
  out.c = values;
  // Apply the inverse Vandermonde axis by axis on the dense tensor.
  const int t = grid.axis_count();
  for (int a = 0; a < t; ++a) {
    const auto m = lagrange_matrix(grid.axes[static_cast<std::size_t>(a)]);
    const std::size_t width = m.size();
    std::size_t stride = 1;
    for (int j = a + 1; j < t; ++j) stride *= grid.axes[static_cast<std::size_t>(j)].size();
    const std::size_t block = width * stride;
    std::vector<Rational> col(width), res(width);
    for (std::size_t base = 0; base < out.c.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t i = 0; i < width; ++i) col[i] = out.c[base + i * stride + off];
        for (std::size_t row = 0; row < width; ++row) {
          res[row] = 0;
          for (std::size_t i = 0; i < width; ++i)
            if (m[row][i] != 0 && col[i] != 0) res[row] += m[row][i] * col[i];
        }
        for (std::size_t row = 0; row < width; ++row)
          out.c[base + row * stride + off] = res[row];
      }
    }
  }
  return out;
}

UniPoly aggregate_by_total_degree(const MultiCoeffs& mc) {
  int bound = 0;
  for (int b : mc.bounds) bound += b;
  UniPoly out;
  out.coeffs.assign(static_cast<std::size_t>(bound) + 1, Rational(0));
  std::vector<int> expo(mc.bounds.size(), 0);
  int total = 0;
  for (std::size_t idx = 0;; ++idx) {
    out.coeffs[static_cast<std::size_t>(total)] += mc.c[idx];
    if (idx + 1 == mc.c.size()) break;
    // advance the exponent odometer (last axis fastest), tracking the total
    for (std::size_t i = expo.size(); i > 0; --i) {
      if (expo[i - 1] < mc.bounds[i - 1]) {
        ++expo[i - 1];
        ++total;
        break;
      }
      total -= expo[i - 1];
      expo[i - 1] = 0;
    }
  }
  return out;
}

}  // namespace gpoly::interp
