#include "gpoly/blockinterp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpoly::blockinterp {

BlockPlan make_block_plan(ElementKind kind, std::vector<int> elements, int capacity) {
  if (capacity < 1) throw std::invalid_argument("block capacity must be >= 1");
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("duplicate element id in block plan");
  BlockPlan plan;
  plan.kind = kind;
  plan.capacity = capacity;
  plan.elements = std::move(elements);
  const int count = static_cast<int>(plan.elements.size());
  const int t = count == 0 ? 0 : (count + capacity - 1) / capacity;
  plan.blocks.assign(static_cast<std::size_t>(t), {});
  for (int j = 0; j < count; ++j)
    plan.blocks[static_cast<std::size_t>(j % t)].push_back(plan.elements[static_cast<std::size_t>(j)]);
  return plan;
}

WeightList::WeightList(std::function<Rational(int)> gen) : gen_(std::move(gen)) {
  if (!gen_) throw std::invalid_argument("weight generator must be callable");
}

WeightList WeightList::naturals() {
  return WeightList([](int i) { return Rational(i + 1); });
}

const Rational& WeightList::at(int i) const {
  if (i < 0) throw std::invalid_argument("weight index must be nonnegative");
  while (static_cast<int>(cache_.size()) <= i) {
    Rational next = gen_(static_cast<int>(cache_.size()));
    for (const Rational& seen : cache_)
      if (seen == next)
        throw std::invalid_argument("weight list is not injective: " + rat_str(next) +
                                    " repeats at index " + std::to_string(cache_.size()));
    cache_.push_back(std::move(next));
  }
  return cache_[static_cast<std::size_t>(i)];
}

Rational EvalOracle::operator()(const Graph& query) {
  calls_.fetch_add(1);
  const long long size = static_cast<long long>(query.n) + query.m();
  long long prev = max_size_.load();
  while (prev < size && !max_size_.compare_exchange_weak(prev, size)) {
  }
  return fn_(query);
}

ReductionReport run_block_interpolation(const Graph& g, const BlockPlan& plan,
                                        const WeightList& weights, EvalOracle& oracle) {
  validate(g);
  const int limit = plan.kind == ElementKind::Edge ? g.m() : g.n;
  for (int id : plan.elements)
    if (id < 0 || id >= limit)
      throw std::invalid_argument("block plan element id " + std::to_string(id) +
                                  " out of range");
  std::vector<int> covered;
  for (const auto& block : plan.blocks) {
    if (block.empty() || static_cast<int>(block.size()) > plan.capacity)
      throw std::invalid_argument("block size violates plan capacity");
    covered.insert(covered.end(), block.begin(), block.end());
  }
  std::sort(covered.begin(), covered.end());
  if (covered != plan.elements)
    throw std::invalid_argument("blocks do not partition the element list");

  const long long calls_before = oracle.calls();

  // Base query graph: the plan's carrier kind starts unweighted.
  Graph base = g;
  if (plan.kind == ElementKind::Edge)
    base.edge_weights.clear();
  else
    base.vertex_weights.clear();

  const int t = static_cast<int>(plan.blocks.size());
  interp::Grid grid;
  std::vector<int> axis_degrees;
  for (const auto& block : plan.blocks) {
    const int d = static_cast<int>(block.size());  // per-axis degree bound
    axis_degrees.push_back(d);
    std::vector<Rational> nodes;
    nodes.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) nodes.push_back(weights.at(i));
    grid.axes.push_back(std::move(nodes));
  }

  const long long points = grid.point_count();
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(points));
  for (long long idx = 0; idx < points; ++idx) {
    const auto node = grid.point(idx);
    Graph query = base;
    for (int b = 0; b < t; ++b)
      for (int id : plan.blocks[static_cast<std::size_t>(b)]) {
        if (plan.kind == ElementKind::Edge)
          query.edge_weights[id] = node[static_cast<std::size_t>(b)];
        else
          query.vertex_weights[id] = node[static_cast<std::size_t>(b)];
      }
    values.push_back(oracle(query));
  }

  ReductionReport report;
  report.coefficients = interp::aggregate_by_total_degree(interp::interpolate_grid(grid, values));
  report.queries = oracle.calls() - calls_before;
  report.t = t;
  report.capacity = plan.capacity;
  report.axis_degrees = std::move(axis_degrees);
  report.grid_points = points;
  report.max_query_size = oracle.max_query_size();
  report.rate = std::log2(static_cast<double>(plan.capacity) + 1.0) / plan.capacity;
  return report;
}

std::vector<QueryCurvePoint> query_curve(long long m, const std::vector<int>& capacities) {
  if (m < 0) throw std::invalid_argument("negative element count");
  std::vector<QueryCurvePoint> out;
  out.reserve(capacities.size());
  for (int d : capacities) {
    if (d < 1) throw std::invalid_argument("capacity must be >= 1");
    QueryCurvePoint p;
    p.capacity = d;
    p.t = m == 0 ? 0 : (m + d - 1) / d;
    mpz_ui_pow_ui(p.queries.get_mpz_t(), static_cast<unsigned long>(d) + 1,
                  static_cast<unsigned long>(p.t));
    out.push_back(std::move(p));
  }
  return out;
}

int capacity_for_epsilon(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
  const Integer a = eps.get_num();
  const Integer b = eps.get_den();
  for (int d = 1;; ++d) {
    // (d+1)^{3b} <= 2^{ad}  <=>  3*log2(d+1)/d <= a/b
    Integer lhs, rhs;
    const Integer exp_l = 3 * b;
    const Integer exp_r = a * d;
    if (!exp_l.fits_ulong_p() || !exp_r.fits_ulong_p())
      throw std::invalid_argument("epsilon too small to resolve");
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(d) + 1, exp_l.get_ui());
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2ul, exp_r.get_ui());
    if (lhs <= rhs) return d;
    if (d == 1 << 20) throw std::invalid_argument("epsilon too small to resolve");
  }
}

}  // namespace gpoly::blockinterp
