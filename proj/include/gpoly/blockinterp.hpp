#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <vector>

#include "gpoly/graph.hpp"
#include "gpoly/interp.hpp"
#include "gpoly/unipoly.hpp"

// Coefficient recovery from point evaluations with a bounded query budget:
// the indeterminate carriers (edges or vertices) are partitioned into t
// blocks of at most `capacity` elements, every carrier in a block shares one
// variable, and the collapsed polynomial is recovered on a (d_i+1)-node grid
// per block, then aggregated by total degree.
namespace gpoly::blockinterp {

enum class ElementKind { Edge, Vertex };

struct BlockPlan {
  ElementKind kind = ElementKind::Edge;
  std::vector<int> elements;            // carrier ids, strictly ascending
  int capacity = 1;                     // max block size d
  std::vector<std::vector<int>> blocks; // partition of elements, round-robin
};

// ceil(|elements|/capacity) blocks; element at position j joins block
// j mod t, so block sizes differ by at most one and never exceed capacity.
BlockPlan make_block_plan(ElementKind kind, std::vector<int> elements, int capacity);

// Lazily generated list of pairwise distinct weights; the i-th weight is
// gen(i). Distinctness is re-checked as the cache grows.
class WeightList {
 public:
  explicit WeightList(std::function<Rational(int)> gen);
  static WeightList naturals();  // 1, 2, 3, ...

  const Rational& at(int i) const;

 private:
  std::function<Rational(int)> gen_;
  mutable std::vector<Rational> cache_;
};

// Wraps the evaluation callback handed to the driver, counting queries and
// the largest query size (|V| + |E|) seen. The callback receives the query
// graph with block weights installed on its carriers.
class EvalOracle {
 public:
  using Fn = std::function<Rational(const Graph&)>;

  explicit EvalOracle(Fn fn) : fn_(std::move(fn)) {}

  Rational operator()(const Graph& query);

  long long calls() const { return calls_.load(); }
  long long max_query_size() const { return max_size_.load(); }

 private:
  Fn fn_;
  std::atomic<long long> calls_{0};
  std::atomic<long long> max_size_{0};
};

struct ReductionReport {
  UniPoly coefficients;              // aggregated by total degree
  long long queries = 0;             // grid evaluations issued
  int t = 0;                         // number of blocks
  int capacity = 0;                  // requested block capacity d
  std::vector<int> axis_degrees;     // per-block interpolation degree
  long long grid_points = 0;         // == queries
  long long max_query_size = 0;      // largest |V|+|E| handed to the oracle
  double rate = 0.0;                 // log2(capacity+1)/capacity, reporting only
  std::optional<Rational> point_value;  // pipeline-specific evaluation
};

// Runs the reduction: clears the plan's element kind weights on g, walks
// the grid (axis i nodes = weights 0..|block_i|, block sizes bound the
// per-axis degree), queries the oracle once per grid point, interpolates,
// and aggregates by total degree.
ReductionReport run_block_interpolation(const Graph& g, const BlockPlan& plan,
                                        const WeightList& weights, EvalOracle& oracle);

// Query counts (d+1)^{ceil(m/d)} for each capacity, exactly.
struct QueryCurvePoint {
  int capacity = 0;
  long long t = 0;
  Integer queries;
};
std::vector<QueryCurvePoint> query_curve(long long m, const std::vector<int>& capacities);

// Smallest capacity d >= 1 with 3*log2(d+1)/d <= eps, i.e. the point where
// the grid has at most 2^{eps*m/3} points per 3 blocks; exact integer test
// (d+1)^{3b} <= 2^{ad} for eps = a/b.
int capacity_for_epsilon(const Rational& eps);

}  // namespace gpoly::blockinterp
