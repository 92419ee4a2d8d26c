#include "gpoly/pipeline.hpp"

#include <stdexcept>

#include "gpoly/gadgets.hpp"
#include "gpoly/polyval.hpp"
#include "gpoly/quadext.hpp"

namespace gpoly::pipeline {

using blockinterp::BlockPlan;
using blockinterp::ElementKind;
using blockinterp::EvalOracle;
using blockinterp::WeightList;
using blockinterp::make_block_plan;

namespace {

void require_unweighted(const Graph& g, const char* what) {
  if (!g.edge_weights.empty() || !g.vertex_weights.empty())
    throw std::invalid_argument(std::string(what) + " expects an unweighted graph");
}

std::vector<int> all_ids(int count) {
  std::vector<int> ids(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) ids[static_cast<std::size_t>(i)] = i;
  return ids;
}

}  // namespace

ReductionReport recover_signed_permanent(const Graph& g, int capacity,
                                         const QueryObserver& observer) {
  validate(g);
  if (!g.vertex_weights.empty())
    throw std::invalid_argument("signed permanent recovery does not accept vertex weights");
  if (!is_bipartite(g))
    throw std::invalid_argument("signed permanent recovery expects a bipartite graph");
  polyval::ensure_enumerable("perfect-matching enumeration", g.n);

  std::vector<int> negative;
  for (int e = 0; e < g.m(); ++e) {
    const Rational w = g.edge_weight(e);
    if (w == -1)
      negative.push_back(e);
    else if (w != 1)
      throw std::invalid_argument("edge weights must be 1 or -1 (edge " + std::to_string(e) +
                                  " carries " + rat_str(w) + ")");
  }

  const gadgets::GadgetFamily fam = gadgets::pm_parallel_family();
  const BlockPlan plan = make_block_plan(ElementKind::Edge, negative, capacity);
  const WeightList weights(fam.weight_at);
  EvalOracle oracle([&](const Graph& query) {
    const Graph t = gadgets::transform(fam, query);
    if (observer) observer(t);
    polyval::EnumGuardBypass lift;  // spliced branches are forced structures
    return polyval::perfmatch_eval(t);
  });
  ReductionReport report = run_block_interpolation(g, plan, weights, oracle);
  report.point_value = report.coefficients.eval(Rational(-1));
  return report;
}

ReductionReport recover_matching_poly(const Graph& g, const Rational& xi, int capacity,
                                      const QueryObserver& observer) {
  validate(g);
  require_unweighted(g, "matching recovery");
  polyval::ensure_enumerable("matching enumeration", g.n);

  const gadgets::GadgetFamily fam = gadgets::mu_pendant_family(xi);
  const BlockPlan plan = make_block_plan(ElementKind::Vertex, all_ids(g.n), capacity);
  const WeightList weights(fam.weight_at);
  EvalOracle oracle([&](const Graph& query) {
    const Graph t = gadgets::transform(fam, query);
    if (observer) observer(t);
    Rational value;
    {
      polyval::EnumGuardBypass lift;  // pendant stars stay cheap to branch on
      value = polyval::matching_eval(t, xi);
    }
    return Rational(value / fam.factor_of(query));
  });
  ReductionReport report = run_block_interpolation(g, plan, weights, oracle);
  report.point_value = report.coefficients.eval(xi);
  return report;
}

ReductionReport recover_matching_poly_sqrt(const Graph& g, const Rational& c, int capacity,
                                           const QueryObserver& observer) {
  validate(g);
  require_unweighted(g, "matching recovery");
  if (c == 0) throw std::invalid_argument("the squared evaluation point must be nonzero");
  if (g.n % 2 != 0)
    throw std::invalid_argument("recovery at an irrational point needs an even vertex count");
  polyval::ensure_enumerable("matching enumeration", g.n);

  // Grid nodes are the rational numbers u_t = 1 + t/c; the oracle installs
  // the actual weights sqrt(c) * u_t through pendant stars and divides the
  // sqrt(c)-evaluation by the star factor, which lands back in Q.
  const WeightList weights([c](int t) { return Rational(1 + Rational(t) / c); });

  EvalOracle oracle([&](const Graph& query) {
    int top = 0;
    std::vector<long> index_of(static_cast<std::size_t>(query.n), 0);
    for (const auto& [v, u] : query.vertex_weights) {
      const Rational t = (u - 1) * c;
      if (t.get_den() != 1 || t < 0)
        throw std::logic_error("grid weight does not belong to the u-list");
      const long ti = static_cast<long>(t.get_num().get_si());
      index_of[static_cast<std::size_t>(v)] = ti;
      top = std::max(top, static_cast<int>(ti));
    }
    std::vector<Rational> ulist;
    std::vector<VertexGadget> stars;
    for (int t = 0; t <= top; ++t) {
      ulist.push_back(Rational(1 + Rational(t) / c));
      VertexGadget gd;
      gd.graph.n = t + 1;
      gd.v = 0;
      for (int leaf = 1; leaf <= t; ++leaf) gd.graph.edges.emplace_back(0, leaf);
      stars.push_back(std::move(gd));
    }
    const Graph t_graph = splice_vertex_gadgets(query, ulist, stars);
    if (observer) observer(t_graph);

    long leaves = 0;
    for (const auto& [v, u] : query.vertex_weights) {
      (void)u;
      leaves += index_of[static_cast<std::size_t>(v)];
    }
    const QuadExt xi = QuadExt::root(c);
    polyval::MatchingRecursion<QuadExt> rec(
        t_graph, std::vector<QuadExt>(static_cast<std::size_t>(t_graph.n), xi));
    const QuadExt value = rec.run(QuadExt::scalar(Rational(1), c));
    const QuadExt scaled = value / xi.pow(leaves);
    if (!scaled.is_rational())
      throw std::logic_error("matching value failed to collapse to a rational");
    return scaled.a;
  });

  const BlockPlan plan = make_block_plan(ElementKind::Vertex, all_ids(g.n), capacity);
  ReductionReport report = run_block_interpolation(g, plan, weights, oracle);

  // Recovered coefficient k equals c^{k/2} * mu_k; odd k must vanish.
  UniPoly fixed;
  fixed.coeffs.assign(report.coefficients.coeffs.size(), Rational(0));
  for (std::size_t k = 0; k < report.coefficients.coeffs.size(); ++k) {
    const Rational& b = report.coefficients.coeffs[k];
    if (k % 2 == 1) {
      if (b != 0) throw std::logic_error("odd-degree coefficient failed to vanish");
      continue;
    }
    fixed.coeffs[k] = b / rat_pow(c, static_cast<long>(k / 2));
  }
  report.coefficients = std::move(fixed);
  return report;
}

ReductionReport recover_z_poly(const Graph& g, const Rational& q, const Rational& w,
                               int capacity, const QueryObserver& observer) {
  validate(g);
  require_unweighted(g, "cluster polynomial recovery");
  polyval::ensure_enumerable("edge-subset enumeration", g.m());

  const gadgets::GadgetFamily fam = gadgets::tutte_stretch_family(q, w);
  const BlockPlan plan = make_block_plan(ElementKind::Edge, all_ids(g.m()), capacity);
  const WeightList weights(fam.weight_at);
  EvalOracle oracle([&](const Graph& query) {
    if (observer) observer(gadgets::transform(fam, query));
    return Rational(fam.transformed_eval(query) / fam.factor_of(query));
  });
  ReductionReport report = run_block_interpolation(g, plan, weights, oracle);
  report.point_value = report.coefficients.eval(w);
  return report;
}

Rational tutte_point_via_z(const Graph& g, const Rational& x, const Rational& y) {
  validate(g);
  require_unweighted(g, "Tutte evaluation via the cluster polynomial");
  const Rational q = (x - 1) * (y - 1);
  const Rational w = y - 1;
  if (q != 0) {
    const Rational z = polyval::z_eval(g, q, w);
    return rat_pow(x - 1, -component_count(g)) * rat_pow(y - 1, -static_cast<long>(g.n)) * z;
  }
  if (x == 1 && y != 0 && y != 1) {
    // Only subsets at full connectivity survive x = 1; the normalized
    // variant collects exactly those.
    const Rational z0 = polyval::z_eval(g, Rational(0), w, /*zero_variant=*/true);
    return rat_pow(y - 1, component_count(g) - static_cast<long>(g.n)) * z0;
  }
  throw std::invalid_argument("Tutte point (" + rat_str(x) + ", " + rat_str(y) +
                              ") is outside the supported region: need (x-1)(y-1) != 0, "
                              "or x == 1 with y outside {0, 1}");
}

std::pair<Graph, Integer> pm_to_line_graph_mis(const Graph& g) {
  validate(g);
  require_unweighted(g, "perfect-matching to independent-set transfer");
  if (g.n % 2 != 0)
    throw std::invalid_argument("perfect matchings need an even vertex count");
  Graph lg = line_graph(g);
  const UniPoly ip = polyval::indep_poly(lg);
  const Rational count = ip.coeff(g.n / 2);
  if (count.get_den() != 1) throw std::logic_error("independent-set count is not integral");
  return {std::move(lg), count.get_num()};
}

MonotoneCnf vc_to_monotone_2cnf(const Graph& g) {
  validate(g);
  MonotoneCnf cnf;
  cnf.vars = g.n;
  cnf.clauses = g.edges;  // a cover must hit every edge: clause u OR v
  return cnf;
}

Rational mu_via_indep_on_line_graph(const Graph& g, const Rational& xi) {
  validate(g);
  require_unweighted(g, "matching evaluation via the line graph");
  if (xi == 0) throw std::invalid_argument("evaluation point must be nonzero");
  const Graph lg = line_graph(g);
  return rat_pow(xi, g.n) * polyval::indep_eval(lg, rat_pow(xi, -2));
}

}  // namespace gpoly::pipeline
