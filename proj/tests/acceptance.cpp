// Acceptance gate: one check per advertised end-to-end guarantee, each on a
// fixed corpus with exact equality and a wall-clock budget. Prints one
// [PASS]/[FAIL] line per criterion; the exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gpoly/blockinterp.hpp"
#include "gpoly/gadgets.hpp"
#include "gpoly/interp.hpp"
#include "gpoly/pipeline.hpp"
#include "gpoly/polyval.hpp"
#include "support/corpus.hpp"

using namespace gpoly;
namespace bi = gpoly::blockinterp;
namespace pv = gpoly::polyval;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int g_failures = 0;

void criterion(int index, const char* name, double budget_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = outcome.ok;
  std::string detail = outcome.detail;
  if (ok && seconds > budget_seconds) {
    ok = false;
    detail += " — over the " + std::to_string(static_cast<int>(budget_seconds)) + "s budget";
  }
  std::printf("[%s] criterion %d — %s (%s, %.1fs)\n", ok ? "PASS" : "FAIL", index, name,
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// Connected graphs on 1..5 vertices (one per isomorphism class) plus K33.
std::vector<Graph> recovery_corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n)
    for (Graph& g : corpus::graphs_on(n, true)) out.push_back(std::move(g));
  out.push_back(corpus::k33());
  return out;
}

std::vector<int> capacity_choices(int element_count) {
  std::vector<int> ds{1, 2, 3};
  if (element_count > 3) ds.push_back(element_count);
  return ds;
}

long long grid_size(const bi::ReductionReport& report) {
  long long q = 1;
  for (int d : report.axis_degrees) q *= d + 1;
  return q;
}

// --- criterion 1: block interpolation against direct extraction -------------

Outcome run_block_recovery() {
  const auto corp = recovery_corpus();
  const bi::WeightList weights = bi::WeightList::naturals();
  long long runs = 0;

  for (const Graph& g : corp) {
    struct Target {
      bi::ElementKind kind;
      int elements;
      UniPoly direct;
      std::function<Rational(const Graph&)> oracle;
    };
    std::vector<Target> targets;
    targets.push_back({bi::ElementKind::Vertex, g.n, pv::matching_poly(g),
                       [](const Graph& query) { return pv::matching_multivar_eval(query); }});
    targets.push_back({bi::ElementKind::Vertex, g.n, pv::indep_poly(g),
                       [](const Graph& query) { return pv::indep_multivar_eval(query); }});
    for (const Rational& q : {Rational(-1), Rational(2), Rational(3)})
      targets.push_back({bi::ElementKind::Edge, g.m(), pv::z_poly(g, q),
                         [q](const Graph& query) { return pv::z_multivar_eval(query, q); }});

    for (const Target& target : targets) {
      std::vector<int> ids(static_cast<std::size_t>(target.elements));
      for (int i = 0; i < target.elements; ++i) ids[static_cast<std::size_t>(i)] = i;
      for (int d : capacity_choices(target.elements)) {
        const bi::BlockPlan plan = bi::make_block_plan(target.kind, ids, d);
        bi::EvalOracle oracle(target.oracle);
        const auto report = bi::run_block_interpolation(g, plan, weights, oracle);
        ++runs;
        if (report.coefficients != target.direct)
          return {false, "coefficient mismatch on a " + std::to_string(g.n) + "-vertex graph (d=" +
                             std::to_string(d) + ")"};
        if (report.queries != grid_size(report))
          return {false, "query count differs from the grid size"};
      }
    }
  }
  return {true, std::to_string(corp.size()) + " graphs, " + std::to_string(runs) + " recoveries"};
}

// --- criterion 2: weight simulation identity --------------------------------

Outcome run_gadget_simulation() {
  const int per_family = 100;
  long long checks = 0;

  const auto run_family = [&checks](const std::function<gadgets::GadgetFamily(int)>& family_at,
                                    std::uint64_t seed) -> const char* {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < per_family; ++i) {
      const gadgets::GadgetFamily fam = family_at(i);
      Graph g = corpus::random_graph(rng, 8, 10);
      if (fam.kind == bi::ElementKind::Edge) {
        for (int e = 0; e < g.m(); ++e)
          if (rng() % 2) g.edge_weights[e] = fam.weight_at(static_cast<int>(rng() % 4));
      } else {
        for (int v = 0; v < g.n; ++v)
          if (rng() % 2) g.vertex_weights[v] = fam.weight_at(static_cast<int>(rng() % 4));
      }
      ++checks;
      if (!gadgets::verify_simulation(fam, g)) return fam.name.c_str();
    }
    return nullptr;
  };

  const std::vector<Rational> xis{Rational(2), rat(1, 2), Rational(3), Rational(5)};
  const std::vector<std::pair<Rational, Rational>> qws{
      {Rational(2), Rational(1)}, {Rational(3), Rational(1)},
      {Rational(-1), Rational(2)}, {Rational(0), Rational(5)}};

  if (run_family([](int) { return gadgets::pm_parallel_family(); }, 0xA1))
    return {false, "a perfect-matching simulation failed"};
  if (run_family([&xis](int i) { return gadgets::mu_pendant_family(xis[i % xis.size()]); }, 0xA2))
    return {false, "a matching-weight simulation failed"};
  if (run_family(
          [&qws](int i) {
            const auto& [q, w] = qws[i % qws.size()];
            return gadgets::tutte_stretch_family(q, w);
          },
          0xA3))
    return {false, "a cluster-weight simulation failed"};
  return {true, std::to_string(checks) + " seeded instances across 3 families"};
}

// --- criterion 3: signed permanent end-to-end -------------------------------

Outcome run_signed_permanent() {
  std::mt19937_64 rng(0xB3);
  long long runs = 0;
  for (int i = 0; i < 20; ++i) {
    const Graph g = corpus::random_signed_bipartite(rng, 5, 3);
    const UniPoly direct = pv::signed_perm_poly(g);
    const Rational perm = pv::perfmatch_eval(g);
    for (int d : {1, 2}) {
      bool all_bipartite = true;
      long long seen = 0;
      const auto report = pipeline::recover_signed_permanent(g, d, [&](const Graph& query) {
        ++seen;
        if (!is_bipartite(query)) all_bipartite = false;
      });
      ++runs;
      if (report.coefficients != direct) return {false, "coefficient mismatch"};
      if (!report.point_value || *report.point_value != perm)
        return {false, "permanent value mismatch"};
      if (report.queries != grid_size(report) || seen != report.queries)
        return {false, "query count differs from the grid size"};
      if (!all_bipartite) return {false, "a query graph lost bipartiteness"};
    }
  }
  return {true, "20 seeded bipartite graphs, " + std::to_string(runs) + " recoveries"};
}

// --- criterion 4: matching polynomial end-to-end ----------------------------

Outcome run_matching_recovery() {
  long long runs = 0;
  for (const Graph& g : {corpus::k3(), corpus::c4(), corpus::p4(), corpus::k4()}) {
    const UniPoly direct = pv::matching_poly(g);
    const Rational pm_count = pv::perfmatch_eval(g);
    for (const Rational& xi : {Rational(1), Rational(2), rat(1, 2)}) {
      for (int d : {1, 2, g.n}) {
        const auto report = pipeline::recover_matching_poly(g, xi, d);
        ++runs;
        if (report.coefficients != direct) return {false, "coefficient mismatch"};
        if (report.coefficients.coeff(0) != pm_count)
          return {false, "constant term is not the perfect matching count"};
      }
    }
  }
  return {true, "4 graphs x 3 points x 3 capacities, " + std::to_string(runs) + " recoveries"};
}

// --- criterion 5: cluster polynomial end-to-end -----------------------------

Outcome run_cluster_recovery() {
  std::vector<Graph> corp;
  for (Graph& g : recovery_corpus())
    if (g.m() <= 6) corp.push_back(std::move(g));
  const std::vector<std::pair<Rational, Rational>> points{
      {Rational(2), Rational(1)}, {Rational(3), Rational(1)},
      {Rational(-1), Rational(2)}, {Rational(0), Rational(5)}};
  long long runs = 0;

  for (const Graph& g : corp) {
    for (const auto& [q, w] : points) {
      const UniPoly direct = q == 0 ? pv::z0_poly(g, q) : pv::z_poly(g, q);
      bool small_queries = true;
      const auto report = pipeline::recover_z_poly(g, q, w, 2, [&](const Graph& query) {
        if (query.m() > 3 * g.m()) small_queries = false;
      });
      ++runs;
      if (report.coefficients != direct) return {false, "coefficient mismatch"};
      long long budget = 1;
      for (int i = 0; i < (g.m() + 1) / 2; ++i) budget *= 3;
      if (report.queries > budget) return {false, "query count exceeded its cap"};
      if (!small_queries) return {false, "a stretched query graph grew past 3x the edge count"};
    }
  }
  return {true, std::to_string(corp.size()) + " graphs x 4 points, " + std::to_string(runs) +
                    " recoveries"};
}

// --- criterion 6: cross-polynomial identities --------------------------------

Outcome run_identity_suite() {
  std::vector<Graph> all;
  for (int n = 1; n <= 5; ++n)
    for (Graph& g : corpus::graphs_on(n)) all.push_back(std::move(g));
  long long checks = 0;

  const std::vector<std::pair<Rational, Rational>> xy{
      {Rational(2), Rational(2)}, {Rational(3), Rational(5)},    {Rational(0), Rational(2)},
      {Rational(-1), Rational(3)}, {rat(1, 2), rat(1, 3)}};

  for (const Graph& g : all) {
    const int comps = component_count(g);
    // Tutte values against the cluster sum with uniform weight y-1.
    for (const auto& [x, y] : xy) {
      const Rational q = (x - Rational(1)) * (y - Rational(1));
      const Rational lhs = pv::tutte_eval(g, x, y) * rat_pow(x - Rational(1), comps) *
                           rat_pow(y - Rational(1), g.n);
      ++checks;
      if (lhs != pv::z_eval(g, q, y - Rational(1))) return {false, "Tutte-cluster value mismatch"};
    }
    // The two cluster normalizations differ by q^components coefficient-wise.
    for (const Rational& q : {Rational(2), Rational(3), Rational(-1)}) {
      const UniPoly z = pv::z_poly(g, q);
      const UniPoly z0 = pv::z0_poly(g, q);
      const Rational scale = rat_pow(q, comps);
      for (int k = 0; k <= g.m(); ++k) {
        ++checks;
        if (z.coeff(k) != scale * z0.coeff(k))
          return {false, "cluster normalizations disagree"};
      }
    }
    // Matching values through the line graph independence polynomial.
    for (const Rational& xi : {Rational(1), Rational(2), Rational(3)}) {
      ++checks;
      if (pipeline::mu_via_indep_on_line_graph(g, xi) != pv::matching_eval(g, xi))
        return {false, "line-graph matching identity failed"};
    }
  }
  // Perfect matchings as maximum independent sets of the line graph.
  for (const Graph& g : {corpus::c4(), corpus::k4(), corpus::p4()}) {
    ++checks;
    if (Rational(pipeline::pm_to_line_graph_mis(g).second) != pv::perfmatch_eval(g))
      return {false, "line-graph perfect-matching count mismatch"};
  }
  return {true, std::to_string(all.size()) + " graphs, " + std::to_string(checks) + " identities"};
}

// --- criterion 7: interpolation round-trip -----------------------------------

Outcome run_interpolation_roundtrip() {
  std::mt19937_64 rng(0xD7);
  for (int trial = 0; trial < 200; ++trial) {
    const int t = static_cast<int>(rng() % 5);  // up to 4 axes
    std::vector<int> bounds;
    for (int i = 0; i < t; ++i) bounds.push_back(static_cast<int>(rng() % 4));  // degree <= 3
    interp::MultiCoeffs mc(bounds);
    for (long long i = 0; i < mc.size(); ++i)
      mc.c[static_cast<std::size_t>(i)] = Rational(static_cast<long>(rng() % 19) - 9);

    interp::Grid grid;
    for (int i = 0; i < t; ++i) {
      std::vector<Rational> nodes;
      for (int v = 0; v <= bounds[static_cast<std::size_t>(i)]; ++v) nodes.emplace_back(v);
      grid.axes.push_back(std::move(nodes));
    }
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(grid.point_count()));
    for (long long i = 0; i < grid.point_count(); ++i) values.push_back(mc.eval(grid.point(i)));
    if (!(interp::interpolate_grid(grid, values) == mc))
      return {false, "round trip lost coefficients on trial " + std::to_string(trial)};
  }

  const auto curve = bi::query_curve(12, {1, 4, 12});
  if (curve.size() != 3 || curve[0].queries != 4096 || curve[1].queries != 125 ||
      curve[2].queries != 13)
    return {false, "query counts for 12 indeterminates are off"};
  return {true, "200 seeded round trips"};
}

}  // namespace

int main() {
  criterion(1, "block recovery matches direct coefficients", 60, run_block_recovery);
  criterion(2, "gadget weight simulation", 120, run_gadget_simulation);
  criterion(3, "signed permanent end-to-end", 120, run_signed_permanent);
  criterion(4, "matching polynomial end-to-end", 60, run_matching_recovery);
  criterion(5, "cluster polynomial end-to-end", 300, run_cluster_recovery);
  criterion(6, "cross-polynomial identities", 30, run_identity_suite);
  criterion(7, "interpolation round-trip", 10, run_interpolation_roundtrip);
  if (g_failures == 0)
    std::printf("all 7 criteria passed\n");
  else
    std::printf("%d of 7 criteria failed\n", g_failures);
  return g_failures;
}
