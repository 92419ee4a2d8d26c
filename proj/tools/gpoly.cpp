// gpoly: exact graph-polynomial toolkit.
//
// Subcommands:
//   eval           evaluate a polynomial at a point (or with stored weights)
//   coeffs         extract the full coefficient vector
//   reduce         recover coefficients end-to-end from single-point oracles
//   verify-gadget  check the weight-simulation identity on concrete instances
//   curve          query counts per block capacity
//
// Exit codes: 0 success, 1 verification failure, 2 usage/hypothesis error.
// All numeric output is exact rational text.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpoly/blockinterp.hpp"
#include "gpoly/gadgets.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/pipeline.hpp"
#include "gpoly/polyval.hpp"
#include "gpoly/rational.hpp"
#include "gpoly/unipoly.hpp"

namespace {

using gpoly::Graph;
using gpoly::Rational;
using gpoly::UniPoly;
using json = nlohmann::ordered_json;
namespace pv = gpoly::polyval;

Rational parse_rat_flag(const std::string& text, const char* flag) {
  try {
    return gpoly::rat_parse(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(flag) + ": expected a rational, got '" + text + "'");
  }
}

std::string coeff_text(const UniPoly& p) {
  const int deg = p.degree();
  if (deg < 0) return "0";
  std::string out;
  for (int k = 0; k <= deg; ++k) {
    if (k) out += ' ';
    out += gpoly::rat_str(p.coeff(k));
  }
  return out;
}

json coeff_json(const UniPoly& p) {
  json arr = json::array();
  const int deg = p.degree();
  if (deg < 0) {
    arr.push_back("0");
    return arr;
  }
  for (int k = 0; k <= deg; ++k) arr.push_back(gpoly::rat_str(p.coeff(k)));
  return arr;
}

// mu|matching, indep, z|cluster-z, z0|cluster-z0, perfmatch, signed-perm
pv::PolyId poly_by_name(const std::string& name, const Rational& q) {
  if (name == "mu" || name == "matching") return pv::PolyId::matching();
  if (name == "indep" || name == "independent") return pv::PolyId::indep_set();
  if (name == "z" || name == "cluster-z") return pv::PolyId::cluster_z(q);
  if (name == "z0" || name == "cluster-z0") return pv::PolyId::cluster_z0(q);
  if (name == "perfmatch") return pv::PolyId::perfmatch();
  if (name == "signed-perm") return pv::PolyId::signed_perm();
  throw std::invalid_argument("unknown polynomial '" + name + "'");
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string graph_file, poly, q_text, point_text, x_text, y_text;
  bool force = false;
};

int cmd_eval(const EvalArgs& a) {
  if (a.force) pv::set_force_enumeration(true);
  const Graph g = gpoly::read_graph_file(a.graph_file);

  if (a.poly == "tutte") {
    if (a.x_text.empty() || a.y_text.empty())
      throw std::invalid_argument("tutte needs --x and --y");
    const Rational x = parse_rat_flag(a.x_text, "--x");
    const Rational y = parse_rat_flag(a.y_text, "--y");
    std::cout << gpoly::rat_str(pv::tutte_eval(g, x, y)) << "\n";
    return 0;
  }

  Rational q(0);
  if (a.poly == "z" || a.poly == "cluster-z" || a.poly == "z0" || a.poly == "cluster-z0") {
    if (a.q_text.empty()) throw std::invalid_argument(a.poly + " needs --q");
    q = parse_rat_flag(a.q_text, "--q");
  }
  const pv::PolyId id = poly_by_name(a.poly, q);

  // With --point: univariate evaluation on the unweighted graph. Without:
  // multivariate evaluation with the graph's stored weights.
  Rational value = a.point_text.empty()
                       ? pv::multivar_eval(id, g)
                       : pv::point_eval(id, g, parse_rat_flag(a.point_text, "--point"));
  std::cout << gpoly::rat_str(value) << "\n";
  return 0;
}

// --- coeffs -----------------------------------------------------------------

struct CoeffsArgs {
  std::string graph_file, poly, q_text;
  bool force = false, as_json = false;
};

int cmd_coeffs(const CoeffsArgs& a) {
  if (a.force) pv::set_force_enumeration(true);
  const Graph g = gpoly::read_graph_file(a.graph_file);
  Rational q(0);
  if (a.poly == "z" || a.poly == "cluster-z" || a.poly == "z0" || a.poly == "cluster-z0") {
    if (a.q_text.empty()) throw std::invalid_argument(a.poly + " needs --q");
    q = parse_rat_flag(a.q_text, "--q");
  }
  const UniPoly p = pv::coefficients(poly_by_name(a.poly, q), g);
  if (a.as_json)
    std::cout << coeff_json(p).dump() << "\n";
  else
    std::cout << coeff_text(p) << "\n";
  return 0;
}

// --- reduce -----------------------------------------------------------------

struct ReduceArgs {
  std::string graph_file, pipeline, xi_text, c_text, q_text, w_text;
  int capacity = 0;
  bool force = false, as_json = false;
};

int cmd_reduce(const ReduceArgs& a) {
  if (a.force) pv::set_force_enumeration(true);
  if (a.capacity < 1) throw std::invalid_argument("--capacity must be >= 1");
  const Graph g = gpoly::read_graph_file(a.graph_file);

  gpoly::blockinterp::ReductionReport report;
  UniPoly direct;
  bool verified = false;

  if (a.pipeline == "signed-perm") {
    report = gpoly::pipeline::recover_signed_permanent(g, a.capacity);
    direct = pv::signed_perm_poly(g);
    verified = report.coefficients == direct && report.point_value &&
               *report.point_value == pv::perfmatch_eval(g);
  } else if (a.pipeline == "matching") {
    if (!a.c_text.empty()) {
      const Rational c = parse_rat_flag(a.c_text, "--c");
      report = gpoly::pipeline::recover_matching_poly_sqrt(g, c, a.capacity);
    } else {
      if (a.xi_text.empty()) throw std::invalid_argument("matching needs --xi (or --c)");
      const Rational xi = parse_rat_flag(a.xi_text, "--xi");
      report = gpoly::pipeline::recover_matching_poly(g, xi, a.capacity);
    }
    direct = pv::matching_poly(g);
    verified = report.coefficients == direct;
  } else if (a.pipeline == "tutte-z") {
    if (a.q_text.empty() || a.w_text.empty())
      throw std::invalid_argument("tutte-z needs --q and --w");
    const Rational q = parse_rat_flag(a.q_text, "--q");
    const Rational w = parse_rat_flag(a.w_text, "--w");
    report = gpoly::pipeline::recover_z_poly(g, q, w, a.capacity);
    direct = q == 0 ? pv::z0_poly(g, q) : pv::z_poly(g, q);
    verified = report.coefficients == direct;
  } else {
    throw std::invalid_argument("unknown pipeline '" + a.pipeline + "'");
  }

  if (a.as_json) {
    json out;
    out["coefficients"] = coeff_json(report.coefficients);
    out["queries"] = report.queries;
    out["t"] = report.t;
    out["d"] = report.capacity;
    json axes = json::array();
    for (int d : report.axis_degrees) axes.push_back(d);
    out["axis_degrees"] = axes;
    out["grid_points"] = report.grid_points;
    out["max_query_size"] = report.max_query_size;
    if (report.point_value) out["point_value"] = gpoly::rat_str(*report.point_value);
    out["verified"] = verified;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "coefficients: " << coeff_text(report.coefficients) << "\n";
    std::cout << "queries: " << report.queries << "\n";
    std::cout << "t: " << report.t << "\n";
    std::cout << "capacity: " << report.capacity << "\n";
    std::cout << "axis-degrees:";
    for (int d : report.axis_degrees) std::cout << ' ' << d;
    std::cout << "\n";
    std::cout << "max-query-size: " << report.max_query_size << "\n";
    if (report.point_value)
      std::cout << "point-value: " << gpoly::rat_str(*report.point_value) << "\n";
    std::cout << "verified: " << (verified ? "yes" : "no") << "\n";
  }
  return verified ? 0 : 1;
}

// --- verify-gadget ----------------------------------------------------------

struct VerifyArgs {
  std::string family, graph_file, xi_text, q_text, w_text;
  int trials = 0;
  std::uint64_t seed = 0;
  bool force = false;
};

gpoly::gadgets::GadgetFamily family_by_name(const VerifyArgs& a) {
  if (a.family == "pm-parallel") return gpoly::gadgets::pm_parallel_family();
  if (a.family == "mu-pendant") {
    if (a.xi_text.empty()) throw std::invalid_argument("mu-pendant needs --xi");
    return gpoly::gadgets::mu_pendant_family(parse_rat_flag(a.xi_text, "--xi"));
  }
  if (a.family == "tutte-stretch") {
    if (a.q_text.empty() || a.w_text.empty())
      throw std::invalid_argument("tutte-stretch needs --q and --w");
    return gpoly::gadgets::tutte_stretch_family(parse_rat_flag(a.q_text, "--q"),
                                                parse_rat_flag(a.w_text, "--w"));
  }
  throw std::invalid_argument("unknown family '" + a.family + "'");
}

// Small random instance with weights drawn from the family's first four
// weights on a random subset of its carrier kind.
Graph random_instance(const gpoly::gadgets::GadgetFamily& fam, std::mt19937_64& rng) {
  const int n = 2 + static_cast<int>(rng() % 5);
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) g.edges.emplace_back(u, v);
  if (fam.kind == gpoly::blockinterp::ElementKind::Edge) {
    for (int e = 0; e < g.m(); ++e)
      if (rng() % 2) g.edge_weights[e] = fam.weight_at(static_cast<int>(rng() % 4));
  } else {
    for (int v = 0; v < n; ++v)
      if (rng() % 2) g.vertex_weights[v] = fam.weight_at(static_cast<int>(rng() % 4));
  }
  return g;
}

int cmd_verify_gadget(const VerifyArgs& a) {
  if (a.force) pv::set_force_enumeration(true);
  if (a.graph_file.empty() && a.trials <= 0)
    throw std::invalid_argument("need --graph FILE or --random N");
  const gpoly::gadgets::GadgetFamily fam = family_by_name(a);

  std::vector<Graph> instances;
  if (!a.graph_file.empty()) instances.push_back(gpoly::read_graph_file(a.graph_file));
  if (a.trials > 0) {
    std::mt19937_64 rng(a.seed);
    for (int i = 0; i < a.trials; ++i) instances.push_back(random_instance(fam, rng));
  }

  int passed = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Graph& g = instances[i];
    const auto check = gpoly::gadgets::check_simulation(fam, g);
    const int weighted = static_cast<int>(fam.kind == gpoly::blockinterp::ElementKind::Edge
                                              ? g.edge_weights.size()
                                              : g.vertex_weights.size());
    std::cout << (check.ok ? "PASS" : "FAIL") << " instance " << i << " (n=" << g.n
              << ", m=" << g.m() << ", weighted=" << weighted << ")";
    if (!check.ok)
      std::cout << " direct=" << gpoly::rat_str(check.direct)
                << " simulated=" << gpoly::rat_str(check.simulated);
    std::cout << "\n";
    if (check.ok) ++passed;
  }
  std::cout << passed << "/" << instances.size() << " instances verified\n";
  return passed == static_cast<int>(instances.size()) ? 0 : 1;
}

// --- curve ------------------------------------------------------------------

struct CurveArgs {
  long long m = 0;
  std::vector<int> capacities;
};

int cmd_curve(const CurveArgs& a) {
  if (a.m < 1) throw std::invalid_argument("--m must be >= 1");
  for (const auto& pt : gpoly::blockinterp::query_curve(a.m, a.capacities))
    std::cout << pt.capacity << " " << pt.t << " " << pt.queries.get_str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coefficient recovery for graph polynomials"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate a polynomial");
  eval->add_option("--graph", ev.graph_file, "graph file")->required();
  eval->add_option("--poly", ev.poly, "mu|matching|indep|z|cluster-z|z0|cluster-z0|tutte|perfmatch")
      ->required();
  eval->add_option("--q", ev.q_text, "cluster parameter q");
  eval->add_option("--point", ev.point_text, "evaluation point");
  eval->add_option("--x", ev.x_text, "tutte x");
  eval->add_option("--y", ev.y_text, "tutte y");
  eval->add_flag("--force", ev.force, "lift the enumeration size guard");

  CoeffsArgs co;
  auto* coeffs = app.add_subcommand("coeffs", "extract all coefficients");
  coeffs->add_option("--graph", co.graph_file, "graph file")->required();
  coeffs
      ->add_option("--poly", co.poly,
                   "mu|matching|indep|z|cluster-z|z0|cluster-z0|perfmatch|signed-perm")
      ->required();
  coeffs->add_option("--q", co.q_text, "cluster parameter q");
  coeffs->add_flag("--json", co.as_json, "JSON array output");
  coeffs->add_flag("--force", co.force, "lift the enumeration size guard");

  ReduceArgs re;
  auto* reduce = app.add_subcommand("reduce", "run an end-to-end recovery pipeline");
  reduce->add_option("--graph", re.graph_file, "graph file")->required();
  reduce->add_option("--pipeline", re.pipeline, "signed-perm|matching|tutte-z")->required();
  reduce->add_option("--capacity,--d", re.capacity, "block capacity d")->required();
  reduce->add_option("--xi", re.xi_text, "matching evaluation point");
  reduce->add_option("--c", re.c_text, "matching point sqrt(c)");
  reduce->add_option("--q", re.q_text, "cluster parameter q");
  reduce->add_option("--w", re.w_text, "cluster edge weight w");
  reduce->add_flag("--json", re.as_json, "JSON report");
  reduce->add_flag("--force", re.force, "lift the enumeration size guard");

  VerifyArgs vg;
  auto* verify = app.add_subcommand("verify-gadget", "check the weight-simulation identity");
  verify->add_option("--family", vg.family, "pm-parallel|mu-pendant|tutte-stretch")->required();
  verify->add_option("--graph", vg.graph_file, "weighted graph file");
  verify->add_option("--xi", vg.xi_text, "mu-pendant evaluation point");
  verify->add_option("--q", vg.q_text, "tutte-stretch q");
  verify->add_option("--w", vg.w_text, "tutte-stretch w");
  verify->add_option("--random,--trials", vg.trials, "number of random instances");
  verify->add_option("--seed", vg.seed, "random seed");
  verify->add_flag("--force", vg.force, "lift the enumeration size guard");

  CurveArgs cu;
  auto* curve = app.add_subcommand("curve", "query counts per block capacity");
  curve->add_option("--m", cu.m, "number of indeterminates")->required();
  curve->add_option("--capacities", cu.capacities, "capacities to tabulate")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(eval)) return cmd_eval(ev);
    if (app.got_subcommand(coeffs)) return cmd_coeffs(co);
    if (app.got_subcommand(reduce)) return cmd_reduce(re);
    if (app.got_subcommand(verify)) return cmd_verify_gadget(vg);
    if (app.got_subcommand(curve)) return cmd_curve(cu);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
