#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gpoly/blockinterp.hpp"
#include "gpoly/graph.hpp"

// End-to-end coefficient recovery: each pipeline wires a gadget family, a
// block plan, and the matching brute-force point oracle into the
// block-interpolation driver. Pipelines consume point evaluations only —
// never the coefficient extractors they are checked against.
namespace gpoly::pipeline {

using blockinterp::ReductionReport;

// Invoked with every transformed (gadget-spliced, unweighted) oracle query.
using QueryObserver = std::function<void(const Graph&)>;

// Input: bipartite graph with edge weights in {1, -1} (absent = 1).
// Recovers the polynomial whose k-th coefficient counts perfect matchings
// using exactly k negative edges; point_value = its value at -1 (the
// permanent of the associated signed biadjacency matrix). Only the negative
// edges carry indeterminates, realized via parallel-branch gadgets, so
// every query stays bipartite and F == 1.
ReductionReport recover_signed_permanent(const Graph& g, int capacity,
                                         const QueryObserver& observer = {});

// Input: unweighted graph, point xi != 0. Recovers the matching defect
// polynomial through pendant-star gadgets and single-point evaluations at
// xi; point_value = the polynomial evaluated at xi.
ReductionReport recover_matching_poly(const Graph& g, const Rational& xi, int capacity,
                                      const QueryObserver& observer = {});

// Same recovery with the evaluation point sqrt(c) for rational c != 0
// (n must be even). Arithmetic stays exact in Q(sqrt(c)); the interpolation
// grid itself is rational, and recovered odd-degree coefficients are
// checked to vanish.
ReductionReport recover_matching_poly_sqrt(const Graph& g, const Rational& c, int capacity,
                                           const QueryObserver& observer = {});

// Input: unweighted graph and a random-cluster point (q, w) accepted by the
// stretch family. Recovers the subset-size polynomial (the component-
// normalized variant when q == 0) through edge-stretch gadgets;
// point_value = the polynomial at w.
ReductionReport recover_z_poly(const Graph& g, const Rational& q, const Rational& w,
                               int capacity, const QueryObserver& observer = {});

// Tutte polynomial at (x, y) through the random-cluster point
// q = (x-1)(y-1), w = y-1. Supported when q != 0, or when x == 1 with
// y outside {0, 1} (via the component-normalized variant).
Rational tutte_point_via_z(const Graph& g, const Rational& x, const Rational& y);

// Perfect matchings of g (n even) as maximum-size independent sets of the
// line graph: returns L(g) and the count of independent sets of size n/2.
std::pair<Graph, Integer> pm_to_line_graph_mis(const Graph& g);

struct MonotoneCnf {
  int vars = 0;
  std::vector<std::pair<int, int>> clauses;
};

// Vertex covers of g as satisfying assignments of a monotone 2-CNF with one
// clause per edge.
MonotoneCnf vc_to_monotone_2cnf(const Graph& g);

// Matching polynomial value through the independence polynomial of the line
// graph: mu(g; xi) = xi^n * I(L(g); xi^{-2}), xi != 0.
Rational mu_via_indep_on_line_graph(const Graph& g, const Rational& xi);

}  // namespace gpoly::pipeline
