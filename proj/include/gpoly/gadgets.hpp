#pragma once

#include <functional>
#include <string>

#include "gpoly/blockinterp.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/polyval.hpp"

// Weight simulation: a gadget family realizes a list of carrier weights for
// a target polynomial p at a fixed point, via the identity
//
//   p_multi(g) = p(T(g); point) / F(g)
//
// where T(g) splices the gadget for each explicitly weighted carrier and
// F is a nonzero graph-dependent factor. This turns one unweighted
// single-point oracle into a weighted multipoint oracle.
namespace gpoly::gadgets {

using blockinterp::ElementKind;

struct GadgetFamily {
  std::string name;
  ElementKind kind = ElementKind::Edge;
  polyval::PolyId target;
  Rational point;                                     // evaluation point of the target
  std::function<Rational(int)> weight_at;             // injective weight list
  std::function<EdgeGadget(int)> edge_gadget_at;      // kind == Edge
  std::function<VertexGadget(int)> vertex_gadget_at;  // kind == Vertex
  std::function<Rational(const Graph&)> factor_of;    // F(g), never zero
  // Optional structured evaluator for p(T(g); point); provided by families
  // whose transformed graphs outgrow plain enumeration.
  std::function<Rational(const Graph&)> transformed_eval;
};

// Perfect-matching weights 1, 2, 3, ... on edges: weight k is realized by
// k parallel twice-subdivided branches between the endpoints. F == 1 and
// bipartiteness is preserved.
GadgetFamily pm_parallel_family();

// Matching (defect) polynomial at point xi != 0, weights on vertices:
// weight xi + t/xi is realized by a pendant star with t leaves;
// F(g) = prod over weighted vertices of xi^t.
GadgetFamily mu_pendant_family(const Rational& xi);

// Random-cluster partition function at (q, w), weights on edges: the k-th
// weight is realized by stretching the edge into a path of k edges.
// Requires w != 0, and q not in {-w, -2w} when q != 0; the q = 0 branch
// targets the component-normalized variant. Weights: q = 0 -> w/k;
// q != 0 -> q / ((1 + q/w)^k - 1). Factors per weighted edge:
// q = 0 -> k*w^{k-1}; q != 0 -> ((q+w)^k - w^k)/q.
GadgetFamily tutte_stretch_family(const Rational& q, const Rational& w);

// Index of the exact value `w` in the family's weight list (bounded scan;
// std::invalid_argument if absent).
int weight_index(const GadgetFamily& fam, const Rational& w);

// T(g): splices the matching gadget at every explicitly weighted carrier;
// carriers without weights are left alone. Result is unweighted.
Graph transform(const GadgetFamily& fam, const Graph& g);

// p(T(g); point) / F(g), using the family's structured evaluator if any.
Rational simulated_value(const GadgetFamily& fam, const Graph& g);

struct SimulationCheck {
  Rational direct;     // multivariate evaluation, absent weights read as weight_at(0)
  Rational simulated;  // p(T(g); point) / F(g)
  bool ok = false;
};

// Evaluates both sides of the simulation identity on g (weights on the
// family's carrier kind only, values from the family's weight list).
SimulationCheck check_simulation(const GadgetFamily& fam, const Graph& g);

inline bool verify_simulation(const GadgetFamily& fam, const Graph& g) {
  return check_simulation(fam, g).ok;
}

}  // namespace gpoly::gadgets
