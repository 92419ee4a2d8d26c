#include <doctest.h>

#include <stdexcept>

#include "gpoly/gadgets.hpp"
#include "gpoly/polyval.hpp"
#include "support/corpus.hpp"

using namespace gpoly;
using namespace gpoly::gadgets;
namespace pv = gpoly::polyval;

TEST_CASE("parallel-branch family fundamentals") {
  const GadgetFamily fam = pm_parallel_family();
  CHECK(fam.kind == blockinterp::ElementKind::Edge);
  CHECK(fam.weight_at(0) == Rational(1));
  CHECK(fam.weight_at(3) == Rational(4));
  CHECK(fam.edge_gadget_at(0).graph.n == 4);  // one twice-subdivided branch
  CHECK(fam.edge_gadget_at(2).graph.n == 8);  // three branches
  CHECK(fam.factor_of(corpus::c4()) == Rational(1));

  Graph g = corpus::k2();
  g.edge_weights[0] = Rational(3);
  const SimulationCheck chk = check_simulation(fam, g);
  CHECK(chk.ok);
  CHECK(chk.direct == Rational(3));
  CHECK(chk.simulated == Rational(3));

  Graph c = corpus::c4();
  c.edge_weights[0] = Rational(2);
  CHECK(verify_simulation(fam, c));
  CHECK(pv::perfmatch_eval(transform(fam, c)) == Rational(3));
}

TEST_CASE("parallel-branch gadgets preserve bipartiteness") {
  const GadgetFamily fam = pm_parallel_family();
  Graph g = corpus::k33();
  g.edge_weights[0] = Rational(2);
  g.edge_weights[4] = Rational(3);
  CHECK(is_bipartite(transform(fam, g)));
  CHECK(verify_simulation(fam, g));
}

TEST_CASE("pendant-star family simulates matching weights") {
  const GadgetFamily fam = mu_pendant_family(Rational(2));
  CHECK(fam.kind == blockinterp::ElementKind::Vertex);
  CHECK(fam.weight_at(0) == Rational(2));
  CHECK(fam.weight_at(1) == rat(5, 2));  // 2 + 1/2
  CHECK(fam.vertex_gadget_at(0).graph.n == 1);
  CHECK(fam.vertex_gadget_at(2).graph.n == 3);

  Graph g = corpus::k2();
  g.vertex_weights[1] = rat(5, 2);
  const SimulationCheck chk = check_simulation(fam, g);
  CHECK(chk.ok);
  CHECK(chk.direct == Rational(6));
  CHECK(fam.factor_of(g) == Rational(2));

  Graph multi = corpus::k3();
  multi.vertex_weights[0] = fam.weight_at(1);
  multi.vertex_weights[2] = fam.weight_at(2);
  CHECK(fam.factor_of(multi) == Rational(8));  // 2^(1+2)
  CHECK(verify_simulation(fam, multi));

  CHECK_THROWS_AS(mu_pendant_family(Rational(0)), std::invalid_argument);

  const GadgetFamily half = mu_pendant_family(rat(1, 2));
  CHECK(half.weight_at(2) == rat(9, 2));  // 1/2 + 2/(1/2)
  Graph h = corpus::p4();
  h.vertex_weights[1] = half.weight_at(2);
  CHECK(verify_simulation(half, h));
}

TEST_CASE("stretch family simulates cluster weights") {
  const GadgetFamily fam = tutte_stretch_family(Rational(2), Rational(1));
  CHECK(fam.kind == blockinterp::ElementKind::Edge);
  CHECK(fam.weight_at(0) == Rational(1));   // identity weight: the point itself
  CHECK(fam.weight_at(1) == rat(1, 4));     // 2 / (3^2 - 1)
  CHECK(fam.target.kind == pv::PolyId::Kind::ClusterZ);

  Graph g = corpus::k2();
  g.edge_weights[0] = rat(1, 4);
  const SimulationCheck chk = check_simulation(fam, g);
  CHECK(chk.ok);
  CHECK(chk.direct == rat(9, 2));
  CHECK(fam.factor_of(g) == Rational(4));

  CHECK(verify_simulation(fam, corpus::k3()));  // no weights: identity everywhere
}

TEST_CASE("stretch family at q = 0 targets the normalized variant") {
  const GadgetFamily fam = tutte_stretch_family(Rational(0), Rational(5));
  CHECK(fam.target.kind == pv::PolyId::Kind::ClusterZ0);
  CHECK(fam.weight_at(1) == rat(5, 2));  // w/k

  Graph g = corpus::k2();
  g.edge_weights[0] = rat(5, 2);
  const SimulationCheck chk = check_simulation(fam, g);
  CHECK(chk.ok);
  CHECK(chk.direct == rat(5, 2));
  CHECK(fam.factor_of(g) == Rational(10));  // k * w^(k-1)

  Graph tri = corpus::k3();
  tri.edge_weights[1] = fam.weight_at(2);
  CHECK(verify_simulation(fam, tri));
}

TEST_CASE("stretch family hypotheses") {
  CHECK_THROWS_AS(tutte_stretch_family(Rational(2), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(tutte_stretch_family(Rational(2), Rational(-2)), std::invalid_argument);
  CHECK_THROWS_AS(tutte_stretch_family(Rational(2), Rational(-1)), std::invalid_argument);
  CHECK_NOTHROW(tutte_stretch_family(Rational(0), Rational(5)));
  CHECK_NOTHROW(tutte_stretch_family(Rational(-1), Rational(2)));
}

TEST_CASE("structured evaluation matches the materialized transform") {
  const GadgetFamily fam = tutte_stretch_family(Rational(3), Rational(2));
  Graph g = corpus::k3();
  g.edge_weights[0] = fam.weight_at(2);
  g.edge_weights[2] = fam.weight_at(1);
  const Graph t = transform(fam, g);
  CHECK(t.n == 3 + 2 + 1);
  CHECK(t.m() == 3 + 2 + 1);
  CHECK(simulated_value(fam, g) * fam.factor_of(g) == pv::z_eval(t, Rational(3), Rational(2)));
  CHECK(verify_simulation(fam, g));
}

TEST_CASE("large stretched graphs stay verifiable") {
  const GadgetFamily fam = tutte_stretch_family(Rational(2), Rational(1));
  Graph g = corpus::k4();
  for (int e = 0; e < g.m(); ++e) g.edge_weights[e] = fam.weight_at(3);  // 24 spliced edges
  CHECK(verify_simulation(fam, g));
}

TEST_CASE("weight index lookup") {
  const GadgetFamily fam = tutte_stretch_family(Rational(2), Rational(1));
  CHECK(weight_index(fam, fam.weight_at(0)) == 0);
  CHECK(weight_index(fam, fam.weight_at(3)) == 3);
  CHECK_THROWS_AS(weight_index(fam, Rational(12345)), std::invalid_argument);
}

TEST_CASE("transform splices only the weighted carriers") {
  const GadgetFamily fam = tutte_stretch_family(Rational(2), Rational(1));
  Graph g = corpus::c4();
  g.edge_weights[1] = fam.weight_at(1);  // path of 2 edges
  const Graph t = transform(fam, g);
  CHECK(t.n == 5);
  CHECK(t.m() == 5);
  CHECK(t.edge_weights.empty());
}

TEST_CASE("carrier kind mismatches are rejected") {
  const GadgetFamily stretch = tutte_stretch_family(Rational(2), Rational(1));
  Graph vw = corpus::k3();
  vw.vertex_weights[0] = Rational(1);
  CHECK_THROWS_AS(check_simulation(stretch, vw), std::invalid_argument);

  const GadgetFamily pendant = mu_pendant_family(Rational(2));
  Graph ew = corpus::k3();
  ew.edge_weights[0] = Rational(2);
  CHECK_THROWS_AS(check_simulation(pendant, ew), std::invalid_argument);
}

TEST_CASE("weights outside the family list are rejected") {
  const GadgetFamily fam = pm_parallel_family();
  Graph g = corpus::k2();
  g.edge_weights[0] = rat(3, 2);
  CHECK_THROWS_AS(transform(fam, g), std::invalid_argument);
  CHECK_THROWS_AS(check_simulation(fam, g), std::invalid_argument);
}
