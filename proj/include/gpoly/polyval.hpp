#pragma once

#include <climits>
#include <string>
#include <vector>

#include "gpoly/graph.hpp"
#include "gpoly/unipoly.hpp"

// Brute-force evaluators and coefficient extractors for the graph
// polynomials the toolkit reduces to. Everything here is exact and
// definition-driven: subset enumeration or branching recursions, no
// algebraic shortcuts. These are the reference implementations the rest of
// the library is checked against. The only non-enumerative kernel
// (z_eval_stretched) is cross-checked against enumeration by the tests.
namespace gpoly::polyval {

// --- size guardrails -------------------------------------------------------
//
// Enumeration refuses inputs with more than kEnumLimit vertices / edges /
// variables so a stray call cannot hang the process. Callers that construct
// structurally benign instances (gadget-spliced query graphs) can lift the
// limit for a scope; the CLI exposes --force for the same purpose.

inline constexpr int kEnumLimit = 30;

void set_force_enumeration(bool on);  // process-wide override (CLI --force)

// Public form of the guard check, honoring the force flag and any active
// bypass scope; throws std::invalid_argument beyond the limit.
void ensure_enumerable(const char* what, int size);

class EnumGuardBypass {  // RAII scope lift, nestable
 public:
  EnumGuardBypass();
  ~EnumGuardBypass();
  EnumGuardBypass(const EnumGuardBypass&) = delete;
  EnumGuardBypass& operator=(const EnumGuardBypass&) = delete;
};

// --- instrumentation -------------------------------------------------------

// Number of coefficient-extractor invocations (matching_poly, indep_poly,
// z_poly, z0_poly, signed_perm_poly) in this thread so far. The recovery
// pipelines must never bump this: they only consume point evaluations.
long long extractor_calls();

// --- coefficient extractors (univariate, unweighted input) -----------------

// Matching defect polynomial: coefficient k = number of matchings leaving
// exactly k vertices uncovered.
UniPoly matching_poly(const Graph& g);

// Independent set polynomial: coefficient k = number of independent sets
// of size k.
UniPoly indep_poly(const Graph& g);

// Random-cluster partition function in the subset-size variable:
// coefficient s = sum over edge subsets A of size s of q^{components(A)}.
UniPoly z_poly(const Graph& g, const Rational& q);

// Component-normalized variant: q^{components(A) - components(E)} instead;
// well-defined at q = 0 (only subsets with full connectivity survive).
UniPoly z0_poly(const Graph& g, const Rational& q);

// For a graph with edge weights in {1, -1}: coefficient k = number of
// perfect matchings using exactly k weight(-1) edges.
UniPoly signed_perm_poly(const Graph& g);

// --- point evaluators (univariate, unweighted input) -----------------------

Rational matching_eval(const Graph& g, const Rational& xi);
Rational indep_eval(const Graph& g, const Rational& xi);
Rational z_eval(const Graph& g, const Rational& q, const Rational& w, bool zero_variant = false);
Rational tutte_eval(const Graph& g, const Rational& x, const Rational& y);

// --- multivariate evaluators (weights = indeterminate values) --------------

// Sum over matchings of the product of vertex weights at uncovered
// vertices (absent weight = 1).
Rational matching_multivar_eval(const Graph& g);

// Sum over independent sets of the product of member vertex weights.
Rational indep_multivar_eval(const Graph& g);

// Sum over edge subsets A of q^{components(A)} times the product of edge
// weights in A; zero_variant normalizes by q^{components(E)}.
Rational z_multivar_eval(const Graph& g, const Rational& q, bool zero_variant = false);

// Sum over perfect matchings of the product of matched edge weights.
Rational perfmatch_eval(const Graph& g);

// --- structured Z kernel ----------------------------------------------------

// Z of the graph obtained from `base` by replacing edge e with a path of
// path_len[e] edges, evaluated without materializing the expansion:
// subsets of each path are classified by endpoint connectivity and internal
// component count, then combined over base-edge subsets. Exact; independent
// of any gadget algebra; cross-checked against z_eval by the test suite.
Rational z_eval_stretched(const Graph& base, const std::vector<int>& path_len,
                          const Rational& q, const Rational& w, bool zero_variant = false);

// --- satisfiability counting -------------------------------------------------

// Number of satisfying assignments of a monotone 2-CNF (all literals
// positive); with minimum_only, only assignments of minimum Hamming weight
// are counted. Clauses are pairs of variable indices < nvars.
long long count_monotone_2cnf(int nvars, const std::vector<std::pair<int, int>>& clauses,
                              bool minimum_only = false);

// --- polynomial identities, dispatch form -----------------------------------

// Names one member of the polynomial zoo so gadget families and pipelines
// can be generic over their target.
struct PolyId {
  enum class Kind { Matching, IndepSet, ClusterZ, ClusterZ0, PerfMatch, SignedPerm };
  Kind kind = Kind::Matching;
  Rational q{0};  // only meaningful for ClusterZ / ClusterZ0

  static PolyId matching() { return {Kind::Matching, Rational(0)}; }
  static PolyId indep_set() { return {Kind::IndepSet, Rational(0)}; }
  static PolyId cluster_z(const Rational& q) { return {Kind::ClusterZ, q}; }
  static PolyId cluster_z0(const Rational& q) { return {Kind::ClusterZ0, q}; }
  static PolyId perfmatch() { return {Kind::PerfMatch, Rational(0)}; }
  static PolyId signed_perm() { return {Kind::SignedPerm, Rational(0)}; }

  std::string name() const;
};

// Univariate evaluation of the identified polynomial at `point` on an
// unweighted graph.
Rational point_eval(const PolyId& id, const Graph& g, const Rational& point);

// Multivariate evaluation with the graph's stored weights as values.
Rational multivar_eval(const PolyId& id, const Graph& g);

// Coefficient extraction (dispatches to the extractors above).
UniPoly coefficients(const PolyId& id, const Graph& g);

// --- generic matching recursion ----------------------------------------------
//
// Shared engine for matching evaluation over any exact scalar (Rational or
// QuadExt): branch on a minimum-degree vertex u — either u stays uncovered
// (factor x[u]) or it is matched to one of its neighbors.
template <class S>
class MatchingRecursion {
 public:
  MatchingRecursion(const Graph& g, std::vector<S> x)
      : adj_(g.adjacency()),
        x_(std::move(x)),
        alive_(static_cast<std::size_t>(g.n), 1),
        deg_(static_cast<std::size_t>(g.n), 0),
        alive_count_(g.n) {
    for (int v = 0; v < g.n; ++v)
      deg_[static_cast<std::size_t>(v)] = static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  S run(const S& one) {
    one_ = one;
    return rec();
  }

 private:
  S rec() {
    if (alive_count_ == 0) return one_;
    int u = -1, best = INT_MAX;
    for (std::size_t v = 0; v < alive_.size(); ++v)
      if (alive_[v] && deg_[v] < best) {
        best = deg_[v];
        u = static_cast<int>(v);
        if (best == 0) break;
      }
    kill(u);
    S res = x_[static_cast<std::size_t>(u)] * rec();
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (alive_[static_cast<std::size_t>(v)]) {
        kill(v);
        res += rec();
        revive(v);
      }
    revive(u);
    return res;
  }

  void kill(int u) {
    alive_[static_cast<std::size_t>(u)] = 0;
    --alive_count_;
    for (int w : adj_[static_cast<std::size_t>(u)])
      if (alive_[static_cast<std::size_t>(w)]) --deg_[static_cast<std::size_t>(w)];
  }
  void revive(int u) {
    alive_[static_cast<std::size_t>(u)] = 1;
    ++alive_count_;
    for (int w : adj_[static_cast<std::size_t>(u)])
      if (alive_[static_cast<std::size_t>(w)]) ++deg_[static_cast<std::size_t>(w)];
  }

  std::vector<std::vector<int>> adj_;
  std::vector<S> x_;
  S one_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  int alive_count_;
};

}  // namespace gpoly::polyval
