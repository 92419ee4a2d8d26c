#include "gpoly/polyval.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace gpoly::polyval {

// --- guardrails --------------------------------------------------------------

namespace {

std::atomic<bool> g_force{false};
thread_local int g_bypass_depth = 0;
thread_local long long g_extractor_calls = 0;

void check_enum_size(const char* what, int size) {
  if (size <= kEnumLimit) return;
  if (g_force.load(std::memory_order_relaxed) || g_bypass_depth > 0) return;
  throw std::invalid_argument(std::string("refusing ") + what + " with size " +
                              std::to_string(size) + " > " + std::to_string(kEnumLimit) +
                              " (enable the force override to proceed)");
}

void require_no_vertex_weights(const Graph& g, const char* what) {
  if (!g.vertex_weights.empty())
    throw std::invalid_argument(std::string(what) + " does not accept vertex weights");
}

void require_no_edge_weights(const Graph& g, const char* what) {
  if (!g.edge_weights.empty())
    throw std::invalid_argument(std::string(what) + " does not accept edge weights");
}

}  // namespace

void set_force_enumeration(bool on) { g_force.store(on, std::memory_order_relaxed); }

void ensure_enumerable(const char* what, int size) { check_enum_size(what, size); }

EnumGuardBypass::EnumGuardBypass() { ++g_bypass_depth; }
EnumGuardBypass::~EnumGuardBypass() { --g_bypass_depth; }

long long extractor_calls() { return g_extractor_calls; }

// --- shared recursion helpers -------------------------------------------------

namespace {

// Union-find with undo and no path compression, for subset enumeration.
struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<int> trail;

  explicit RollbackDsu(int n)
      : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) const {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    trail.push_back(b);
    return true;
  }
  void undo() {
    const int b = trail.back();
    trail.pop_back();
    const int a = parent[static_cast<std::size_t>(b)];
    size[static_cast<std::size_t>(a)] -= size[static_cast<std::size_t>(b)];
    parent[static_cast<std::size_t>(b)] = b;
  }
};

// cnt[k][s] = number of edge subsets with s edges and k components
// (isolated vertices included).
std::vector<std::vector<unsigned long>> z_counts(const Graph& g) {
  struct Rec {
    const Graph& g;
    RollbackDsu dsu;
    std::vector<std::vector<unsigned long>> cnt;
    Rec(const Graph& gg)
        : g(gg),
          dsu(gg.n),
          cnt(static_cast<std::size_t>(gg.n) + 1,
              std::vector<unsigned long>(static_cast<std::size_t>(gg.m()) + 1, 0)) {}
    void run(int e, int comps, int used) {
      if (e == g.m()) {
        ++cnt[static_cast<std::size_t>(comps)][static_cast<std::size_t>(used)];
        return;
      }
      run(e + 1, comps, used);
      auto [u, v] = g.edges[static_cast<std::size_t>(e)];
      const bool merged = dsu.unite(u, v);
      run(e + 1, comps - (merged ? 1 : 0), used + 1);
      if (merged) dsu.undo();
    }
  };
  Rec rec(g);
  rec.run(0, g.n, 0);
  return rec.cnt;
}

// acc[k] = sum over edge subsets with k components of the product of
// member edge weights.
std::vector<Rational> z_weighted_sums(const Graph& g) {
  struct Rec {
    const Graph& g;
    RollbackDsu dsu;
    std::vector<Rational> weights;
    std::vector<Rational> acc;
    Rec(const Graph& gg) : g(gg), dsu(gg.n), acc(static_cast<std::size_t>(gg.n) + 1, Rational(0)) {
      weights.reserve(static_cast<std::size_t>(gg.m()));
      for (int e = 0; e < gg.m(); ++e) weights.push_back(gg.edge_weight(e));
    }
    void run(int e, int comps, const Rational& prod) {
      if (e == g.m()) {
        acc[static_cast<std::size_t>(comps)] += prod;
        return;
      }
      run(e + 1, comps, prod);
      auto [u, v] = g.edges[static_cast<std::size_t>(e)];
      const bool merged = dsu.unite(u, v);
      run(e + 1, comps - (merged ? 1 : 0), prod * weights[static_cast<std::size_t>(e)]);
      if (merged) dsu.undo();
    }
  };
  Rec rec(g);
  rec.run(0, g.n, Rational(1));
  return rec.acc;
}

// Enumerates matchings grouped by the number of uncovered vertices.
struct MatchingCounts {
  std::vector<std::vector<int>> adj;
  std::vector<char> alive;
  std::vector<int> deg;
  int alive_count;
  int defect = 0;
  std::vector<Integer> acc;

  explicit MatchingCounts(const Graph& g)
      : adj(g.adjacency()),
        alive(static_cast<std::size_t>(g.n), 1),
        deg(static_cast<std::size_t>(g.n), 0),
        alive_count(g.n),
        acc(static_cast<std::size_t>(g.n) + 1, Integer(0)) {
    for (int v = 0; v < g.n; ++v)
      deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  }

  void kill(int u) {
    alive[static_cast<std::size_t>(u)] = 0;
    --alive_count;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  void revive(int u) {
    alive[static_cast<std::size_t>(u)] = 1;
    ++alive_count;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) ++deg[static_cast<std::size_t>(w)];
  }

  void rec() {
    if (alive_count == 0) {
      ++acc[static_cast<std::size_t>(defect)];
      return;
    }
    int u = -1, best = INT_MAX;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v] && deg[v] < best) {
        best = deg[v];
        u = static_cast<int>(v);
        if (best == 0) break;
      }
    kill(u);
    ++defect;
    rec();
    --defect;
    for (int v : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(v)]) {
        kill(v);
        rec();
        revive(v);
      }
    revive(u);
  }
};

// Enumerates independent sets grouped by size.
struct IndepCounts {
  std::vector<std::vector<int>> adj;
  std::vector<char> alive;
  std::vector<int> deg;
  int alive_count;
  int members = 0;
  std::vector<Integer> acc;

  explicit IndepCounts(const Graph& g)
      : adj(g.adjacency()),
        alive(static_cast<std::size_t>(g.n), 1),
        deg(static_cast<std::size_t>(g.n), 0),
        alive_count(g.n),
        acc(static_cast<std::size_t>(g.n) + 1, Integer(0)) {
    for (int v = 0; v < g.n; ++v)
      deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  }

  void kill(int u) {
    alive[static_cast<std::size_t>(u)] = 0;
    --alive_count;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  void revive(int u) {
    alive[static_cast<std::size_t>(u)] = 1;
    ++alive_count;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) ++deg[static_cast<std::size_t>(w)];
  }

  void rec() {
    if (alive_count == 0) {
      ++acc[static_cast<std::size_t>(members)];
      return;
    }
    int u = -1, best = -1;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v] && deg[v] > best) {
        best = deg[v];
        u = static_cast<int>(v);
      }
    kill(u);
    rec();  // u excluded
    // u included: its alive neighbors are excluded as well
    std::vector<int> removed;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) {
        kill(w);
        removed.push_back(w);
      }
    ++members;
    rec();
    --members;
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) revive(*it);
    revive(u);
  }
};

// Weighted independent-set evaluation (same branching, carries a product).
struct IndepEval {
  std::vector<std::vector<int>> adj;
  std::vector<Rational> x;
  std::vector<char> alive;
  std::vector<int> deg;
  int alive_count;

  IndepEval(const Graph& g, std::vector<Rational> xs)
      : adj(g.adjacency()),
        x(std::move(xs)),
        alive(static_cast<std::size_t>(g.n), 1),
        deg(static_cast<std::size_t>(g.n), 0),
        alive_count(g.n) {
    for (int v = 0; v < g.n; ++v)
      deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  }

  void kill(int u) {
    alive[static_cast<std::size_t>(u)] = 0;
    --alive_count;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  void revive(int u) {
    alive[static_cast<std::size_t>(u)] = 1;
    ++alive_count;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) ++deg[static_cast<std::size_t>(w)];
  }

  Rational rec() {
    if (alive_count == 0) return Rational(1);
    int u = -1, best = -1;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v] && deg[v] > best) {
        best = deg[v];
        u = static_cast<int>(v);
      }
    kill(u);
    Rational res = rec();
    std::vector<int> removed;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) {
        kill(w);
        removed.push_back(w);
      }
    res += x[static_cast<std::size_t>(u)] * rec();
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) revive(*it);
    revive(u);
    return res;
  }
};

// Perfect-matching enumeration: evaluates the weighted count, or tallies
// matchings by how many marked edges they use when `marks` is provided.
struct PerfMatchRec {
  const Graph& g;
  std::vector<std::vector<int>> adj;
  std::vector<Rational> wmat;       // row-major edge weights, 1 by default
  std::vector<signed char> marked;  // row-major 0/1, only with marks
  std::vector<char> alive;
  std::vector<int> deg;
  int alive_count;
  int marks_used = 0;
  std::vector<Integer> acc;  // only with marks

  PerfMatchRec(const Graph& gg, bool with_marks)
      : g(gg),
        adj(gg.adjacency()),
        alive(static_cast<std::size_t>(gg.n), 1),
        deg(static_cast<std::size_t>(gg.n), 0),
        alive_count(gg.n) {
    const std::size_t n = static_cast<std::size_t>(g.n);
    for (int v = 0; v < g.n; ++v)
      deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (with_marks) {
      marked.assign(n * n, 0);
      acc.assign(n / 2 + 1, Integer(0));
    } else {
      wmat.assign(n * n, Rational(1));
    }
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges[static_cast<std::size_t>(e)];
      const Rational w = g.edge_weight(e);
      if (with_marks) {
        if (w != 1 && w != -1)
          throw std::invalid_argument("edge weights must be 1 or -1 (edge " + std::to_string(e) +
                                      " carries " + rat_str(w) + ")");
        if (w == -1) marked[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] =
            marked[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
      } else {
        wmat[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = w;
        wmat[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = w;
      }
    }
  }

  void kill(int u) {
    alive[static_cast<std::size_t>(u)] = 0;
    --alive_count;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  void revive(int u) {
    alive[static_cast<std::size_t>(u)] = 1;
    ++alive_count;
    for (int w : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(w)]) ++deg[static_cast<std::size_t>(w)];
  }

  int pick() const {
    int u = -1, best = INT_MAX;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v] && deg[v] < best) {
        best = deg[v];
        u = static_cast<int>(v);
        if (best == 0) break;
      }
    return u;
  }

  Rational eval() {
    if (alive_count == 0) return Rational(1);
    const int u = pick();
    if (deg[static_cast<std::size_t>(u)] == 0) return Rational(0);
    kill(u);
    Rational res(0);
    const std::size_t n = static_cast<std::size_t>(g.n);
    for (int v : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(v)]) {
        kill(v);
        Rational sub = eval();
        if (sub != 0) res += wmat[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] * sub;
        revive(v);
      }
    revive(u);
    return res;
  }

  void tally() {
    if (alive_count == 0) {
      ++acc[static_cast<std::size_t>(marks_used)];
      return;
    }
    const int u = pick();
    if (deg[static_cast<std::size_t>(u)] == 0) return;
    kill(u);
    const std::size_t n = static_cast<std::size_t>(g.n);
    for (int v : adj[static_cast<std::size_t>(u)])
      if (alive[static_cast<std::size_t>(v)]) {
        kill(v);
        const int m = marked[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
        marks_used += m;
        tally();
        marks_used -= m;
        revive(v);
      }
    revive(u);
  }
};

std::vector<Rational> pow_table(const Rational& base, int top) {
  std::vector<Rational> t(static_cast<std::size_t>(top) + 1);
  t[0] = 1;
  for (int i = 1; i <= top; ++i)
    t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * base;
  return t;
}

}  // namespace

// --- extractors ----------------------------------------------------------------

UniPoly matching_poly(const Graph& g) {
  validate(g);
  require_no_vertex_weights(g, "matching_poly");
  require_no_edge_weights(g, "matching_poly");
  check_enum_size("matching enumeration", g.n);
  ++g_extractor_calls;
  MatchingCounts mc(g);
  mc.rec();
  std::vector<Rational> coeffs;
  coeffs.reserve(mc.acc.size());
  for (const Integer& c : mc.acc) coeffs.emplace_back(c);
  return UniPoly(std::move(coeffs));
}

UniPoly indep_poly(const Graph& g) {
  validate(g);
  require_no_vertex_weights(g, "indep_poly");
  require_no_edge_weights(g, "indep_poly");
  check_enum_size("independent-set enumeration", g.n);
  ++g_extractor_calls;
  IndepCounts ic(g);
  ic.rec();
  std::vector<Rational> coeffs;
  coeffs.reserve(ic.acc.size());
  for (const Integer& c : ic.acc) coeffs.emplace_back(c);
  return UniPoly(std::move(coeffs));
}

UniPoly z_poly(const Graph& g, const Rational& q) {
  validate(g);
  require_no_edge_weights(g, "z_poly");
  require_no_vertex_weights(g, "z_poly");
  check_enum_size("edge-subset enumeration", g.m());
  ++g_extractor_calls;
  const auto cnt = z_counts(g);
  const auto qpow = pow_table(q, g.n);
  UniPoly out;
  out.coeffs.assign(static_cast<std::size_t>(g.m()) + 1, Rational(0));
  for (int k = 0; k <= g.n; ++k)
    for (int s = 0; s <= g.m(); ++s) {
      const auto c = cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      if (c) out.coeffs[static_cast<std::size_t>(s)] += Rational(Integer(c)) * qpow[static_cast<std::size_t>(k)];
    }
  return out;
}

UniPoly z0_poly(const Graph& g, const Rational& q) {
  validate(g);
  require_no_edge_weights(g, "z0_poly");
  require_no_vertex_weights(g, "z0_poly");
  check_enum_size("edge-subset enumeration", g.m());
  ++g_extractor_calls;
  const auto cnt = z_counts(g);
  const int base = component_count(g);
  UniPoly out;
  out.coeffs.assign(static_cast<std::size_t>(g.m()) + 1, Rational(0));
  for (int k = base; k <= g.n; ++k) {
    Rational scale;
    if (q == 0) {
      if (k != base) continue;
      scale = 1;
    } else {
      scale = rat_pow(q, k - base);
    }
    for (int s = 0; s <= g.m(); ++s) {
      const auto c = cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      if (c) out.coeffs[static_cast<std::size_t>(s)] += Rational(Integer(c)) * scale;
    }
  }
  return out;
}

UniPoly signed_perm_poly(const Graph& g) {
  validate(g);
  require_no_vertex_weights(g, "signed_perm_poly");
  check_enum_size("perfect-matching enumeration", g.n);
  ++g_extractor_calls;
  PerfMatchRec pm(g, /*with_marks=*/true);
  pm.tally();
  std::vector<Rational> coeffs;
  coeffs.reserve(pm.acc.size());
  for (const Integer& c : pm.acc) coeffs.emplace_back(c);
  return UniPoly(std::move(coeffs));
}

// --- point evaluators ------------------------------------------------------------

Rational matching_eval(const Graph& g, const Rational& xi) {
  validate(g);
  require_no_vertex_weights(g, "matching_eval");
  require_no_edge_weights(g, "matching_eval");
  check_enum_size("matching enumeration", g.n);
  MatchingRecursion<Rational> rec(g, std::vector<Rational>(static_cast<std::size_t>(g.n), xi));
  return rec.run(Rational(1));
}

Rational indep_eval(const Graph& g, const Rational& xi) {
  validate(g);
  require_no_vertex_weights(g, "indep_eval");
  require_no_edge_weights(g, "indep_eval");
  check_enum_size("independent-set enumeration", g.n);
  IndepEval rec(g, std::vector<Rational>(static_cast<std::size_t>(g.n), xi));
  return rec.rec();
}

Rational z_eval(const Graph& g, const Rational& q, const Rational& w, bool zero_variant) {
  validate(g);
  require_no_edge_weights(g, "z_eval");
  require_no_vertex_weights(g, "z_eval");
  check_enum_size("edge-subset enumeration", g.m());
  const auto cnt = z_counts(g);
  const auto wpow = pow_table(w, g.m());
  const int base = component_count(g);
  Rational total(0);
  for (int k = 0; k <= g.n; ++k) {
    Rational scale;
    if (zero_variant) {
      if (q == 0) {
        if (k != base) continue;
        scale = 1;
      } else {
        scale = rat_pow(q, k - base);
      }
    } else {
      scale = rat_pow(q, k);  // 0^0 = 1 covers the edgeless k = 0 case
    }
    for (int s = 0; s <= g.m(); ++s) {
      const auto c = cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      if (c) total += Rational(Integer(c)) * scale * wpow[static_cast<std::size_t>(s)];
    }
  }
  return total;
}

Rational tutte_eval(const Graph& g, const Rational& x, const Rational& y) {
  validate(g);
  require_no_edge_weights(g, "tutte_eval");
  require_no_vertex_weights(g, "tutte_eval");
  check_enum_size("edge-subset enumeration", g.m());
  const auto cnt = z_counts(g);
  const int base = component_count(g);
  // exponents: (x-1)^{k - base} and (y-1)^{k + s - n}, both nonnegative
  const auto xpow = pow_table(x - 1, g.n);
  const auto ypow = pow_table(y - 1, g.n + g.m());
  Rational total(0);
  for (int k = base; k <= g.n; ++k)
    for (int s = 0; s <= g.m(); ++s) {
      const auto c = cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      if (!c) continue;
      total += Rational(Integer(c)) * xpow[static_cast<std::size_t>(k - base)] *
               ypow[static_cast<std::size_t>(k + s - g.n)];
    }
  return total;
}

// --- multivariate evaluators ---------------------------------------------------

Rational matching_multivar_eval(const Graph& g) {
  validate(g);
  require_no_edge_weights(g, "matching_multivar_eval");
  check_enum_size("matching enumeration", g.n);
  std::vector<Rational> x;
  x.reserve(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) x.push_back(g.vertex_weight(v));
  MatchingRecursion<Rational> rec(g, std::move(x));
  return rec.run(Rational(1));
}

Rational indep_multivar_eval(const Graph& g) {
  validate(g);
  require_no_edge_weights(g, "indep_multivar_eval");
  check_enum_size("independent-set enumeration", g.n);
  std::vector<Rational> x;
  x.reserve(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) x.push_back(g.vertex_weight(v));
  IndepEval rec(g, std::move(x));
  return rec.rec();
}

Rational z_multivar_eval(const Graph& g, const Rational& q, bool zero_variant) {
  validate(g);
  require_no_vertex_weights(g, "z_multivar_eval");
  check_enum_size("edge-subset enumeration", g.m());
  const auto acc = z_weighted_sums(g);
  const int base = component_count(g);
  Rational total(0);
  for (int k = 0; k <= g.n; ++k) {
    if (acc[static_cast<std::size_t>(k)] == 0) continue;
    Rational scale;
    if (zero_variant) {
      if (q == 0) {
        if (k != base) continue;
        scale = 1;
      } else {
        scale = rat_pow(q, k - base);
      }
    } else {
      scale = rat_pow(q, k);
    }
    total += acc[static_cast<std::size_t>(k)] * scale;
  }
  return total;
}

Rational perfmatch_eval(const Graph& g) {
  validate(g);
  require_no_vertex_weights(g, "perfmatch_eval");
  check_enum_size("perfect-matching enumeration", g.n);
  if (g.n % 2 != 0) return Rational(0);
  PerfMatchRec pm(g, /*with_marks=*/false);
  return pm.eval();
}

// --- structured Z kernel ---------------------------------------------------------

Rational z_eval_stretched(const Graph& base, const std::vector<int>& path_len,
                          const Rational& q, const Rational& w, bool zero_variant) {
  validate(base);
  require_no_edge_weights(base, "z_eval_stretched");
  require_no_vertex_weights(base, "z_eval_stretched");
  if (static_cast<int>(path_len.size()) != base.m())
    throw std::invalid_argument("path length list must cover every edge");
  check_enum_size("edge-subset enumeration", base.m());
  for (int k : path_len) {
    if (k < 1) throw std::invalid_argument("path lengths must be >= 1");
    check_enum_size("path-subset enumeration", k);
  }
  const int full_comps = component_count(base);  // subdividing preserves this

  if (q == 0 && !zero_variant) return Rational(base.n == 0 ? 1 : 0);

  if (q == 0) {
    // Only subsets with components(A) == components(E) survive: every
    // replaced path is either fully present or missing exactly one edge
    // (k ways, leaving no stray internal vertex), and the fully present
    // paths must already realize the full connectivity.
    std::vector<Rational> incl, excl;
    for (int k : path_len) {
      incl.push_back(rat_pow(w, k));
      excl.push_back(Rational(k) * rat_pow(w, k - 1));
    }
    struct Rec {
      const Graph& g;
      const std::vector<Rational>& incl;
      const std::vector<Rational>& excl;
      int target;
      RollbackDsu dsu;
      Rational total{0};
      Rec(const Graph& gg, const std::vector<Rational>& i, const std::vector<Rational>& x, int t)
          : g(gg), incl(i), excl(x), target(t), dsu(gg.n) {}
      void run(int e, int comps, const Rational& prod) {
        if (e == g.m()) {
          if (comps == target) total += prod;
          return;
        }
        run(e + 1, comps, prod * excl[static_cast<std::size_t>(e)]);
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        const bool merged = dsu.unite(u, v);
        run(e + 1, comps - (merged ? 1 : 0), prod * incl[static_cast<std::size_t>(e)]);
        if (merged) dsu.undo();
      }
    };
    Rec rec(base, incl, excl, full_comps);
    rec.run(0, base.n, Rational(1));
    return rec.total;
  }

  // q != 0. For each replaced path, a subset either contains every edge
  // (connecting the endpoints, weight w^k) or is a proper subset; proper
  // subsets never connect the endpoints and contribute q^{c} where c counts
  // the components formed strictly inside the path (runs touching neither
  // endpoint, plus uncovered internal vertices).
  std::vector<Rational> full, partial;
  for (int k : path_len) {
    full.push_back(rat_pow(w, k));
    Rational p(0);
    const auto wp = pow_table(w, k);
    for (unsigned long sub = 0; sub + 1 < (1ul << k); ++sub) {  // all proper subsets
      int inner = 0;
      // runs of present edges that touch neither endpoint
      for (int i = 0; i < k;) {
        if (!(sub >> i & 1)) {
          ++i;
          continue;
        }
        int j = i;
        while (j + 1 < k && (sub >> (j + 1) & 1)) ++j;
        if (i > 0 && j < k - 1) ++inner;
        i = j + 1;
      }
      // internal path vertices with both incident edges absent
      for (int t = 1; t < k; ++t)
        if (!(sub >> (t - 1) & 1) && !(sub >> t & 1)) ++inner;
      p += wp[static_cast<std::size_t>(std::popcount(sub))] * rat_pow(q, inner);
    }
    partial.push_back(p);
  }
  struct Rec {
    const Graph& g;
    const std::vector<Rational>& full;
    const std::vector<Rational>& partial;
    const std::vector<Rational>& qpow;
    RollbackDsu dsu;
    Rational total{0};
    Rec(const Graph& gg, const std::vector<Rational>& f, const std::vector<Rational>& p,
        const std::vector<Rational>& qp)
        : g(gg), full(f), partial(p), qpow(qp), dsu(gg.n) {}
    void run(int e, int comps, const Rational& prod) {
      if (e == g.m()) {
        total += qpow[static_cast<std::size_t>(comps)] * prod;
        return;
      }
      run(e + 1, comps, prod * partial[static_cast<std::size_t>(e)]);
      auto [u, v] = g.edges[static_cast<std::size_t>(e)];
      const bool merged = dsu.unite(u, v);
      run(e + 1, comps - (merged ? 1 : 0), prod * full[static_cast<std::size_t>(e)]);
      if (merged) dsu.undo();
    }
  };
  const auto qpow = pow_table(q, base.n);
  Rec rec(base, full, partial, qpow);
  rec.run(0, base.n, Rational(1));
  return zero_variant ? Rational(rec.total / rat_pow(q, full_comps)) : rec.total;
}

// --- satisfiability counting ------------------------------------------------------

long long count_monotone_2cnf(int nvars, const std::vector<std::pair<int, int>>& clauses,
                              bool minimum_only) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
  if (nvars > 62) throw std::invalid_argument("assignment enumeration capped at 62 variables");
  check_enum_size("assignment enumeration", nvars);
  std::vector<unsigned long> masks;
  masks.reserve(clauses.size());
  for (const auto& [a, b] : clauses) {
    if (a < 0 || a >= nvars || b < 0 || b >= nvars)
      throw std::invalid_argument("clause variable out of range");
    masks.push_back((1ul << a) | (1ul << b));
  }
  long long count = 0;
  int best = nvars + 1;
  for (unsigned long assign = 0; assign < (1ul << nvars); ++assign) {
    bool ok = true;
    for (unsigned long m : masks)
      if (!(assign & m)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (!minimum_only) {
      ++count;
      continue;
    }
    const int weight = std::popcount(assign);
    if (weight < best) {
      best = weight;
      count = 1;
    } else if (weight == best) {
      ++count;
    }
  }
  return count;
}

// --- dispatch -----------------------------------------------------------------------

std::string PolyId::name() const {
  switch (kind) {
    case Kind::Matching:
      return "matching";
    case Kind::IndepSet:
      return "indep-set";
    case Kind::ClusterZ:
      return "cluster-z(q=" + rat_str(q) + ")";
    case Kind::ClusterZ0:
      return "cluster-z0(q=" + rat_str(q) + ")";
    case Kind::PerfMatch:
      return "perfect-matching";
    case Kind::SignedPerm:
      return "signed-perm";
  }
  return "?";
}

Rational point_eval(const PolyId& id, const Graph& g, const Rational& point) {
  switch (id.kind) {
    case PolyId::Kind::Matching:
      return matching_eval(g, point);
    case PolyId::Kind::IndepSet:
      return indep_eval(g, point);
    case PolyId::Kind::ClusterZ:
      return z_eval(g, id.q, point);
    case PolyId::Kind::ClusterZ0:
      return z_eval(g, id.q, point, true);
    case PolyId::Kind::PerfMatch: {
      require_no_edge_weights(g, "perfect-matching point evaluation");
      if (g.n % 2 != 0) return Rational(0);
      return perfmatch_eval(g) * rat_pow(point, g.n / 2);
    }
    case PolyId::Kind::SignedPerm:
      throw std::invalid_argument("signed-perm has no unweighted point evaluation");
  }
  throw std::logic_error("unreachable");
}

Rational multivar_eval(const PolyId& id, const Graph& g) {
  switch (id.kind) {
    case PolyId::Kind::Matching:
      return matching_multivar_eval(g);
    case PolyId::Kind::IndepSet:
      return indep_multivar_eval(g);
    case PolyId::Kind::ClusterZ:
      return z_multivar_eval(g, id.q);
    case PolyId::Kind::ClusterZ0:
      return z_multivar_eval(g, id.q, true);
    case PolyId::Kind::PerfMatch:
    case PolyId::Kind::SignedPerm:
      return perfmatch_eval(g);
  }
  throw std::logic_error("unreachable");
}

UniPoly coefficients(const PolyId& id, const Graph& g) {
  switch (id.kind) {
    case PolyId::Kind::Matching:
      return matching_poly(g);
    case PolyId::Kind::IndepSet:
      return indep_poly(g);
    case PolyId::Kind::ClusterZ:
      return z_poly(g, id.q);
    case PolyId::Kind::ClusterZ0:
      return z0_poly(g, id.q);
    case PolyId::Kind::PerfMatch: {
      require_no_edge_weights(g, "perfect-matching coefficients");
      check_enum_size("perfect-matching enumeration", g.n);
      ++g_extractor_calls;
      UniPoly out;
      if (g.n % 2 == 0) {
        PerfMatchRec pm(g, false);
        out.coeffs.assign(static_cast<std::size_t>(g.n / 2) + 1, Rational(0));
        out.coeffs[static_cast<std::size_t>(g.n / 2)] = pm.eval();
      }
      return out;
    }
    case PolyId::Kind::SignedPerm:
      return signed_perm_poly(g);
  }
  throw std::logic_error("unreachable");
}

}  // namespace gpoly::polyval
