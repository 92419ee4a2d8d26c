#include "gpoly/gadgets.hpp"

#include <stdexcept>

namespace gpoly::gadgets {

namespace {

constexpr int kMaxWeightIndex = 4096;

int scan_weight_index(const std::function<Rational(int)>& weight_at, const Rational& w,
                      const std::string& family) {
  for (int i = 0; i <= kMaxWeightIndex; ++i)
    if (weight_at(i) == w) return i;
  throw std::invalid_argument("weight " + rat_str(w) + " is not realized by family " + family);
}

}  // namespace

GadgetFamily pm_parallel_family() {
  GadgetFamily fam;
  fam.name = "pm-parallel";
  fam.kind = ElementKind::Edge;
  fam.target = polyval::PolyId::perfmatch();
  fam.point = 1;
  fam.weight_at = [](int i) { return Rational(i + 1); };
  fam.edge_gadget_at = [](int i) {
    // k parallel branches u - a_j - b_j - v: k perfect matchings cover both
    // attachments inside, exactly one covers neither, none covers just one.
    const int k = i + 1;
    EdgeGadget gd;
    gd.graph.n = 2 + 2 * k;
    gd.u = 0;
    gd.v = 1;
    for (int j = 0; j < k; ++j) {
      const int a = 2 + 2 * j, b = 3 + 2 * j;
      gd.graph.edges.emplace_back(0, a);
      gd.graph.edges.emplace_back(a, b);
      gd.graph.edges.emplace_back(b, 1);
    }
    return gd;
  };
  fam.factor_of = [](const Graph&) { return Rational(1); };
  return fam;
}

GadgetFamily mu_pendant_family(const Rational& xi) {
  if (xi == 0) throw std::invalid_argument("matching gadget family needs a nonzero point");
  GadgetFamily fam;
  fam.name = "mu-pendant";
  fam.kind = ElementKind::Vertex;
  fam.target = polyval::PolyId::matching();
  fam.point = xi;
  // A pendant star with t leaves multiplies the host vertex's uncovered
  // term by xi^{t+1} + t*xi^{t-1} and its covered term by xi^t; dividing by
  // xi^t realizes the weight xi + t/xi at the host vertex.
  fam.weight_at = [xi](int t) { return Rational(xi + Rational(t) / xi); };
  fam.vertex_gadget_at = [](int t) {
    VertexGadget gd;
    gd.graph.n = t + 1;
    gd.v = 0;
    for (int leaf = 1; leaf <= t; ++leaf) gd.graph.edges.emplace_back(0, leaf);
    return gd;
  };
  const auto weight_at = fam.weight_at;
  const std::string name = fam.name;
  fam.factor_of = [xi, weight_at, name](const Graph& g) {
    long total = 0;
    for (const auto& [v, w] : g.vertex_weights) {
      (void)v;
      total += scan_weight_index(weight_at, w, name);
    }
    return rat_pow(xi, total);
  };
  return fam;
}

GadgetFamily tutte_stretch_family(const Rational& q, const Rational& w) {
  if (w == 0) throw std::invalid_argument("stretch family needs w != 0");
  if (q != 0 && (q == -w || q == -2 * w))
    throw std::invalid_argument("stretch family needs q outside {-w, -2w}");
  GadgetFamily fam;
  fam.name = "tutte-stretch";
  fam.kind = ElementKind::Edge;
  fam.target = q == 0 ? polyval::PolyId::cluster_z0(q) : polyval::PolyId::cluster_z(q);
  fam.point = w;
  if (q == 0) {
    fam.weight_at = [w](int i) { return Rational(w / (i + 1)); };
  } else {
    const Rational r = 1 + q / w;  // r^k != 1 for all k >= 1 by the hypotheses
    fam.weight_at = [q, r](int i) { return Rational(q / (rat_pow(r, i + 1) - 1)); };
  }
  fam.edge_gadget_at = [](int i) {
    const int k = i + 1;  // path with k edges between the attachments
    EdgeGadget gd;
    gd.graph.n = k + 1;
    gd.u = 0;
    gd.v = k;
    for (int j = 0; j < k; ++j) gd.graph.edges.emplace_back(j, j + 1);
    return gd;
  };
  const auto weight_at = fam.weight_at;
  const std::string name = fam.name;
  fam.factor_of = [q, w, weight_at, name](const Graph& g) {
    Rational f(1);
    for (const auto& [e, val] : g.edge_weights) {
      (void)e;
      const int k = scan_weight_index(weight_at, val, name) + 1;
      if (q == 0)
        f *= Rational(k) * rat_pow(w, k - 1);
      else
        f *= (rat_pow(q + w, k) - rat_pow(w, k)) / q;
    }
    return f;
  };
  fam.transformed_eval = [q, w, weight_at, name](const Graph& g) {
    // Evaluate Z(T(g)) through the structured path kernel instead of
    // materializing T: the subset walk stays on the base edges.
    std::vector<int> path_len;
    for (int e = 0; e < g.m(); ++e) {
      int k = 1;
      if (auto it = g.edge_weights.find(e); it != g.edge_weights.end())
        k = scan_weight_index(weight_at, it->second, name) + 1;
      path_len.push_back(k);
    }
    Graph skeleton = g;
    skeleton.edge_weights.clear();
    return polyval::z_eval_stretched(skeleton, path_len, q, w, q == 0);
  };
  return fam;
}

int weight_index(const GadgetFamily& fam, const Rational& w) {
  return scan_weight_index(fam.weight_at, w, fam.name);
}

Graph transform(const GadgetFamily& fam, const Graph& g) {
  validate(g);
  int top = -1;
  if (fam.kind == ElementKind::Edge) {
    if (!g.vertex_weights.empty())
      throw std::invalid_argument("family " + fam.name + " carries weights on edges only");
    for (const auto& [e, w] : g.edge_weights) {
      (void)e;
      top = std::max(top, weight_index(fam, w));
    }
  } else {
    if (!g.edge_weights.empty())
      throw std::invalid_argument("family " + fam.name + " carries weights on vertices only");
    top = std::max(top, 0);  // the identity gadget backs unweighted vertices
    for (const auto& [v, w] : g.vertex_weights) {
      (void)v;
      top = std::max(top, weight_index(fam, w));
    }
  }
  std::vector<Rational> weights;
  for (int i = 0; i <= top; ++i) weights.push_back(fam.weight_at(i));
  if (fam.kind == ElementKind::Edge) {
    std::vector<EdgeGadget> gads;
    for (int i = 0; i <= top; ++i) gads.push_back(fam.edge_gadget_at(i));
    return splice_edge_gadgets(g, weights, gads);
  }
  std::vector<VertexGadget> gads;
  for (int i = 0; i <= top; ++i) gads.push_back(fam.vertex_gadget_at(i));
  return splice_vertex_gadgets(g, weights, gads);
}

Rational simulated_value(const GadgetFamily& fam, const Graph& g) {
  Rational value;
  if (fam.transformed_eval) {
    value = fam.transformed_eval(g);
  } else {
    const Graph t = transform(fam, g);
    // The spliced graph is structurally benign (pendant stars / short
    // branches), so lift the size guard for its evaluation.
    polyval::EnumGuardBypass lift;
    value = polyval::point_eval(fam.target, t, fam.point);
  }
  const Rational f = fam.factor_of(g);
  if (f == 0) throw std::logic_error("gadget factor vanished");
  return value / f;
}

SimulationCheck check_simulation(const GadgetFamily& fam, const Graph& g) {
  validate(g);
  Graph filled = g;  // absent weights read as the identity weight
  if (fam.kind == ElementKind::Edge) {
    if (!g.vertex_weights.empty())
      throw std::invalid_argument("family " + fam.name + " carries weights on edges only");
    for (int e = 0; e < g.m(); ++e)
      if (!filled.edge_weights.count(e)) filled.edge_weights[e] = fam.weight_at(0);
  } else {
    if (!g.edge_weights.empty())
      throw std::invalid_argument("family " + fam.name + " carries weights on vertices only");
    for (int v = 0; v < g.n; ++v)
      if (!filled.vertex_weights.count(v)) filled.vertex_weights[v] = fam.weight_at(0);
  }
  SimulationCheck out;
  out.direct = polyval::multivar_eval(fam.target, filled);
  out.simulated = simulated_value(fam, g);
  out.ok = out.direct == out.simulated;
  return out;
}

}  // namespace gpoly::gadgets
