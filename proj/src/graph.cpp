#include "gpoly/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpoly {

namespace {

// Finds the index of `w` in `weight_list` by exact comparison.
int weight_index_of(const Rational& w, const std::vector<Rational>& weight_list,
                    const char* what) {
  for (std::size_t i = 0; i < weight_list.size(); ++i)
    if (weight_list[i] == w) return static_cast<int>(i);
  throw std::invalid_argument(std::string(what) + " weight " + rat_str(w) +
                              " does not occur in the weight list");
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  validate(g);
  return g;
}

void validate(const Graph& g) {
  if (g.n < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
      throw std::invalid_argument("edge " + std::to_string(e) + " endpoint out of range");
    if (u == v) throw std::invalid_argument("edge " + std::to_string(e) + " is a loop");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("parallel edge at index " + std::to_string(e));
  }
  for (const auto& [e, w] : g.edge_weights) {
    (void)w;
    if (e < 0 || e >= g.m())
      throw std::invalid_argument("edge weight index " + std::to_string(e) + " out of range");
  }
  for (const auto& [v, w] : g.vertex_weights) {
    (void)w;
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("vertex weight index " + std::to_string(v) + " out of range");
  }
}

Graph splice_edge_gadgets(const Graph& g, const std::vector<Rational>& weight_list,
                          const std::vector<EdgeGadget>& gadgets) {
  validate(g);
  if (weight_list.size() != gadgets.size())
    throw std::invalid_argument("weight list and gadget list differ in length");
  for (const auto& gd : gadgets) {
    validate(gd.graph);
    if (gd.u < 0 || gd.u >= gd.graph.n || gd.v < 0 || gd.v >= gd.graph.n || gd.u == gd.v)
      throw std::invalid_argument("edge gadget attachment vertices invalid");
  }

  Graph out;
  out.n = g.n;
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edges[static_cast<std::size_t>(e)];
    auto wit = g.edge_weights.find(e);
    if (wit == g.edge_weights.end()) {  // unweighted edges pass through
      out.edges.emplace_back(a, b);
      continue;
    }
    const int idx = weight_index_of(wit->second, weight_list, "edge");
    const EdgeGadget& gd = gadgets[static_cast<std::size_t>(idx)];
    // Map gadget vertices: u -> a, v -> b, interior appended in order.
    std::vector<int> map(static_cast<std::size_t>(gd.graph.n), -1);
    map[static_cast<std::size_t>(gd.u)] = a;
    map[static_cast<std::size_t>(gd.v)] = b;
    for (int x = 0; x < gd.graph.n; ++x)
      if (map[static_cast<std::size_t>(x)] < 0) map[static_cast<std::size_t>(x)] = out.n++;
    for (const auto& [p, q] : gd.graph.edges)
      out.edges.emplace_back(map[static_cast<std::size_t>(p)], map[static_cast<std::size_t>(q)]);
  }
  validate(out);
  return out;
}

Graph splice_vertex_gadgets(const Graph& g, const std::vector<Rational>& weight_list,
                            const std::vector<VertexGadget>& gadgets) {
  validate(g);
  if (weight_list.size() != gadgets.size())
    throw std::invalid_argument("weight list and gadget list differ in length");
  for (const auto& gd : gadgets) {
    validate(gd.graph);
    if (gd.v < 0 || gd.v >= gd.graph.n)
      throw std::invalid_argument("vertex gadget attachment vertex invalid");
  }

  Graph out;
  out.n = g.n;
  out.edges = g.edges;  // host edges survive vertex splicing untouched
  for (int v = 0; v < g.n; ++v) {
    int idx = 0;  // unweighted vertices take the family's identity gadget
    if (auto wit = g.vertex_weights.find(v); wit != g.vertex_weights.end())
      idx = weight_index_of(wit->second, weight_list, "vertex");
    if (idx >= static_cast<int>(gadgets.size()))
      throw std::invalid_argument("vertex gadget index out of range");
    const VertexGadget& gd = gadgets[static_cast<std::size_t>(idx)];
    std::vector<int> map(static_cast<std::size_t>(gd.graph.n), -1);
    map[static_cast<std::size_t>(gd.v)] = v;
    for (int x = 0; x < gd.graph.n; ++x)
      if (map[static_cast<std::size_t>(x)] < 0) map[static_cast<std::size_t>(x)] = out.n++;
    for (const auto& [p, q] : gd.graph.edges)
      out.edges.emplace_back(map[static_cast<std::size_t>(p)], map[static_cast<std::size_t>(q)]);
  }
  validate(out);
  return out;
}

Graph line_graph(const Graph& g) {
  validate(g);
  Graph lg;
  lg.n = g.m();
  for (int e = 0; e < g.m(); ++e)
    for (int f = e + 1; f < g.m(); ++f) {
      auto [a, b] = g.edges[static_cast<std::size_t>(e)];
      auto [c, d] = g.edges[static_cast<std::size_t>(f)];
      if (a == c || a == d || b == c || b == d) lg.edges.emplace_back(e, f);
    }
  return lg;
}

int component_count(const Graph& g, const std::vector<int>& edge_subset) {
  Dsu dsu(g.n);
  int comps = g.n;
  for (int e : edge_subset) {
    if (e < 0 || e >= g.m())
      throw std::invalid_argument("edge index " + std::to_string(e) + " out of range");
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (dsu.unite(u, v)) --comps;
  }
  return comps;
}

int component_count(const Graph& g) {
  Dsu dsu(g.n);
  int comps = g.n;
  for (const auto& [u, v] : g.edges)
    if (dsu.unite(u, v)) --comps;
  return comps;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> color(static_cast<std::size_t>(g.n), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          stack.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Graph g;
  bool have_header = false;
  int declared_m = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank / comment-only line
    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (!have_header) {
      if (tok != "graph") throw std::invalid_argument("expected 'graph <n> <m>' header" + where);
      if (!(ls >> g.n >> declared_m) || g.n < 0 || declared_m < 0)
        throw std::invalid_argument("malformed graph header" + where);
      have_header = true;
      continue;
    }
    if (tok == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw std::invalid_argument("malformed edge line" + where);
      if (g.m() >= declared_m)
        throw std::invalid_argument("more edge lines than declared" + where);
      g.edges.emplace_back(u, v);
      std::string w;
      if (ls >> w) g.edge_weights[g.m() - 1] = rat_parse(w);
    } else if (tok == "v") {
      int i;
      std::string w;
      if (!(ls >> i >> w)) throw std::invalid_argument("malformed vertex weight line" + where);
      if (!g.vertex_weights.emplace(i, rat_parse(w)).second)
        throw std::invalid_argument("duplicate vertex weight" + where);
    } else {
      throw std::invalid_argument("unknown directive '" + tok + "'" + where);
    }
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("trailing tokens" + where);
  }
  if (!have_header) throw std::invalid_argument("missing 'graph <n> <m>' header");
  if (g.m() != declared_m)
    throw std::invalid_argument("edge count mismatch: declared " + std::to_string(declared_m) +
                                ", found " + std::to_string(g.m()));
  validate(g);
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.n << " " << g.m() << "\n";
  for (int e = 0; e < g.m(); ++e) {
    os << "e " << g.edges[static_cast<std::size_t>(e)].first << " "
       << g.edges[static_cast<std::size_t>(e)].second;
    if (auto it = g.edge_weights.find(e); it != g.edge_weights.end())
      os << " " << rat_str(it->second);
    os << "\n";
  }
  for (const auto& [v, w] : g.vertex_weights) os << "v " << v << " " << rat_str(w) << "\n";
  return os.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(path + ": " + ex.what());
  }
}

}  // namespace gpoly
