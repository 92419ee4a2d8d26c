#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpoly/rational.hpp"

namespace gpoly {

// Finite simple undirected graph with optional exact rational weights on
// edges and vertices. An absent weight means "unweighted"; evaluators treat
// unweighted elements as carrying weight 1 unless documented otherwise.
struct Graph {
  int n = 0;                                // vertices are 0..n-1
  std::vector<std::pair<int, int>> edges;   // endpoints stored as given
  std::map<int, Rational> edge_weights;     // edge index -> weight
  std::map<int, Rational> vertex_weights;   // vertex index -> weight

  int m() const { return static_cast<int>(edges.size()); }

  Rational edge_weight(int e) const {
    auto it = edge_weights.find(e);
    return it == edge_weights.end() ? Rational(1) : it->second;
  }
  Rational vertex_weight(int v) const {
    auto it = vertex_weights.find(v);
    return it == vertex_weights.end() ? Rational(1) : it->second;
  }

  std::vector<std::vector<int>> adjacency() const;  // neighbor lists
};

Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Structural invariants: endpoint range, no loops, no parallel edges,
// weight keys in range. Throws std::invalid_argument with a reason.
void validate(const Graph& g);

// Gadget to be spliced at an edge: a graph plus two attachment vertices.
// Splicing removes the host edge {a,b} and glues u -> a, v -> b.
struct EdgeGadget {
  Graph graph;
  int u = 0;
  int v = 0;
};

// Gadget to be spliced at a vertex: glued by identifying `v` with the host
// vertex; the rest of the gadget is appended.
struct VertexGadget {
  Graph graph;
  int v = 0;
};

// Replace every weighted edge of g by the gadget for its weight's index in
// weight_list (exact value match required). Unweighted edges are kept
// verbatim. Original vertices keep their indices; gadget-interior vertices
// are appended in ascending edge-index order. The result is unweighted.
Graph splice_edge_gadgets(const Graph& g, const std::vector<Rational>& weight_list,
                          const std::vector<EdgeGadget>& gadgets);

// Vertex analog. Unweighted vertices receive the index-0 gadget (families
// make that the identity: a bare vertex).
Graph splice_vertex_gadgets(const Graph& g, const std::vector<Rational>& weight_list,
                            const std::vector<VertexGadget>& gadgets);

// Line graph L(g): one vertex per edge of g, adjacency = shared endpoint.
// Weights are dropped.
Graph line_graph(const Graph& g);

// Number of connected components of (V, subset); vertices outside every
// chosen edge count as singleton components. Edge indices must be in range.
int component_count(const Graph& g, const std::vector<int>& edge_subset);

int component_count(const Graph& g);  // all edges

// Two-coloring if one exists (color[v] in {0,1}, color 0 for the least
// vertex of each component); std::nullopt when any odd cycle exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

bool is_bipartite(const Graph& g);

// Text format:
//   graph <n> <m>
//   e <u> <v> [<weight>]
//   v <i> <weight>
// Weights are "num" or "num/den". '#' starts a comment; blank lines are
// ignored. Exactly m edge lines are required.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

}  // namespace gpoly
