#pragma once

// Shared test helpers: named small graphs, exhaustive non-isomorphic graph
// corpora, and seeded random instance generators.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "gpoly/graph.hpp"
#include "gpoly/rational.hpp"

namespace corpus {

using gpoly::Graph;

inline Graph make(int n, std::vector<std::pair<int, int>> edges) {
  return gpoly::make_graph(n, std::move(edges));
}

inline Graph k2() { return make(2, {{0, 1}}); }
inline Graph k3() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph p3() { return make(3, {{0, 1}, {1, 2}}); }
inline Graph p4() { return make(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph c4() { return make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Graph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph k33() {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) es.emplace_back(u, v);
  return make(6, std::move(es));
}

// Bit position of the pair (u,v), u < v, in an adjacency mask with pairs
// enumerated lexicographically.
inline int pair_bit(int n, int u, int v) {
  int idx = 0;
  for (int a = 0; a < u; ++a) idx += n - 1 - a;
  return idx + (v - u - 1);
}

inline std::uint32_t relabel_mask(int n, std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mask >> pair_bit(n, u, v) & 1) {
        int a = perm[static_cast<std::size_t>(u)];
        int b = perm[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        out |= std::uint32_t{1} << pair_bit(n, a, b);
      }
  return out;
}

// Minimum adjacency mask over all vertex relabelings: a canonical form for
// isomorphism classes of graphs on n labeled vertices.
inline std::uint32_t canonical_mask(int n, std::uint32_t mask) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = mask;
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, relabel_mask(n, mask, perm));
  return best;
}

inline Graph mask_graph(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mask >> pair_bit(n, u, v) & 1) es.emplace_back(u, v);
  return make(n, std::move(es));
}

inline bool connected(const Graph& g) { return gpoly::component_count(g) <= 1; }

// One representative per isomorphism class of graphs on exactly n vertices.
inline std::vector<Graph> graphs_on(int n, bool connected_only = false) {
  const int pairs = n * (n - 1) / 2;
  std::vector<char> seen(std::size_t{1} << pairs, 0);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    const std::uint32_t canon = canonical_mask(n, mask);
    if (seen[canon]) continue;
    seen[canon] = 1;
    Graph g = mask_graph(n, canon);
    if (connected_only && !connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

// Random graph with 2..maxn vertices and at most maxm edges.
inline Graph random_graph(std::mt19937_64& rng, int maxn, int maxm) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxn - 1));
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) es.emplace_back(u, v);
  while (static_cast<int>(es.size()) > maxm)
    es.erase(es.begin() + static_cast<long>(rng() % es.size()));
  return make(n, std::move(es));
}

// Random bipartite graph (each side 1..max_side vertices) with up to
// max_neg edges of weight -1.
inline Graph random_signed_bipartite(std::mt19937_64& rng, int max_side, int max_neg) {
  const int a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_side));
  const int b = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_side));
  Graph g;
  g.n = a + b;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (rng() % 2) g.edges.emplace_back(u, a + v);
  if (!g.edges.empty()) {
    const int neg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_neg + 1));
    for (int i = 0; i < neg; ++i)
      g.edge_weights[static_cast<int>(rng() % g.edges.size())] = gpoly::Rational(-1);
  }
  gpoly::validate(g);
  return g;
}

}  // namespace corpus
