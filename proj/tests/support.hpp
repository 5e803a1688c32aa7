// Shared test helpers: seeded random graph families and independent oracles
// (truncated walk sums, reachability closures, exhaustive search) used to
// derive expected values without touching the library's solver paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "netsel/centrality.hpp"
#include "netsel/graph.hpp"
#include "netsel/rng.hpp"

namespace testsupport {

using netsel::CounterRng;
using netsel::DirectedGraph;
using netsel::NodeId;
using netsel::NodeSet;

inline DirectedGraph path_graph(int n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return DirectedGraph(n, std::move(edges));
}

inline DirectedGraph cycle_graph(int n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return DirectedGraph(n, std::move(edges));
}

// Directed clique on ids [lo, lo+size).
inline void add_clique(std::vector<std::pair<NodeId, NodeId>>& edges, int lo, int size) {
  for (int u = lo; u < lo + size; ++u)
    for (int v = lo; v < lo + size; ++v)
      if (u != v) edges.emplace_back(u, v);
}

inline DirectedGraph clique_graph(int n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  add_clique(edges, 0, n);
  return DirectedGraph(n, std::move(edges));
}

// Two disjoint directed cliques, sized a then b.
inline DirectedGraph two_cliques(int a, int b) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  add_clique(edges, 0, a);
  add_clique(edges, a, b);
  return DirectedGraph(a + b, std::move(edges));
}

// The six-node fixture: a 2-cycle {0,1} plus a triangle clique {2,3,4} fed
// by node 5.
inline DirectedGraph two_cycle_and_fed_clique() {
  std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 0}};
  add_clique(edges, 2, 3);
  edges.emplace_back(5, 2);
  edges.emplace_back(5, 3);
  edges.emplace_back(5, 4);
  return DirectedGraph(6, std::move(edges));
}

// 24-clique next to the six-node two-star structure: middles 24 and 25 are
// mutually linked, each with two private mutual leaves.
inline DirectedGraph clique24_structure() {
  std::vector<std::pair<NodeId, NodeId>> edges;
  add_clique(edges, 0, 24);
  auto both = [&](int a, int b) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  };
  both(24, 25);
  both(24, 26);
  both(24, 27);
  both(25, 28);
  both(25, 29);
  return DirectedGraph(30, std::move(edges));
}

// Erdos-Renyi style digraph, edge probability p, no self loops.
inline DirectedGraph random_digraph(const CounterRng& rng, int n, double p) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v && rng.uniform(1, u, v) < p) edges.emplace_back(u, v);
  return DirectedGraph(n, std::move(edges));
}

// Random directed bipartite graph: sources in [0, n1) shoot at [n1, n1+n2).
// Out-degrees are powers of two, so equal voting scores are exact dyadic
// ties rather than rounding coincidences.
inline DirectedGraph random_bipartite(const CounterRng& rng, int n1, int n2) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  const int choices[4] = {0, 1, 2, 4};
  for (NodeId u = 0; u < n1; ++u) {
    int deg = std::min(choices[rng.below(4, 2, u)], n2);
    if (deg == 3) deg = 2;
    std::vector<NodeId> targets(n2);
    for (int t = 0; t < n2; ++t) targets[t] = t;
    std::sort(targets.begin(), targets.end(), [&](int a, int b) {
      return rng.raw(5, u, a) < rng.raw(5, u, b);
    });
    for (int t = 0; t < deg; ++t) edges.emplace_back(u, n1 + targets[t]);
  }
  return DirectedGraph(n1 + n2, std::move(edges));
}

// Random functional graph: each node delegates to one random other node or
// nobody.
inline DirectedGraph random_functional(const CounterRng& rng, int n, double p_edge) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    if (rng.uniform(3, u) >= p_edge) continue;
    NodeId v = static_cast<NodeId>(rng.below(n - 1, 4, u));
    if (v >= u) ++v;
    edges.emplace_back(u, v);
  }
  return DirectedGraph(n, std::move(edges));
}

// Truncated walk-sum oracle: accumulate sum_{t<=T} alpha^t (weighted walk
// counts) by repeated propagation. Independent of the library's fixed-point
// and dense-solve routes.
inline std::vector<double> walk_sum_oracle(const DirectedGraph& g, double alpha, bool pagerank,
                                           int max_len = 4000) {
  const int n = g.node_count();
  std::vector<double> total(n, 1.0), layer(n, 1.0), next(n);
  for (int t = 1; t <= max_len; ++t) {
    double mass = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double s = 0.0;
      for (NodeId u : g.in(v)) s += alpha * layer[u] * (pagerank ? 1.0 / g.out_degree(u) : 1.0);
      next[v] = s;
      mass += s;
    }
    for (NodeId v = 0; v < n; ++v) total[v] += next[v];
    layer.swap(next);
    if (mass < 1e-14) break;
  }
  return total;
}

// Reachability closure by brute-force repeated squaring of the boolean
// relation; oracle for SCC/predecessor tests on small graphs.
inline std::vector<std::vector<bool>> reachability_oracle(const DirectedGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.out(u)) r[u][v] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// All k-subsets of [0, n), lexicographic.
inline std::vector<NodeSet> k_subsets(int n, int k) {
  std::vector<NodeSet> out;
  NodeSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace testsupport
