#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "netsel/centrality.hpp"
#include "netsel/errors.hpp"
#include "netsel/graph.hpp"
#include "netsel/rules.hpp"

namespace netsel {

// Functional-graph decision instance: can ell nodes be selected so that each
// keeps at least p predecessors once all selected out-edges are removed?
struct PiInstance {
  int p = 0;
  int ell = 0;
};

namespace detail {

// Post-order greedy on an in-tree: walking children before parents,
// accumulate the count of not-yet-assigned descendants and select a node
// (cutting its subtree) whenever the count reaches p. Maximizes the number
// of selectable nodes; surplus selections can be dropped in reverse
// post-order without invalidating the rest (their mass only merges upward).
// skip_edge suppresses one out-edge, which turns a cycle component into an
// in-tree rooted at the cycle node.
inline std::vector<NodeId> tree_greedy(const DirectedGraph& g, NodeId root, int p,
                                       std::pair<NodeId, NodeId> skip_edge = {-1, -1}) {
  std::vector<NodeId> post;
  {
    std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, child] = stack.back();
      if (child < g.in(v).size()) {
        const NodeId u = g.in(v)[child++];
        if (u == skip_edge.first && v == skip_edge.second) continue;
        stack.emplace_back(u, 0);
        continue;
      }
      post.push_back(v);
      stack.pop_back();
    }
  }
  std::vector<long> residual(g.node_count(), 0);
  std::vector<char> selected_flag(g.node_count(), 0);
  std::vector<NodeId> selected;
  for (NodeId v : post) {
    long gathered = 0;
    for (NodeId u : g.in(v)) {
      if (u == skip_edge.first && v == skip_edge.second) continue;
      if (!selected_flag[u]) gathered += residual[u] + 1;
    }
    if (gathered >= p) {
      selected_flag[v] = 1;
      selected.push_back(v);
      residual[v] = 0;
    } else {
      residual[v] = gathered;
    }
  }
  return selected;  // in selection (post-) order
}

// Best selection order achievable in one weakly connected component of a
// functional graph for threshold p.
inline std::vector<NodeId> component_greedy(const DirectedGraph& g, const NodeSet& comp, int p) {
  // A connected functional component has either one sink (in-tree) or one
  // cycle (every out-degree is 1 within it).
  NodeId sink = -1;
  for (NodeId v : comp)
    if (g.out_degree(v) == 0) sink = v;
  if (sink != -1) return tree_greedy(g, sink, p);
  // Locate the unique cycle by following out-edges.
  std::vector<NodeId> path{comp.front()};
  std::vector<int> pos(g.node_count(), -1);
  pos[comp.front()] = 0;
  for (;;) {
    const NodeId next = g.out(path.back())[0];
    if (pos[next] != -1) {
      path.erase(path.begin(), path.begin() + pos[next]);
      break;
    }
    pos[next] = static_cast<int>(path.size());
    path.push_back(next);
  }
  std::sort(path.begin(), path.end());
  // Some witness always selects a cycle node (moving the selected node
  // nearest the cycle onto it loses nobody any predecessors), and a witness
  // for the cut tree remains one after the cycle edge returns. Try each.
  std::vector<NodeId> best;
  for (NodeId v : path) {
    const std::pair<NodeId, NodeId> cut{v, g.out(v)[0]};
    std::vector<NodeId> sel = tree_greedy(g, v, p, cut);
    if (sel.size() > best.size()) best = std::move(sel);
  }
  return best;
}

}  // namespace netsel::detail

// Decide Pi(G, p, ell) on a functional graph and return a witness subset
// (sorted), or nullopt for a no-instance. Components combine through the
// c x ell boolean table with backtracking.
inline std::optional<NodeSet> pi_decide(const DirectedGraph& g, int p, int ell) {
  if (p < 0 || ell < 0) throw InvalidArgument("p and ell must be >= 0");
  if (!classify(g).is_functional)
    throw InvalidArgument("pi_decide requires a functional graph (out-degree <= 1)");
  if (ell > g.node_count()) return std::nullopt;
  const std::vector<NodeSet> comps = weakly_connected_components(g);
  const int c = static_cast<int>(comps.size());
  std::vector<std::vector<NodeId>> picks(c);
  for (int i = 0; i < c; ++i) picks[i] = detail::component_greedy(g, comps[i], p);
  // A[i][j]: j nodes selectable within the first i+1 components. Surplus
  // un-selection makes every count below the per-component maximum feasible.
  std::vector<std::vector<char>> a(c, std::vector<char>(ell + 1, 0));
  for (int j = 0; j <= ell; ++j)
    a[0][j] = j <= static_cast<int>(picks[0].size());
  for (int i = 1; i < c; ++i)
    for (int j = 0; j <= ell; ++j)
      for (int take = 0; take <= j && take <= static_cast<int>(picks[i].size()); ++take)
        if (a[i - 1][j - take]) {
          a[i][j] = 1;
          break;
        }
  if (!a[c - 1][ell]) return std::nullopt;
  NodeSet witness;
  int remaining = ell;
  for (int i = c - 1; i >= 0; --i) {
    int take = std::min(remaining, static_cast<int>(picks[i].size()));
    while (take > 0 && !(i == 0 ? take == remaining : a[i - 1][remaining - take])) --take;
    // Keep the earliest selections; dropping later ones (nearest the roots)
    // preserves validity.
    for (int t = 0; t < take; ++t) witness.push_back(picks[i][t]);
    remaining -= take;
  }
  std::sort(witness.begin(), witness.end());
  return witness;
}

// Exact absorbing rule on functional graphs: binary-search the largest
// feasible predecessor threshold p* and return its witness. The alpha->1
// group score of the witness is p* + 1 (the empty walk adds one).
inline Selection absorb_functional(const DirectedGraph& g, int k) {
  detail::check_k(g, k);
  if (!classify(g).is_functional)
    throw InvalidArgument("absorb_functional requires a functional graph");
  int lo = 0, hi = g.node_count();
  while (lo < hi) {  // Pi is monotone nonincreasing in p
    const int mid = lo + (hi - lo + 1) / 2;
    if (pi_decide(g, mid, k))
      lo = mid;
    else
      hi = mid - 1;
  }
  Selection sel;
  sel.rule_name = "absorb-exact";
  sel.k = k;
  sel.alpha = 1.0;
  sel.members = *pi_decide(g, lo, k);
  sel.min_predecessors = lo;
  sel.group_score = lo + 1.0;
  return sel;
}

// Exact absorbing rule on directed bipartite graphs: with at least k nodes
// holding incoming edges the rule coincides with the Top rule of the same
// centrality; otherwise every size-k set scores 1 and the nodes with
// incoming edges are padded with the lowest-id remaining nodes.
inline Selection absorb_bipartite(const DirectedGraph& g, int k, Kind kind,
                                  std::optional<double> alpha = {}) {
  detail::check_k(g, k);
  const GraphClass cls = classify(g);
  if (!cls.is_bipartite) throw InvalidArgument("absorb_bipartite requires a directed bipartite graph");
  const auto& [v1, v2] = *cls.bipartition;
  if (static_cast<int>(v2.size()) >= k) {
    Selection sel = kind == Kind::pagerank ? top_rank(g, k, alpha) : top_katz(g, k, alpha);
    sel.rule_name = "absorb-exact";
    double worst = sel.member_scores.empty() ? 1.0 : sel.member_scores.back();
    for (double s : sel.member_scores) worst = std::min(worst, s);
    sel.group_score = worst;
    return sel;
  }
  Selection sel;
  sel.rule_name = "absorb-exact";
  sel.k = k;
  sel.alpha = resolve_alpha(g, kind, alpha);
  sel.members = v2;
  for (NodeId v : v1) {
    if (static_cast<int>(sel.members.size()) >= k) break;
    sel.members.push_back(v);
  }
  std::sort(sel.members.begin(), sel.members.end());
  sel.group_score = 1.0;
  return sel;
}

constexpr int kBruteForceNodeCap = 20;

// Exact absorbing rule by k-subset enumeration, limited to small graphs.
// Katz evaluations share the original graph's spectral radius across all
// subsets. Subsets whose decay-factor limit has no finite value are skipped
// and counted.
inline Selection absorb_bruteforce(const DirectedGraph& g, int k, Kind kind,
                                   double epsilon = 1e-6) {
  detail::check_k(g, k);
  if (g.node_count() > kBruteForceNodeCap)
    throw SizeCapError("absorb_bruteforce is capped at " + std::to_string(kBruteForceNodeCap) +
                       " nodes; use seq_absorb or the functional/bipartite specializations");
  const int n = g.node_count();
  double lambda_ref = 0.0;
  if (kind == Kind::katz) lambda_ref = spectral_radius(g).lambda;
  Selection sel;
  sel.rule_name = "absorb-exact";
  sel.k = k;
  sel.alpha = kind == Kind::katz && lambda_ref > 0 ? (1.0 - epsilon) / lambda_ref : 1.0 - epsilon;
  double best = -1.0;
  NodeSet subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  for (;;) {
    const LimitScore score = limit_group_score(g, subset, kind, epsilon, lambda_ref);
    if (score.divergent) {
      ++sel.divergent_skipped;
    } else if (score.score > best) {
      // Lexicographic enumeration order makes the first maximum the
      // lexicographically smallest witness.
      best = score.score;
      sel.members = subset;
    }
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  if (best >= 0.0) sel.group_score = best;
  return sel;
}

// NP-hardness gadget (test-fixture generator): the absorbing instance an
// Independent-Set instance (G', r) reduces to. Every undirected edge becomes
// a 2-cycle plus n+1 shared sink nodes fed by both endpoints.
struct ReductionInstance {
  DirectedGraph graph;
  double c = 0.0;
  int k = 0;
  int base_nodes = 0;
  int base_edges = 0;
  int r = 0;
  NodeId new_node(int edge_index, int copy) const {
    return base_nodes + edge_index * (base_nodes + 1) + copy;
  }
};

inline ReductionInstance build_is_reduction(int n_prime,
                                            const std::vector<std::pair<int, int>>& undirected_edges,
                                            int r) {
  if (r < 0 || r > n_prime) throw InvalidArgument("r must be in [0, n']");
  std::vector<int> degree(n_prime, 0);
  for (auto [u, v] : undirected_edges) {
    if (u < 0 || u >= n_prime || v < 0 || v >= n_prime || u == v)
      throw InvalidArgument("malformed undirected edge");
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < n_prime; ++v)
    if (degree[v] < 2)
      throw InvalidArgument("reduction requires every base node to have degree >= 2");
  const int m = static_cast<int>(undirected_edges.size());
  ReductionInstance inst;
  inst.base_nodes = n_prime;
  inst.base_edges = m;
  inst.r = r;
  inst.k = r + m * (n_prime + 1);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int j = 0; j < m; ++j) {
    const auto [u, v] = undirected_edges[j];
    edges.emplace_back(u, v);
    edges.emplace_back(v, u);
    for (int i = 0; i <= n_prime; ++i) {
      const NodeId x = inst.new_node(j, i);
      edges.emplace_back(u, x);
      edges.emplace_back(v, x);
    }
  }
  inst.graph = DirectedGraph(n_prime + m * (n_prime + 1), std::move(edges));
  int max_out = 1;
  for (NodeId v = 0; v < inst.graph.node_count(); ++v) max_out = std::max(max_out, inst.graph.out_degree(v));
  inst.c = 1.0 + 1.0 / (4.0 * max_out);  // any epsilon below 1/(2 max deg+) works
  return inst;
}

// Exact absorbing rule dispatch: polynomial specializations where the class
// allows, otherwise capped brute force.
inline Selection absorb_exact(const DirectedGraph& g, int k, Kind kind, double epsilon = 1e-6) {
  const GraphClass cls = classify(g);
  if (cls.is_functional) return absorb_functional(g, k);
  if (cls.is_bipartite) return absorb_bipartite(g, k, kind);
  return absorb_bruteforce(g, k, kind, epsilon);
}

}  // namespace netsel
