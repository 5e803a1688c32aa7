#pragma once

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "netsel/centrality.hpp"
#include "netsel/election.hpp"
#include "netsel/errors.hpp"
#include "netsel/graph.hpp"

namespace netsel {

// A size-k node selection plus rule metadata and diagnostics.
struct Selection {
  std::vector<NodeId> members;  // rule-specific order
  std::string rule_name;
  int k = 0;
  double alpha = 0.0;
  // Diagnostics, filled where the rule computes them.
  std::optional<double> group_score;
  std::vector<double> member_scores;       // centrality of members (top rules)
  std::optional<Committee> committee;      // election trace (mes/bos rules)
  std::optional<int> min_predecessors;     // p* (exact absorbing on functional graphs)
  int divergent_skipped = 0;               // subsets skipped by brute force
};

constexpr double kDefaultAlpha = 0.85;

// alpha = 0.85 for PageRank rules and 0.85/lambda for Katz rules; an acyclic
// graph has lambda = 0 and any Katz decay factor converges, so 0.85 is used.
inline double default_alpha(const DirectedGraph& g, Kind kind) {
  if (kind == Kind::pagerank) return kDefaultAlpha;
  const SpectralEstimate est = spectral_radius(g);
  return est.lambda > 1e-9 ? kDefaultAlpha / est.lambda : kDefaultAlpha;
}

inline double resolve_alpha(const DirectedGraph& g, Kind kind, std::optional<double> alpha) {
  return alpha ? *alpha : default_alpha(g, kind);
}

namespace detail {

inline void check_k(const DirectedGraph& g, int k) {
  if (k < 1 || k > g.node_count()) throw InvalidArgument("k must be in [1, n]");
}

inline Selection top_centrality(const DirectedGraph& g, int k, Kind kind,
                                std::optional<double> alpha_opt) {
  check_k(g, k);
  const double alpha = resolve_alpha(g, kind, alpha_opt);
  const CentralityVector c =
      kind == Kind::pagerank ? pagerank(g, alpha) : katz(g, alpha);
  std::vector<int> order(g.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (c.values[a] != c.values[b]) return c.values[a] > c.values[b];
    return a < b;
  });
  Selection sel;
  sel.rule_name = kind == Kind::pagerank ? "top-rank" : "top-katz";
  sel.k = k;
  sel.alpha = alpha;
  for (int i = 0; i < k; ++i) {
    sel.members.push_back(order[i]);
    sel.member_scores.push_back(c.values[order[i]]);
  }
  return sel;
}

inline ElectionProfile graph_profile(const DirectedGraph& g, Kind kind, double alpha,
                                     bool zero_diagonal) {
  UtilityMatrix m =
      kind == Kind::pagerank ? pagerank_utilities(g, alpha) : katz_utilities(g, alpha);
  if (zero_diagonal) m = m.with_zero_diagonal();
  return ElectionProfile::from_utilities(m);
}

inline Selection election_rule(const DirectedGraph& g, int k, Kind kind,
                               std::optional<double> alpha_opt, bool use_bos, bool complete,
                               bool zero_diagonal) {
  check_k(g, k);
  const double alpha = resolve_alpha(g, kind, alpha_opt);
  const ElectionProfile profile = graph_profile(g, kind, alpha, zero_diagonal);
  Committee committee;
  if (use_bos) {
    committee = bos(profile, k).first;
  } else if (complete) {
    committee = add1u_complete(profile, k);
  } else {
    committee = mes(profile, k).first;
  }
  Selection sel;
  sel.rule_name = std::string(use_bos ? "bos" : "mes") + (kind == Kind::pagerank ? "-rank" : "-katz");
  sel.k = k;
  sel.alpha = alpha;
  sel.members = committee.members;
  sel.committee = std::move(committee);
  return sel;
}

}  // namespace detail

// The k nodes of highest centrality, ties by ascending id.
inline Selection top_rank(const DirectedGraph& g, int k, std::optional<double> alpha = {}) {
  return detail::top_centrality(g, k, Kind::pagerank, alpha);
}
inline Selection top_katz(const DirectedGraph& g, int k, std::optional<double> alpha = {}) {
  return detail::top_centrality(g, k, Kind::katz, alpha);
}

// MES over the per-pair walk utilities (diagonal zeroed: a node does not
// fund itself), completed with Add1U. Set complete=false for the plain rule.
inline Selection mes_rank(const DirectedGraph& g, int k, std::optional<double> alpha = {},
                          bool complete = true, bool zero_diagonal = true) {
  return detail::election_rule(g, k, Kind::pagerank, alpha, false, complete, zero_diagonal);
}
inline Selection mes_katz(const DirectedGraph& g, int k, std::optional<double> alpha = {},
                          bool complete = true, bool zero_diagonal = true) {
  return detail::election_rule(g, k, Kind::katz, alpha, false, complete, zero_diagonal);
}

inline Selection bos_rank(const DirectedGraph& g, int k, std::optional<double> alpha = {},
                          bool zero_diagonal = true) {
  return detail::election_rule(g, k, Kind::pagerank, alpha, true, true, zero_diagonal);
}
inline Selection bos_katz(const DirectedGraph& g, int k, std::optional<double> alpha = {},
                          bool zero_diagonal = true) {
  return detail::election_rule(g, k, Kind::katz, alpha, true, true, zero_diagonal);
}

// Greedy absorbing heuristic: k rounds, each adding the node whose inclusion
// maximizes the group score (min centrality over the set with its outgoing
// edges removed). Ties by ascending id.
inline Selection seq_absorb(const DirectedGraph& g, int k, Kind kind,
                            std::optional<double> alpha_opt = {}) {
  detail::check_k(g, k);
  const double alpha = resolve_alpha(g, kind, alpha_opt);
  Selection sel;
  sel.rule_name = kind == Kind::pagerank ? "seq-absorb-rank" : "seq-absorb-katz";
  sel.k = k;
  sel.alpha = alpha;
  std::vector<char> chosen(g.node_count(), 0);
  NodeSet current;
  double final_score = 0.0;
  for (int round = 0; round < k; ++round) {
    // Candidate scores are independent; the argmax is reduced after the full
    // round so evaluation order cannot matter.
    std::vector<double> score(g.node_count(), -std::numeric_limits<double>::infinity());
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (chosen[v]) continue;
      NodeSet trial = current;
      trial.insert(std::lower_bound(trial.begin(), trial.end(), v), v);
      score[v] = group_score(g, trial, kind, alpha);
    }
    NodeId pick = -1;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (chosen[v]) continue;
      if (pick == -1 || score[v] > score[pick]) pick = v;
    }
    chosen[pick] = 1;
    current.insert(std::lower_bound(current.begin(), current.end(), pick), pick);
    sel.members.push_back(pick);
    final_score = score[pick];
  }
  sel.group_score = final_score;
  return sel;
}

inline Selection seq_absorb_rank(const DirectedGraph& g, int k, std::optional<double> alpha = {}) {
  return seq_absorb(g, k, Kind::pagerank, alpha);
}
inline Selection seq_absorb_katz(const DirectedGraph& g, int k, std::optional<double> alpha = {}) {
  return seq_absorb(g, k, Kind::katz, alpha);
}

}  // namespace netsel
