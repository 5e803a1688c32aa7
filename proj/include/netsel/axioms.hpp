#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "netsel/errors.hpp"
#include "netsel/graph.hpp"

namespace netsel {

enum class Axiom { clique, component, subgraph };

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::clique: return "clique-entitlement";
    case Axiom::component: return "component-entitlement";
    case Axiom::subgraph: return "subgraph-entitlement";
  }
  return "";
}

struct AxiomWitness {
  NodeSet group;
  int entitled = 0;
  int got = 0;
};

struct AxiomReport {
  Axiom axiom = Axiom::clique;
  bool satisfied = true;
  std::vector<AxiomWitness> witnesses;  // every violating group
  long checked_sets = 0;
};

// How the subgraph checker enumerates candidate groups. The axiom
// quantifies over all strongly connected subsets; exhaustive mode is only
// feasible on small graphs and refuses past the bound.
struct SubgraphScope {
  enum class Mode { components, exhaustive, explicit_list };
  Mode mode = Mode::components;
  int exhaustive_bound = 12;
  std::vector<NodeSet> sets;  // explicit_list only
};

namespace detail {

inline int entitlement(int k, std::size_t group_size, int n) {
  return static_cast<int>((static_cast<long long>(k) * static_cast<long long>(group_size)) / n);
}

inline int overlap(const NodeSet& sorted_group, const std::vector<char>& selected) {
  int got = 0;
  for (NodeId v : sorted_group) got += selected[v];
  return got;
}

inline std::vector<char> selection_mask(const DirectedGraph& g, const NodeSet& w) {
  std::vector<char> mask(g.node_count(), 0);
  for (NodeId v : w) {
    if (v < 0 || v >= g.node_count()) throw InvalidArgument("selection node out of range");
    mask[v] = 1;
  }
  return mask;
}

// Weakly connected components that are strongly connected, optionally
// restricted to cliques.
inline AxiomReport check_components(const DirectedGraph& g, int k, const NodeSet& w,
                                    bool require_clique) {
  AxiomReport report;
  report.axiom = require_clique ? Axiom::clique : Axiom::component;
  const std::vector<char> selected = selection_mask(g, w);
  for (const NodeSet& comp : weakly_connected_components(g)) {
    if (!is_strongly_connected_subset(g, comp)) continue;
    if (require_clique && !is_clique(g, comp)) continue;
    ++report.checked_sets;
    const int entitled = entitlement(k, comp.size(), g.node_count());
    const int got = overlap(comp, selected);
    if (got < entitled) report.witnesses.push_back({comp, entitled, got});
  }
  report.satisfied = report.witnesses.empty();
  return report;
}

}  // namespace detail

// Every strongly connected component whose induced graph is a clique must
// hold at least floor(k*|S|/n) selected nodes.
inline AxiomReport check_clique_entitlement(const DirectedGraph& g, int k, const NodeSet& w) {
  return detail::check_components(g, k, w, true);
}

// As above without the clique requirement.
inline AxiomReport check_component_entitlement(const DirectedGraph& g, int k, const NodeSet& w) {
  return detail::check_components(g, k, w, false);
}

// Strongly connected subsets are entitled to representation by members or
// successors: |(S u Succ(S)) n W| >= floor(k*|S|/n).
inline AxiomReport check_subgraph_entitlement(const DirectedGraph& g, int k, const NodeSet& w,
                                              const SubgraphScope& scope = {}) {
  AxiomReport report;
  report.axiom = Axiom::subgraph;
  const std::vector<char> selected = detail::selection_mask(g, w);
  auto check_set = [&](const NodeSet& s) {
    ++report.checked_sets;
    const int entitled = detail::entitlement(k, s.size(), g.node_count());
    int got = detail::overlap(s, selected);
    for (NodeId v : successors_closure(g, s)) got += selected[v];
    if (got < entitled) report.witnesses.push_back({s, entitled, got});
  };
  switch (scope.mode) {
    case SubgraphScope::Mode::components:
      for (const NodeSet& s : strongly_connected_components(g)) check_set(s);
      break;
    case SubgraphScope::Mode::exhaustive: {
      if (g.node_count() > scope.exhaustive_bound)
        throw SizeCapError("exhaustive subgraph-entitlement scope is capped at " +
                           std::to_string(scope.exhaustive_bound) + " nodes");
      const int n = g.node_count();
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        NodeSet s;
        for (int v = 0; v < n; ++v)
          if (mask & (1u << v)) s.push_back(v);
        if (is_strongly_connected_subset(g, s)) check_set(s);
      }
      break;
    }
    case SubgraphScope::Mode::explicit_list:
      for (const NodeSet& s : scope.sets) {
        check_subset(g, s);
        if (is_strongly_connected_subset(g, s)) check_set(s);
      }
      break;
  }
  report.satisfied = report.witnesses.empty();
  return report;
}

}  // namespace netsel
