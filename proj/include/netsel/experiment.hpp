#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "netsel/errors.hpp"
#include "netsel/generate.hpp"
#include "netsel/graph.hpp"
#include "netsel/registry.hpp"
#include "netsel/rng.hpp"

namespace netsel {

struct LabeledGraph {
  DirectedGraph graph;
  std::vector<std::string> labels;  // one per node
};

// Largest number of selected nodes sharing one label.
inline int max_group_count(const std::vector<NodeId>& members, const std::vector<std::string>& labels) {
  std::map<std::string, int> counts;
  int best = 0;
  for (NodeId v : members) best = std::max(best, ++counts[labels[v]]);
  return best;
}

// l1 distance between label frequencies in the selection and in the whole
// node set; 0 means exactly proportional, 2 is the maximum.
inline double l1_label_distance(const std::vector<NodeId>& members,
                                const std::vector<std::string>& labels) {
  if (members.empty()) throw InvalidArgument("selection must be nonempty");
  std::map<std::string, double> freq_all, freq_sel;
  for (const std::string& l : labels) freq_all[l] += 1.0 / labels.size();
  for (NodeId v : members) freq_sel[labels[v]] += 1.0 / members.size();
  double d = 0.0;
  for (const auto& [label, f] : freq_all) d += std::fabs(f - freq_sel[label]);
  for (const auto& [label, f] : freq_sel)
    if (!freq_all.count(label)) d += f;
  return d;
}

struct ReportRow {
  std::string experiment;
  std::string rule;
  int k = 0;
  double parameter = 0.0;
  int replicate = 0;
  double value = 0.0;
};

struct Aggregate {
  std::string experiment;
  std::string rule;
  int k = 0;
  double parameter = 0.0;
  int count = 0;
  double mean = 0.0;
  std::optional<double> ci95;  // half-width, normal approximation; >= 2 replicates
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  int skipped = 0;  // replicate/k pairs dropped (k exceeded surviving nodes)

  std::vector<Aggregate> aggregates() const {
    std::map<std::tuple<std::string, std::string, int, double>, std::vector<double>> groups;
    for (const ReportRow& r : rows) groups[{r.experiment, r.rule, r.k, r.parameter}].push_back(r.value);
    std::vector<Aggregate> out;
    for (const auto& [key, values] : groups) {
      Aggregate a;
      std::tie(a.experiment, a.rule, a.k, a.parameter) = key;
      a.count = static_cast<int>(values.size());
      for (double v : values) a.mean += v;
      a.mean /= a.count;
      if (a.count >= 2) {
        double ss = 0.0;
        for (double v : values) ss += (v - a.mean) * (v - a.mean);
        a.ci95 = 1.96 * std::sqrt(ss / (a.count - 1)) / std::sqrt(static_cast<double>(a.count));
      }
      out.push_back(std::move(a));
    }
    return out;
  }
};

namespace detail {

constexpr std::uint64_t kTagDeletion = 0xDE1E7E;
constexpr std::uint64_t kTagInstance = 0x1265;

// Subgraph induced on the kept nodes, with ids compacted; returns the kept
// original ids in the new order.
inline std::pair<DirectedGraph, std::vector<NodeId>> induced_subgraph(const DirectedGraph& g,
                                                                      const std::vector<char>& keep) {
  std::vector<NodeId> old_ids;
  std::vector<NodeId> remap(g.node_count(), -1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!keep[v]) continue;
    remap[v] = static_cast<NodeId>(old_ids.size());
    old_ids.push_back(v);
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::string> names;
  if (!g.names().empty())
    for (NodeId v : old_ids) names.push_back(g.names()[v]);
  for (NodeId u : old_ids)
    for (NodeId v : g.out(u))
      if (keep[v]) edges.emplace_back(remap[u], remap[v]);
  return {DirectedGraph(static_cast<int>(old_ids.size()), std::move(edges), std::move(names)), old_ids};
}

}  // namespace detail

// Label-robustness experiment: delete each node of the target label with
// probability p, rerun every rule, and record the pruned label's share of
// the selection next to its share of the surviving graph (the baseline,
// reported under rule name "baseline" with k = 0). target_label "both"
// alternates between the two labels across replicates.
inline ExperimentReport deletion_experiment(const LabeledGraph& lg, const std::string& target_label,
                                            const std::vector<double>& p_list, int replicates,
                                            const std::vector<int>& k_list,
                                            const std::vector<std::string>& rules,
                                            std::uint64_t seed) {
  std::vector<std::string> targets;
  if (target_label == "both") {
    std::set<std::string> distinct(lg.labels.begin(), lg.labels.end());
    if (distinct.size() != 2)
      throw InvalidArgument("target 'both' needs exactly two labels in the data");
    targets.assign(distinct.begin(), distinct.end());
  } else {
    if (std::find(lg.labels.begin(), lg.labels.end(), target_label) == lg.labels.end())
      throw InvalidArgument("target label not present: " + target_label);
    targets.push_back(target_label);
  }
  const CounterRng rng(seed);
  ExperimentReport report;
  for (std::size_t pi = 0; pi < p_list.size(); ++pi) {
    const double p = p_list[pi];
    for (int rep = 0; rep < replicates; ++rep) {
      const std::string& target = targets[rep % targets.size()];
      const CounterRng stream = rng.derive(detail::kTagDeletion, pi * 1000003ULL + rep);
      std::vector<char> keep(lg.graph.node_count(), 1);
      for (NodeId v = 0; v < lg.graph.node_count(); ++v)
        if (lg.labels[v] == target && stream.uniform(detail::kTagDeletion, v) < p) keep[v] = 0;
      auto [pruned, old_ids] = detail::induced_subgraph(lg.graph, keep);
      int survivors_target = 0;
      for (NodeId v : old_ids) survivors_target += lg.labels[v] == target;
      const double baseline =
          pruned.node_count() == 0 ? 0.0 : static_cast<double>(survivors_target) / pruned.node_count();
      report.rows.push_back({"deletion", "baseline", 0, p, rep, baseline});
      for (int k : k_list) {
        if (k > pruned.node_count()) {
          ++report.skipped;
          continue;
        }
        for (const std::string& rule : rules) {
          const Selection sel = run_rule(rule, pruned, k);
          int hits = 0;
          for (NodeId v : sel.members) hits += lg.labels[old_ids[v]] == target;
          const double value = sel.members.empty() ? 0.0 : static_cast<double>(hits) / sel.members.size();
          report.rows.push_back({"deletion", rule, k, p, rep, value});
        }
      }
    }
  }
  return report;
}

struct SelectedPoint {
  int instance = 0;
  std::string rule;
  double x = 0.0;
  double y = 0.0;
  int group = 0;
};

struct EuclideanOutcome {
  ExperimentReport report;
  std::vector<SelectedPoint> points;  // selected nodes of every instance, for histogramming
};

// Repeated Euclidean instances; the recorded value is the share of selected
// points on the group-0 side of the vertical line through the mean midpoint.
inline EuclideanOutcome euclidean_experiment(const EuclideanConfig& base, int instances, int k,
                                             const std::vector<std::string>& rules) {
  if (instances < 1) throw InvalidArgument("need at least one instance");
  const CounterRng rng(base.seed);
  const double mid = (base.mean0[0] + base.mean1[0]) / 2.0;
  const bool group0_left = base.mean0[0] < base.mean1[0];
  EuclideanOutcome out;
  for (int inst = 0; inst < instances; ++inst) {
    EuclideanConfig cfg = base;
    cfg.seed = rng.raw(detail::kTagInstance, inst);
    const PointCloud cloud = sample_points(cfg);
    const DirectedGraph g = build_graph(cloud, cfg);
    for (const std::string& rule : rules) {
      const Selection sel = run_rule(rule, g, k);
      int side0 = 0;
      for (NodeId v : sel.members) {
        const bool left = cloud.points[v][0] < mid;
        side0 += (left == group0_left);
        out.points.push_back({inst, rule, cloud.points[v][0], cloud.points[v][1], cloud.group[v]});
      }
      const double value = sel.members.empty() ? 0.0 : static_cast<double>(side0) / sel.members.size();
      out.report.rows.push_back({"euclidean", rule, k, 0.0, inst, value});
    }
  }
  return out;
}

// Committee-size sweep on a labeled graph; one row per (rule, k) with the
// max-from-one-label count.
inline ExperimentReport sweep_experiment(const LabeledGraph& lg, const std::vector<int>& k_list,
                                         const std::vector<std::string>& rules) {
  ExperimentReport report;
  for (int k : k_list) {
    if (k > lg.graph.node_count()) {
      ++report.skipped;
      continue;
    }
    for (const std::string& rule : rules) {
      const Selection sel = run_rule(rule, lg.graph, k);
      report.rows.push_back(
          {"sweep", rule, k, 0.0, 0, static_cast<double>(max_group_count(sel.members, lg.labels))});
    }
  }
  return report;
}

}  // namespace netsel
