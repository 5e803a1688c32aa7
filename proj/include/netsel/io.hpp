#pragma once

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netsel/axioms.hpp"
#include "netsel/centrality.hpp"
#include "netsel/election.hpp"
#include "netsel/experiment.hpp"
#include "netsel/generate.hpp"
#include "netsel/graph.hpp"
#include "netsel/rules.hpp"

namespace netsel::io {

using json = nlohmann::json;

inline DirectedGraph read_edge_list(const std::string& path, bool treat_undirected = false) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open edge list: " + path);
  return from_edge_list(in, treat_undirected);
}

// Label CSV with header "node,label"; node is the external id string.
inline std::vector<std::string> read_labels(std::istream& in, const DirectedGraph& g) {
  std::vector<std::string> labels(g.node_count());
  std::vector<char> seen(g.node_count(), 0);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    if (line_no == 1 && line.rfind("node,", 0) == 0) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'node,label'", line_no);
    std::string node = line.substr(0, comma);
    std::string label = line.substr(comma + 1);
    if (!label.empty() && label.back() == '\r') label.pop_back();
    const auto id = g.names().empty() ? std::optional<NodeId>(std::stoi(node)) : g.find_name(node);
    if (!id || *id < 0 || *id >= g.node_count())
      throw ParseError("unknown node id '" + node + "'", line_no);
    labels[*id] = label;
    seen[*id] = 1;
  }
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!seen[v]) throw InvalidArgument("node without a label: " + g.name(v));
  return labels;
}

inline LabeledGraph read_labeled_graph(const std::string& edge_path, const std::string& label_path,
                                       bool treat_undirected = false) {
  LabeledGraph lg;
  lg.graph = read_edge_list(edge_path, treat_undirected);
  std::ifstream in(label_path);
  if (!in) throw InvalidArgument("cannot open label file: " + label_path);
  lg.labels = read_labels(in, lg.graph);
  return lg;
}

inline void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.out(u)) out << g.name(u) << ' ' << g.name(v) << '\n';
}

inline void write_centrality_csv(std::ostream& out, const DirectedGraph& g,
                                 const CentralityVector& c) {
  out << "node,score\n";
  out << std::setprecision(17);
  for (NodeId v = 0; v < g.node_count(); ++v) out << g.name(v) << ',' << c.values[v] << '\n';
}

inline void write_utilities_csv(std::ostream& out, const DirectedGraph& g, const UtilityMatrix& m) {
  out << "node";
  for (NodeId v = 0; v < m.n; ++v) out << ',' << g.name(v);
  out << '\n';
  out << std::setprecision(17);
  for (NodeId u = 0; u < m.n; ++u) {
    out << g.name(u);
    for (NodeId v = 0; v < m.n; ++v) out << ',' << m.at(u, v);
    out << '\n';
  }
}

inline void write_profile_csv(std::ostream& out, const ElectionProfile& p) {
  out << std::setprecision(17);
  for (int i = 0; i < p.n_voters; ++i) {
    for (int c = 0; c < p.n_candidates; ++c) out << (c ? "," : "") << p.util(i, c);
    out << '\n';
  }
}

inline ElectionProfile read_profile_csv(std::istream& in) {
  ElectionProfile p;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::istringstream ss(line);
    std::string cell;
    int cols = 0;
    while (std::getline(ss, cell, ',')) {
      p.mu.push_back(std::stod(cell));
      ++cols;
    }
    if (p.n_candidates == 0)
      p.n_candidates = cols;
    else if (cols != p.n_candidates)
      throw ParseError("ragged utility matrix", line_no);
    ++p.n_voters;
  }
  return p;
}

inline json committee_json(const Committee& c) {
  json j;
  j["members"] = c.members;
  json trace = json::array();
  for (double r : c.rho_trace) {
    if (std::isfinite(r))
      trace.push_back(r);
    else
      trace.push_back(nullptr);  // overspend round
  }
  j["rho_trace"] = trace;
  switch (c.completion) {
    case Committee::Completion::none: j["completion"] = "none"; break;
    case Committee::Completion::add1u: j["completion"] = "add1u"; break;
    case Committee::Completion::bos_overspend: j["completion"] = "bos-overspend"; break;
  }
  j["completion_rounds"] = c.completion_rounds;
  j["filled_greedily"] = c.filled_greedily;
  j["budget_total"] = c.budget_total;
  return j;
}

// Payments as sparse (voter, candidate, amount) triplets.
inline json price_system_json(const PriceSystem& ps) {
  json j;
  j["budget_total"] = ps.budget_total;
  json triplets = json::array();
  for (int i = 0; i < ps.n_voters; ++i)
    for (int c = 0; c < ps.n_candidates; ++c)
      if (ps.pay(i, c) > 0.0) triplets.push_back({i, c, ps.pay(i, c)});
  j["payments"] = triplets;
  return j;
}

inline json selection_json(const Selection& sel, const DirectedGraph& g) {
  json j;
  j["rule"] = sel.rule_name;
  j["k"] = sel.k;
  j["alpha"] = sel.alpha;
  j["members"] = sel.members;
  json names = json::array();
  for (NodeId v : sel.members) names.push_back(g.name(v));
  j["member_names"] = names;
  if (sel.group_score) j["group_score"] = *sel.group_score;
  if (!sel.member_scores.empty()) j["member_scores"] = sel.member_scores;
  if (sel.min_predecessors) j["min_predecessors"] = *sel.min_predecessors;
  if (sel.divergent_skipped > 0) j["divergent_skipped"] = sel.divergent_skipped;
  if (sel.committee) j["committee"] = committee_json(*sel.committee);
  return j;
}

inline std::vector<NodeId> selection_members_from_json(const json& j) {
  return j.at("members").get<std::vector<NodeId>>();
}

inline json axiom_report_json(const AxiomReport& report) {
  json j;
  j["axiom"] = axiom_name(report.axiom);
  j["satisfied"] = report.satisfied;
  j["checked_sets"] = report.checked_sets;
  json ws = json::array();
  for (const AxiomWitness& w : report.witnesses)
    ws.push_back({{"group", w.group}, {"entitled", w.entitled}, {"got", w.got}});
  j["witnesses"] = ws;
  return j;
}

inline void write_report_csv(std::ostream& out, const ExperimentReport& report) {
  out << "experiment,rule,k,parameter,replicate,value\n";
  out << std::setprecision(17);
  for (const ReportRow& r : report.rows)
    out << r.experiment << ',' << r.rule << ',' << r.k << ',' << r.parameter << ',' << r.replicate
        << ',' << r.value << '\n';
  for (const Aggregate& a : report.aggregates()) {
    out << a.experiment << ',' << a.rule << ',' << a.k << ',' << a.parameter << ",mean," << a.mean
        << '\n';
    if (a.ci95)
      out << a.experiment << ',' << a.rule << ',' << a.k << ',' << a.parameter << ",ci95," << *a.ci95
          << '\n';
  }
}

inline json report_json(const ExperimentReport& report) {
  json j;
  json rows = json::array();
  for (const ReportRow& r : report.rows)
    rows.push_back({{"experiment", r.experiment},
                    {"rule", r.rule},
                    {"k", r.k},
                    {"parameter", r.parameter},
                    {"replicate", r.replicate},
                    {"value", r.value}});
  j["rows"] = rows;
  json aggs = json::array();
  for (const Aggregate& a : report.aggregates()) {
    json e = {{"experiment", a.experiment}, {"rule", a.rule},   {"k", a.k},
              {"parameter", a.parameter},   {"count", a.count}, {"mean", a.mean}};
    if (a.ci95) e["ci95"] = *a.ci95;
    aggs.push_back(e);
  }
  j["aggregates"] = aggs;
  j["skipped"] = report.skipped;
  return j;
}

inline void write_points_csv(std::ostream& out, const PointCloud& cloud) {
  out << "node,x,y,group\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < cloud.points.size(); ++i)
    out << i << ',' << cloud.points[i][0] << ',' << cloud.points[i][1] << ',' << cloud.group[i]
        << '\n';
}

inline void write_selected_points_csv(std::ostream& out, const std::vector<SelectedPoint>& pts) {
  out << "instance,rule,x,y,group\n";
  out << std::setprecision(17);
  for (const SelectedPoint& p : pts)
    out << p.instance << ',' << p.rule << ',' << p.x << ',' << p.y << ',' << p.group << '\n';
}

}  // namespace netsel::io
