// Command-line front end: selection rules, centrality dumps, axiom checks,
// synthetic generators, and the experiment pipelines.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netsel/netsel.hpp"

namespace {

using netsel::io::json;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  std::string format = "json";
  std::string out;
};

void emit(const GlobalOpts& opts, const std::string& content) {
  if (opts.out.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(opts.out);
  if (!f) throw netsel::InvalidArgument("cannot write: " + opts.out);
  f << content;
}

std::pair<int, int> parse_ratio(const std::string& text, int n) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw netsel::InvalidArgument("ratio must look like 1:3");
  const int a = std::stoi(text.substr(0, colon));
  const int b = std::stoi(text.substr(colon + 1));
  if (a < 0 || b < 0 || a + b == 0) throw netsel::InvalidArgument("ratio parts must be nonnegative");
  // Scale the ratio to exact group counts.
  const int n0 = static_cast<int>(static_cast<long long>(n) * a / (a + b));
  return {n0, n - n0};
}

netsel::EdgeModel parse_model(const std::string& name) {
  if (name == "e-radius") return netsel::EdgeModel::e_radius;
  if (name == "e-appr") return netsel::EdgeModel::e_appr;
  if (name == "b-radius") return netsel::EdgeModel::b_radius;
  if (name == "b-appr") return netsel::EdgeModel::b_appr;
  throw netsel::InvalidArgument("unknown model: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netsel: influential and proportionally representative node selection"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value config file; command-line flags win");

  GlobalOpts global;
  app.add_option("--seed", global.seed, "Seed for all randomized commands");
  double alpha_flag = -1.0;
  app.add_option("--alpha", alpha_flag, "Decay factor override (default 0.85, scaled for Katz)");
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", global.out, "Output path (default stdout)");

  std::function<void()> action;

  // select
  auto* select = app.add_subcommand("select", "Run a selection rule on a graph");
  std::string sel_graph, sel_rule;
  bool sel_undirected = false;
  int sel_k = 1;
  double sel_epsilon = 1e-6;
  select->add_option("--graph", sel_graph, "Edge-list file")->required();
  select->add_flag("--undirected", sel_undirected, "Expand each line into both directions");
  select->add_option("--rule", sel_rule, "Rule name")->required();
  select->add_option("--k", sel_k, "Committee size")->required();
  select->add_option("--epsilon", sel_epsilon, "Limit epsilon for absorb-exact");
  select->callback([&] {
    action = [&, sel_graph, sel_rule, sel_undirected, sel_k, sel_epsilon] {
      const netsel::DirectedGraph g = netsel::io::read_edge_list(sel_graph, sel_undirected);
      const netsel::Selection sel = netsel::run_rule(sel_rule, g, sel_k, global.alpha, sel_epsilon);
      emit(global, netsel::io::selection_json(sel, g).dump(2));
    };
  });

  // centrality
  auto* cent = app.add_subcommand("centrality", "Compute a centrality vector or utility matrix");
  std::string cent_graph, cent_measure = "pagerank";
  bool cent_undirected = false, cent_utilities = false, cent_limit = false;
  double cent_epsilon = 1e-6;
  cent->add_option("--graph", cent_graph, "Edge-list file")->required();
  cent->add_flag("--undirected", cent_undirected, "Expand each line into both directions");
  cent->add_option("--measure", cent_measure, "pagerank or katz")
      ->check(CLI::IsMember({"pagerank", "katz"}));
  cent->add_flag("--utilities", cent_utilities, "Emit the per-pair utility matrix instead");
  cent->add_flag("--limit", cent_limit, "Evaluate at the decay-factor limit");
  cent->add_option("--epsilon", cent_epsilon, "Limit epsilon");
  cent->callback([&] {
    action = [&, cent_graph, cent_measure, cent_undirected, cent_utilities, cent_limit,
              cent_epsilon] {
      const netsel::DirectedGraph g = netsel::io::read_edge_list(cent_graph, cent_undirected);
      const netsel::Kind kind =
          cent_measure == "pagerank" ? netsel::Kind::pagerank : netsel::Kind::katz;
      const double alpha = netsel::resolve_alpha(g, kind, global.alpha);
      std::ostringstream out;
      if (cent_utilities) {
        const netsel::UtilityMatrix m = kind == netsel::Kind::pagerank
                                            ? netsel::pagerank_utilities(g, alpha)
                                            : netsel::katz_utilities(g, alpha);
        netsel::io::write_utilities_csv(out, g, m);
      } else {
        netsel::CentralityVector c;
        if (cent_limit) {
          c = kind == netsel::Kind::pagerank
                  ? netsel::limit_pagerank(g, cent_epsilon)
                  : netsel::limit_katz(g, netsel::spectral_radius(g).lambda, cent_epsilon);
        } else {
          c = kind == netsel::Kind::pagerank ? netsel::pagerank(g, alpha) : netsel::katz(g, alpha);
        }
        netsel::io::write_centrality_csv(out, g, c);
      }
      emit(global, out.str());
    };
  });

  // axioms-check
  auto* ax = app.add_subcommand("axioms-check", "Check an entitlement axiom for a selection");
  std::string ax_graph, ax_selection, ax_axiom = "clique", ax_scope = "components";
  bool ax_undirected = false;
  int ax_k = 1, ax_bound = 12;
  ax->add_option("--graph", ax_graph, "Edge-list file")->required();
  ax->add_flag("--undirected", ax_undirected, "Expand each line into both directions");
  ax->add_option("--k", ax_k, "Committee size the selection was made for")->required();
  ax->add_option("--selection", ax_selection, "Selection JSON (as emitted by select)")->required();
  ax->add_option("--axiom", ax_axiom, "Axiom to check")
      ->check(CLI::IsMember({"clique", "component", "subgraph"}));
  ax->add_option("--scope", ax_scope, "Subgraph axiom scope")
      ->check(CLI::IsMember({"components", "exhaustive"}));
  ax->add_option("--bound", ax_bound, "Exhaustive scope node cap");
  ax->callback([&] {
    action = [&, ax_graph, ax_selection, ax_axiom, ax_scope, ax_undirected, ax_k, ax_bound] {
      const netsel::DirectedGraph g = netsel::io::read_edge_list(ax_graph, ax_undirected);
      std::ifstream sel_in(ax_selection);
      if (!sel_in) throw netsel::InvalidArgument("cannot open selection: " + ax_selection);
      json sel_json = json::parse(sel_in);
      std::vector<netsel::NodeId> members = netsel::io::selection_members_from_json(sel_json);
      std::sort(members.begin(), members.end());
      netsel::AxiomReport report;
      if (ax_axiom == "clique") {
        report = netsel::check_clique_entitlement(g, ax_k, members);
      } else if (ax_axiom == "component") {
        report = netsel::check_component_entitlement(g, ax_k, members);
      } else {
        netsel::SubgraphScope scope;
        scope.mode = ax_scope == "exhaustive" ? netsel::SubgraphScope::Mode::exhaustive
                                              : netsel::SubgraphScope::Mode::components;
        scope.exhaustive_bound = ax_bound;
        report = netsel::check_subgraph_entitlement(g, ax_k, members, scope);
      }
      emit(global, netsel::io::axiom_report_json(report).dump(2));
    };
  });

  // generate
  auto* gen = app.add_subcommand("generate", "Sample a Euclidean graph");
  std::string gen_model = "e-radius", gen_ratio = "1:3", gen_points_out;
  netsel::EuclideanConfig gen_cfg;
  gen->add_option("--model", gen_model, "e-radius, e-appr, b-radius or b-appr");
  gen->add_option("--n", gen_cfg.n, "Number of points");
  gen->add_option("--ratio", gen_ratio, "Group mass split, e.g. 1:3");
  gen->add_option("--radius", gen_cfg.radius, "Radius models: connection radius");
  gen->add_option("--edge-prob", gen_cfg.edge_prob, "Radius models: connection probability");
  gen->add_option("--neighbors", gen_cfg.neighbor_count, "Appr models: closest-neighbor count");
  gen->add_option("--omit-prob", gen_cfg.omit_prob, "Appr models: per-neighbor omission probability");
  gen->add_option("--bias", gen_cfg.bias, "B models: competence bias added to y");
  gen->add_option("--points-out", gen_points_out, "Write the sampled points CSV here");
  gen->callback([&] {
    action = [&, gen_model, gen_ratio, gen_points_out] {
      netsel::EuclideanConfig cfg = gen_cfg;
      cfg.model = parse_model(gen_model);
      cfg.ratio = parse_ratio(gen_ratio, cfg.n);
      cfg.seed = global.seed;
      const netsel::PointCloud cloud = netsel::sample_points(cfg);
      const netsel::DirectedGraph g = netsel::build_graph(cloud, cfg);
      std::ostringstream out;
      netsel::io::write_edge_list(out, g);
      emit(global, out.str());
      if (!gen_points_out.empty()) {
        std::ofstream f(gen_points_out);
        if (!f) throw netsel::InvalidArgument("cannot write: " + gen_points_out);
        netsel::io::write_points_csv(f, cloud);
      }
    };
  });

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run an experiment pipeline");
  exp->require_subcommand(1);
  std::vector<std::string> exp_rules = {"top-rank", "mes-rank", "bos-rank", "seq-absorb-rank"};

  auto* sweep = exp->add_subcommand("sweep", "Max one-label count across committee sizes");
  std::string sw_graph, sw_labels;
  bool sw_undirected = false;
  int sw_kmin = 1, sw_kmax = 10;
  sweep->add_option("--graph", sw_graph)->required();
  sweep->add_option("--labels", sw_labels)->required();
  sweep->add_flag("--undirected", sw_undirected);
  sweep->add_option("--k-min", sw_kmin);
  sweep->add_option("--k-max", sw_kmax);
  sweep->add_option("--rules", exp_rules);
  sweep->callback([&] {
    action = [&, sw_graph, sw_labels, sw_undirected, sw_kmin, sw_kmax] {
      const netsel::LabeledGraph lg = netsel::io::read_labeled_graph(sw_graph, sw_labels, sw_undirected);
      std::vector<int> ks;
      for (int k = sw_kmin; k <= sw_kmax; ++k) ks.push_back(k);
      const netsel::ExperimentReport report = netsel::sweep_experiment(lg, ks, exp_rules);
      std::ostringstream out;
      if (global.format == "csv")
        netsel::io::write_report_csv(out, report);
      else
        out << netsel::io::report_json(report).dump(2);
      emit(global, out.str());
    };
  });

  auto* del = exp->add_subcommand("deletion", "Delete one label with probability p and reselect");
  std::string del_graph, del_labels, del_target = "both";
  bool del_undirected = false;
  std::vector<double> del_p = {0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<int> del_k = {10, 20, 50};
  int del_reps = 100;
  del->add_option("--graph", del_graph)->required();
  del->add_option("--labels", del_labels)->required();
  del->add_flag("--undirected", del_undirected);
  del->add_option("--target", del_target, "Label to prune, or 'both' to alternate");
  del->add_option("--p", del_p, "Deletion probabilities");
  del->add_option("--k", del_k, "Committee sizes");
  del->add_option("--reps", del_reps, "Replicates per probability");
  del->add_option("--rules", exp_rules);
  del->callback([&] {
    action = [&, del_graph, del_labels, del_target, del_undirected, del_p, del_k, del_reps] {
      const netsel::LabeledGraph lg =
          netsel::io::read_labeled_graph(del_graph, del_labels, del_undirected);
      const netsel::ExperimentReport report =
          netsel::deletion_experiment(lg, del_target, del_p, del_reps, del_k, exp_rules, global.seed);
      std::ostringstream out;
      if (global.format == "csv")
        netsel::io::write_report_csv(out, report);
      else
        out << netsel::io::report_json(report).dump(2);
      emit(global, out.str());
    };
  });

  auto* euc = exp->add_subcommand("euclidean", "Two-Gaussian Euclidean selection histograms");
  std::string euc_model = "e-radius", euc_ratio = "1:3", euc_points_out;
  netsel::EuclideanConfig euc_cfg;
  int euc_instances = 100, euc_k = 10;
  euc->add_option("--model", euc_model);
  euc->add_option("--n", euc_cfg.n);
  euc->add_option("--ratio", euc_ratio);
  euc->add_option("--radius", euc_cfg.radius);
  euc->add_option("--edge-prob", euc_cfg.edge_prob);
  euc->add_option("--neighbors", euc_cfg.neighbor_count);
  euc->add_option("--omit-prob", euc_cfg.omit_prob);
  euc->add_option("--bias", euc_cfg.bias);
  euc->add_option("--instances", euc_instances);
  euc->add_option("--k", euc_k);
  euc->add_option("--rules", exp_rules);
  euc->add_option("--points-out", euc_points_out, "Dump all selected points here (CSV)");
  euc->callback([&] {
    action = [&, euc_model, euc_ratio, euc_points_out, euc_instances, euc_k] {
      netsel::EuclideanConfig cfg = euc_cfg;
      cfg.model = parse_model(euc_model);
      cfg.ratio = parse_ratio(euc_ratio, cfg.n);
      cfg.seed = global.seed;
      const netsel::EuclideanOutcome outcome =
          netsel::euclidean_experiment(cfg, euc_instances, euc_k, exp_rules);
      std::ostringstream out;
      if (global.format == "csv")
        netsel::io::write_report_csv(out, outcome.report);
      else
        out << netsel::io::report_json(outcome.report).dump(2);
      emit(global, out.str());
      if (!euc_points_out.empty()) {
        std::ofstream f(euc_points_out);
        if (!f) throw netsel::InvalidArgument("cannot write: " + euc_points_out);
        netsel::io::write_selected_points_csv(f, outcome.points);
      }
    };
  });

  CLI11_PARSE(app, argc, argv);
  if (alpha_flag > 0.0) global.alpha = alpha_flag;

  try {
    action();
  } catch (const netsel::SizeCapError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
