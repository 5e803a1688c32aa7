#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netsel/absorb.hpp"
#include "netsel/errors.hpp"
#include "netsel/rules.hpp"

namespace netsel {

inline const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = {
      "top-rank",        "top-katz",        "mes-rank",          "mes-katz",
      "bos-rank",        "bos-katz",        "seq-absorb-rank",   "seq-absorb-katz",
      "absorb-exact-rank", "absorb-exact-katz"};
  return names;
}

// Name-based dispatch used by the CLI and the experiment pipelines.
// "absorb-exact" routes to the class-appropriate exact algorithm.
inline Selection run_rule(const std::string& name, const DirectedGraph& g, int k,
                          std::optional<double> alpha = {}, double epsilon = 1e-6) {
  if (name == "top-rank") return top_rank(g, k, alpha);
  if (name == "top-katz") return top_katz(g, k, alpha);
  if (name == "mes-rank") return mes_rank(g, k, alpha);
  if (name == "mes-katz") return mes_katz(g, k, alpha);
  if (name == "bos-rank") return bos_rank(g, k, alpha);
  if (name == "bos-katz") return bos_katz(g, k, alpha);
  if (name == "seq-absorb-rank") return seq_absorb_rank(g, k, alpha);
  if (name == "seq-absorb-katz") return seq_absorb_katz(g, k, alpha);
  if (name == "absorb-exact" || name == "absorb-exact-rank")
    return absorb_exact(g, k, Kind::pagerank, epsilon);
  if (name == "absorb-exact-katz") return absorb_exact(g, k, Kind::katz, epsilon);
  throw InvalidArgument("unknown rule: " + name);
}

}  // namespace netsel
