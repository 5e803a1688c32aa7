#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netsel/centrality.hpp"
#include "netsel/errors.hpp"

namespace netsel {

// Committee election over nonnegative utilities; every candidate costs 1.
// When built from a graph, voters and candidates are the same node set.
struct ElectionProfile {
  int n_voters = 0;
  int n_candidates = 0;
  std::vector<double> mu;  // row-major voters x candidates

  double util(int voter, int cand) const {
    return mu[static_cast<std::size_t>(voter) * n_candidates + cand];
  }
  double& util(int voter, int cand) {
    return mu[static_cast<std::size_t>(voter) * n_candidates + cand];
  }
  double total_utility(int cand) const {
    double s = 0.0;
    for (int i = 0; i < n_voters; ++i) s += util(i, cand);
    return s;
  }

  static ElectionProfile from_utilities(const UtilityMatrix& m) {
    ElectionProfile p;
    p.n_voters = p.n_candidates = m.n;
    p.mu = m.mu;
    return p;
  }
};

// Equal-budget market certificate: budget_total split equally, payments per
// voter and candidate.
struct PriceSystem {
  double budget_total = 0.0;
  int n_voters = 0;
  int n_candidates = 0;
  std::vector<double> payments;  // row-major voters x candidates

  double pay(int voter, int cand) const {
    return payments[static_cast<std::size_t>(voter) * n_candidates + cand];
  }
  double& pay(int voter, int cand) {
    return payments[static_cast<std::size_t>(voter) * n_candidates + cand];
  }
};

struct Committee {
  std::vector<int> members;  // in selection order
  std::vector<double> rho_trace;
  enum class Completion { none, add1u, bos_overspend };
  Completion completion = Completion::none;
  int completion_rounds = 0;        // escalation steps or overspend rounds
  int filled_greedily = 0;          // seats added by the utilitarian fill
  double budget_total = 0.0;        // budget of the run that produced members
};

// Boundary slack for affordability: a final round that exhausts every
// supporter's budget pools to exactly 1 in real arithmetic but drifts a few
// ulps below after earlier deductions.
constexpr double kAffordTol = 1e-9;

// Minimum rho with sum_i min(b_i, u_i * rho) >= 1, or nullopt when the
// supporters' pooled budget cannot reach 1. Exact piecewise-linear walk over
// the cap breakpoints b_i/u_i, no bisection.
inline std::optional<double> rho_affordable(const std::vector<double>& budgets,
                                            const std::vector<double>& utilities) {
  if (budgets.size() != utilities.size())
    throw InvalidArgument("budgets and utilities must have equal length");
  struct Supporter {
    double ratio, budget, util;
  };
  std::vector<Supporter> sup;
  sup.reserve(budgets.size());
  double pooled = 0.0;
  double active_util = 0.0;
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (budgets[i] < 0 || utilities[i] < 0) throw InvalidArgument("budgets and utilities must be >= 0");
    if (utilities[i] <= 0.0) continue;
    sup.push_back({budgets[i] / utilities[i], budgets[i], utilities[i]});
    pooled += budgets[i];
    active_util += utilities[i];
  }
  if (pooled < 1.0 - kAffordTol) return std::nullopt;
  std::sort(sup.begin(), sup.end(), [](const Supporter& a, const Supporter& b) { return a.ratio < b.ratio; });
  double capped = 0.0;
  for (const Supporter& s : sup) {
    if (active_util > 0.0 && capped + active_util * s.ratio >= 1.0 - kAffordTol)
      return std::max(0.0, 1.0 - capped) / active_util;
    capped += s.budget;
    active_util -= s.util;
  }
  // Pooled budget >= 1, so the crossing lies at or before the last breakpoint;
  // reaching here means it sits exactly at the end (floating-point slack).
  return sup.back().ratio;
}

namespace detail {

inline int tie_value(const std::vector<int>& tie_break, int cand) {
  return tie_break.empty() ? cand : tie_break[cand];
}

inline std::vector<double> candidate_column(const ElectionProfile& p, int cand) {
  std::vector<double> col(p.n_voters);
  for (int i = 0; i < p.n_voters; ++i) col[i] = p.util(i, cand);
  return col;
}

}  // namespace detail

// Method of Equal Shares. Voters start with budget_total/n each; every round
// elects the candidate affordable at the lowest rho and charges its
// supporters min(b_i, u_i * rho). Stops when k seats are filled or nothing is
// affordable, possibly returning fewer than k members.
inline std::pair<Committee, PriceSystem> mes(const ElectionProfile& profile, int k,
                                             double budget_total = -1.0,
                                             const std::vector<int>& tie_break = {}) {
  if (k < 1) throw InvalidArgument("committee size must be >= 1");
  if (budget_total < 0.0) budget_total = k;
  if (budget_total < k) throw InvalidArgument("budget_total must be at least k");
  const int n = profile.n_voters;
  const int c = profile.n_candidates;
  Committee committee;
  committee.budget_total = budget_total;
  PriceSystem ps;
  ps.budget_total = budget_total;
  ps.n_voters = n;
  ps.n_candidates = c;
  ps.payments.assign(static_cast<std::size_t>(n) * c, 0.0);
  std::vector<double> budgets(n, budget_total / n);
  std::vector<char> elected(c, 0);
  std::vector<double> col(n);
  while (static_cast<int>(committee.members.size()) < k) {
    int best = -1;
    double best_rho = std::numeric_limits<double>::infinity();
    for (int cand = 0; cand < c; ++cand) {
      if (elected[cand]) continue;
      for (int i = 0; i < n; ++i) col[i] = profile.util(i, cand);
      const auto rho = rho_affordable(budgets, col);
      if (!rho) continue;
      if (*rho < best_rho ||
          (*rho == best_rho && best != -1 &&
           std::pair(detail::tie_value(tie_break, cand), cand) <
               std::pair(detail::tie_value(tie_break, best), best))) {
        best_rho = *rho;
        best = cand;
      }
    }
    if (best == -1) break;
    elected[best] = 1;
    committee.members.push_back(best);
    committee.rho_trace.push_back(best_rho);
    for (int i = 0; i < n; ++i) {
      const double u = profile.util(i, best);
      if (u <= 0.0) continue;
      const double paid = std::min(budgets[i], u * best_rho);
      budgets[i] = std::max(0.0, budgets[i] - paid);
      ps.pay(i, best) += paid;
    }
  }
  return {std::move(committee), std::move(ps)};
}

// MES with the Add1U completion: escalate the total budget one unit at a
// time until a run fills all k seats, keep the largest committee found, and
// top up any still-missing seats greedily by total utility.
inline Committee add1u_complete(const ElectionProfile& profile, int k,
                                const std::vector<int>& tie_break = {}) {
  if (k < 1) throw InvalidArgument("committee size must be >= 1");
  Committee best;
  // With budget k*n every voter can single-handedly fund k candidates, so
  // escalation past that point cannot help.
  const double budget_stop = static_cast<double>(k) * std::max(1, profile.n_voters);
  for (double budget = k; budget <= budget_stop; budget += 1.0) {
    auto [committee, ps] = mes(profile, k, budget, tie_break);
    if (committee.members.size() > best.members.size() || best.budget_total == 0.0) {
      best = std::move(committee);
    }
    if (static_cast<int>(best.members.size()) >= k) break;
  }
  if (best.budget_total != static_cast<double>(k)) {
    best.completion = Committee::Completion::add1u;
    best.completion_rounds = static_cast<int>(best.budget_total) - k;
  }
  if (static_cast<int>(best.members.size()) < k) {
    std::vector<char> elected(profile.n_candidates, 0);
    for (int m : best.members) elected[m] = 1;
    while (static_cast<int>(best.members.size()) < k) {
      int pick = -1;
      double pick_util = 0.0;
      for (int cand = 0; cand < profile.n_candidates; ++cand) {
        if (elected[cand]) continue;
        const double u = profile.total_utility(cand);
        if (u > pick_util) {
          pick_util = u;
          pick = cand;
        }
      }
      if (pick == -1) break;  // no positively supported candidate left
      elected[pick] = 1;
      best.members.push_back(pick);
      best.completion = Committee::Completion::add1u;
      ++best.filled_greedily;
    }
  }
  return best;
}

// Bounded-overspending variant: rounds where some candidate is affordable
// run exactly like MES; otherwise the candidate with the largest pooled
// supporter budget B_c (smallest overspend ratio 1/B_c) is bought, its
// supporters paying everything they have and the deficit going unpaid.
inline std::pair<Committee, PriceSystem> bos(const ElectionProfile& profile, int k,
                                             double budget_total = -1.0,
                                             const std::vector<int>& tie_break = {}) {
  if (k < 1) throw InvalidArgument("committee size must be >= 1");
  if (budget_total < 0.0) budget_total = k;
  if (budget_total < k) throw InvalidArgument("budget_total must be at least k");
  const int n = profile.n_voters;
  const int c = profile.n_candidates;
  Committee committee;
  committee.budget_total = budget_total;
  PriceSystem ps;
  ps.budget_total = budget_total;
  ps.n_voters = n;
  ps.n_candidates = c;
  ps.payments.assign(static_cast<std::size_t>(n) * c, 0.0);
  std::vector<double> budgets(n, budget_total / n);
  std::vector<char> elected(c, 0);
  std::vector<double> col(n);
  while (static_cast<int>(committee.members.size()) < k) {
    int best = -1;
    double best_rho = std::numeric_limits<double>::infinity();
    for (int cand = 0; cand < c; ++cand) {
      if (elected[cand]) continue;
      for (int i = 0; i < n; ++i) col[i] = profile.util(i, cand);
      const auto rho = rho_affordable(budgets, col);
      if (!rho) continue;
      if (*rho < best_rho ||
          (*rho == best_rho && best != -1 &&
           std::pair(detail::tie_value(tie_break, cand), cand) <
               std::pair(detail::tie_value(tie_break, best), best))) {
        best_rho = *rho;
        best = cand;
      }
    }
    if (best != -1) {  // a plain MES round
      elected[best] = 1;
      committee.members.push_back(best);
      committee.rho_trace.push_back(best_rho);
      for (int i = 0; i < n; ++i) {
        const double u = profile.util(i, best);
        if (u <= 0.0) continue;
        const double paid = std::min(budgets[i], u * best_rho);
        budgets[i] = std::max(0.0, budgets[i] - paid);
        ps.pay(i, best) += paid;
      }
      continue;
    }
    // Overspend round: maximize pooled supporter budget, ties by larger
    // total utility, then id.
    int pick = -1;
    double pick_pool = 0.0, pick_util = 0.0;
    for (int cand = 0; cand < c; ++cand) {
      if (elected[cand]) continue;
      double pool = 0.0;
      for (int i = 0; i < n; ++i)
        if (profile.util(i, cand) > 0.0) pool += budgets[i];
      if (pool <= 0.0) continue;
      const double total = profile.total_utility(cand);
      if (pick == -1 || pool > pick_pool || (pool == pick_pool && total > pick_util)) {
        pick = cand;
        pick_pool = pool;
        pick_util = total;
      }
    }
    if (pick == -1) {
      // Degenerate endgame: nobody has money; fill by total utility.
      double best_util = 0.0;
      for (int cand = 0; cand < c; ++cand) {
        if (elected[cand]) continue;
        const double u = profile.total_utility(cand);
        if (u > best_util) {
          best_util = u;
          pick = cand;
        }
      }
      if (pick == -1) break;
      elected[pick] = 1;
      committee.members.push_back(pick);
      committee.rho_trace.push_back(std::numeric_limits<double>::infinity());
      ++committee.filled_greedily;
      continue;
    }
    elected[pick] = 1;
    committee.members.push_back(pick);
    committee.rho_trace.push_back(std::numeric_limits<double>::infinity());
    committee.completion = Committee::Completion::bos_overspend;
    ++committee.completion_rounds;
    for (int i = 0; i < n; ++i) {
      if (profile.util(i, pick) <= 0.0) continue;
      ps.pay(i, pick) += budgets[i];
      budgets[i] = 0.0;
    }
  }
  return {std::move(committee), std::move(ps)};
}

namespace detail {

inline Committee top_by_score(const std::vector<double>& score, int k) {
  std::vector<int> order(score.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return a < b;
  });
  Committee c;
  for (int i = 0; i < k && i < static_cast<int>(order.size()); ++i) c.members.push_back(order[i]);
  return c;
}

}  // namespace detail

// Approval Voting on utilities: score of c is the total utility.
inline Committee av_winners(const ElectionProfile& profile, int k) {
  std::vector<double> score(profile.n_candidates, 0.0);
  for (int i = 0; i < profile.n_voters; ++i)
    for (int cand = 0; cand < profile.n_candidates; ++cand) score[cand] += profile.util(i, cand);
  return detail::top_by_score(score, k);
}

// Satisfaction Approval Voting: each voter's utility row is normalized to
// sum 1 before scoring; all-zero rows contribute nothing (0/0 := 0).
inline Committee sav_winners(const ElectionProfile& profile, int k) {
  std::vector<double> score(profile.n_candidates, 0.0);
  for (int i = 0; i < profile.n_voters; ++i) {
    double row = 0.0;
    for (int cand = 0; cand < profile.n_candidates; ++cand) row += profile.util(i, cand);
    if (row <= 0.0) continue;
    for (int cand = 0; cand < profile.n_candidates; ++cand) score[cand] += profile.util(i, cand) / row;
  }
  return detail::top_by_score(score, k);
}

struct PriceabilityReport {
  bool ok = true;
  int violated_condition = 0;  // 1..5 when !ok
  int voter = -1;
  int candidate = -1;
};

// The five market conditions of a supporting price system, with tolerance on
// the real-valued comparisons.
inline PriceabilityReport priceability_check(const ElectionProfile& profile, int k,
                                             const Committee& committee, const PriceSystem& ps,
                                             double tol = 1e-9) {
  (void)k;
  if (ps.n_voters != profile.n_voters || ps.n_candidates != profile.n_candidates)
    throw InvalidArgument("price system does not match the profile");
  const int n = profile.n_voters;
  const int c = profile.n_candidates;
  std::vector<char> elected(c, 0);
  for (int m : committee.members) elected[m] = 1;
  const double share = ps.budget_total / n;
  // 1: no payments to unsupported candidates.
  for (int i = 0; i < n; ++i)
    for (int cand = 0; cand < c; ++cand)
      if (profile.util(i, cand) <= 0.0 && ps.pay(i, cand) > tol) return {false, 1, i, cand};
  // 2: nobody spends more than the equal share on the committee.
  for (int i = 0; i < n; ++i) {
    double spent = 0.0;
    for (int cand = 0; cand < c; ++cand)
      if (elected[cand]) spent += ps.pay(i, cand);
    if (spent > share + tol) return {false, 2, i, -1};
  }
  // 3: every elected candidate is fully paid.
  for (int cand = 0; cand < c; ++cand) {
    if (!elected[cand]) continue;
    double paid = 0.0;
    for (int i = 0; i < n; ++i) paid += ps.pay(i, cand);
    if (std::fabs(paid - 1.0) > tol) return {false, 3, -1, cand};
  }
  // 4: no payments to unelected candidates.
  for (int i = 0; i < n; ++i)
    for (int cand = 0; cand < c; ++cand)
      if (!elected[cand] && ps.pay(i, cand) > tol) return {false, 4, i, cand};
  // 5: supporters of an unelected candidate cannot jointly buy it.
  std::vector<double> leftover(n, share);
  for (int i = 0; i < n; ++i)
    for (int cand = 0; cand < c; ++cand)
      if (elected[cand]) leftover[i] -= ps.pay(i, cand);
  for (int cand = 0; cand < c; ++cand) {
    if (elected[cand]) continue;
    double pool = 0.0;
    for (int i = 0; i < n; ++i)
      if (profile.util(i, cand) > 0.0) pool += leftover[i];
    if (pool >= 1.0 + tol) return {false, 5, -1, cand};
  }
  return {};
}

}  // namespace netsel
