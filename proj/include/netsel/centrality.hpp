#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "netsel/detail/dense.hpp"
#include "netsel/errors.hpp"
#include "netsel/graph.hpp"

namespace netsel {

enum class Kind { pagerank, katz };

inline const char* kind_name(Kind k) { return k == Kind::pagerank ? "pagerank" : "katz"; }

struct SolveOptions {
  double tol = 1e-10;
  long max_iter = 1'000'000;
  enum class Method { automatic, iterative, dense } method = Method::automatic;
  // Iterates above this value abort with a divergence error; 0 picks the
  // default n/eps^2 with eps = 1e-6.
  double divergence_guard = 0.0;
};

// Per-node walk-sum scores. Both measures include the empty walk, so every
// value is >= 1.
struct CentralityVector {
  std::vector<double> values;
  Kind kind = Kind::pagerank;
  double alpha = 0.0;
  double tolerance = 0.0;
};

// Per-pair walk sums: mu(u,v) is the weight of all walks from u to v. The
// diagonal carries the empty-walk term unless zeroed for election use.
struct UtilityMatrix {
  int n = 0;
  std::vector<double> mu;  // row-major, mu[u*n+v]
  Kind kind = Kind::pagerank;
  double alpha = 0.0;
  bool zero_diagonal = false;

  double at(NodeId u, NodeId v) const { return mu[static_cast<std::size_t>(u) * n + v]; }
  double& at(NodeId u, NodeId v) { return mu[static_cast<std::size_t>(u) * n + v]; }

  UtilityMatrix with_zero_diagonal() const {
    UtilityMatrix m = *this;
    for (NodeId u = 0; u < n; ++u) m.at(u, u) = 0.0;
    m.zero_diagonal = true;
    return m;
  }
};

struct SpectralEstimate {
  double lambda = 0.0;
  long iterations = 0;
  bool converged = false;
};

namespace detail {

constexpr int kDenseNodeLimit = 2048;      // one factorization for utilities up to here
constexpr int kDenseCentralityLimit = 256; // small solves go straight to LU

inline double step_weight(const DirectedGraph& g, NodeId u, Kind kind) {
  return kind == Kind::pagerank ? 1.0 / g.out_degree(u) : 1.0;
}

inline double guard_value(const DirectedGraph& g, const SolveOptions& opts) {
  if (opts.divergence_guard > 0) return opts.divergence_guard;
  return std::max(1, g.node_count()) * 1e12;
}

inline bool use_dense(const DirectedGraph& g, double alpha, const SolveOptions& opts) {
  switch (opts.method) {
    case SolveOptions::Method::dense:
      return true;
    case SolveOptions::Method::iterative:
      return false;
    case SolveOptions::Method::automatic:
      break;
  }
  // Near the decay limit the fixed point contracts at 1 - eps per step, so
  // iteration is impractical; everywhere else the iterative route keeps
  // scores as plain neighbor sums (ties between structurally identical
  // nodes stay exact).
  return g.node_count() <= kDenseNodeLimit && alpha > 0.99;
}

// (I - alpha*W)^T as a row-major dense matrix; row v couples the score of v
// to the scores of its in-neighbors.
inline std::vector<double> walk_system(const DirectedGraph& g, double alpha, Kind kind) {
  const int n = g.node_count();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    m[static_cast<std::size_t>(v) * n + v] = 1.0;
    for (NodeId u : g.in(v)) m[static_cast<std::size_t>(v) * n + u] -= alpha * step_weight(g, u, kind);
  }
  return m;
}

inline void validate_walk_solution(const std::vector<double>& x, Kind kind, double alpha) {
  for (double v : x) {
    if (!std::isfinite(v))
      throw DivergenceError(std::string(kind_name(kind)) + " walk sum is not finite at alpha=" +
                            std::to_string(alpha));
    if (v < -1e-9)
      throw DivergenceError(std::string(kind_name(kind)) +
                            " walk sum undefined: decay factor at or above 1/lambda (alpha=" +
                            std::to_string(alpha) + ")");
  }
}

inline std::vector<double> solve_walk_dense(const DirectedGraph& g, double alpha, Kind kind) {
  DenseLu lu(walk_system(g, alpha, kind), g.node_count());
  std::vector<double> x(g.node_count(), 1.0);
  lu.solve(x);
  validate_walk_solution(x, kind, alpha);
  return x;
}

inline std::vector<double> solve_walk_iterative(const DirectedGraph& g, double alpha, Kind kind,
                                                const SolveOptions& opts) {
  const int n = g.node_count();
  const double guard = guard_value(g, opts);
  std::vector<double> x(n, 1.0), xn(n);
  std::deque<double> res_history;
  double res = std::numeric_limits<double>::infinity();
  for (long iter = 0; iter < opts.max_iter; ++iter) {
    res = 0.0;
    double max_val = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double in_sum = 0.0;
      for (NodeId u : g.in(v)) in_sum += step_weight(g, u, kind) * x[u];
      const double s = 1.0 + alpha * in_sum;
      res = std::max(res, std::fabs(s - x[v]));
      max_val = std::max(max_val, s);
      xn[v] = s;
    }
    if (res < opts.tol) return x;  // x itself meets the recursion within tol
    if (max_val > guard)
      throw DivergenceError(std::string(kind_name(kind)) +
                            " iteration exceeded divergence guard: decay factor too large (alpha=" +
                            std::to_string(alpha) + ")");
    res_history.push_back(res);
    if (res_history.size() > 64) {
      if (res > 1.0 && res > 1.5 * res_history.front())
        throw DivergenceError(std::string(kind_name(kind)) +
                              " residual growing: decay factor at or above 1/lambda (alpha=" +
                              std::to_string(alpha) + ")");
      res_history.pop_front();
    }
    x.swap(xn);
  }
  throw ConvergenceError(std::string(kind_name(kind)) + " fixed point not reached in " +
                             std::to_string(opts.max_iter) + " iterations",
                         res);
}

inline CentralityVector solve_walk(const DirectedGraph& g, double alpha, Kind kind,
                                   const SolveOptions& opts) {
  CentralityVector c;
  c.kind = kind;
  c.alpha = alpha;
  c.tolerance = opts.tol;
  c.values = use_dense(g, alpha, opts) ? solve_walk_dense(g, alpha, kind)
                                       : solve_walk_iterative(g, alpha, kind, opts);
  return c;
}

}  // namespace detail

inline CentralityVector pagerank(const DirectedGraph& g, double alpha, SolveOptions opts = {}) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("pagerank decay factor must be in (0,1)");
  if (!(opts.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  return detail::solve_walk(g, alpha, Kind::pagerank, opts);
}

inline CentralityVector katz(const DirectedGraph& g, double alpha, SolveOptions opts = {}) {
  if (!(alpha > 0.0)) throw InvalidArgument("katz decay factor must be positive");
  if (!(opts.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  return detail::solve_walk(g, alpha, Kind::katz, opts);
}

// Power iteration for the largest adjacency eigenvalue. Reports lambda = 0
// for graphs whose iterate vanishes (DAGs). Never throws on slow
// convergence; callers must pad decay-factor margins when converged=false.
inline SpectralEstimate spectral_radius(const DirectedGraph& g, double tol = 1e-9,
                                        long max_iter = 100'000) {
  const int n = g.node_count();
  SpectralEstimate est;
  if (n == 0) {
    est.converged = true;
    return est;
  }
  std::vector<double> x(n, 1.0 / n), y(n);
  std::deque<double> window;
  constexpr std::size_t kWindow = 8;
  for (long iter = 1; iter <= max_iter; ++iter) {
    double norm = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double s = 0.0;
      for (NodeId u : g.in(v)) s += x[u];
      y[v] = s;
      norm += s;
    }
    est.iterations = iter;
    if (norm < 1e-300) {
      est.lambda = 0.0;
      est.converged = true;
      return est;
    }
    window.push_back(norm);
    if (window.size() > kWindow) window.pop_front();
    double lo = window.front(), hi = window.front(), mean = 0.0;
    for (double w : window) {
      lo = std::min(lo, w);
      hi = std::max(hi, w);
      mean += w;
    }
    mean /= static_cast<double>(window.size());
    est.lambda = mean;
    if (window.size() == kWindow && hi - lo <= tol * std::max(1.0, mean)) {
      est.converged = true;
      return est;
    }
    for (NodeId v = 0; v < n; ++v) x[v] = y[v] / norm;
  }
  return est;
}

namespace detail {

inline std::vector<double> utility_row_iterative(const DirectedGraph& g, NodeId source, double alpha,
                                                 Kind kind, const SolveOptions& opts) {
  const int n = g.node_count();
  const double guard = guard_value(g, opts);
  std::vector<double> acc(n, 0.0), y(n, 0.0), yn(n);
  y[source] = 1.0;
  double prev_norm = 1.0;
  for (long iter = 0; iter < opts.max_iter; ++iter) {
    double norm = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      acc[v] += y[v];
      double in_sum = 0.0;
      for (NodeId u : g.in(v)) in_sum += step_weight(g, u, kind) * y[u];
      const double s = alpha * in_sum;
      yn[v] = s;
      norm += s;
    }
    if (norm < opts.tol * 1e-3) return acc;
    const double growth = norm / prev_norm;
    if (growth < 1.0 && norm / (1.0 - growth) < opts.tol) {
      for (NodeId v = 0; v < n; ++v) acc[v] += yn[v] / (1.0 - growth);
      return acc;
    }
    if (norm > guard)
      throw DivergenceError(std::string(kind_name(kind)) +
                            " per-source walk sum diverges (alpha=" + std::to_string(alpha) + ")");
    prev_norm = norm;
    y.swap(yn);
  }
  throw ConvergenceError("per-source walk sum not converged", prev_norm);
}

inline UtilityMatrix utilities(const DirectedGraph& g, double alpha, Kind kind,
                               const SolveOptions& opts) {
  const int n = g.node_count();
  UtilityMatrix m;
  m.n = n;
  m.kind = kind;
  m.alpha = alpha;
  m.mu.assign(static_cast<std::size_t>(n) * n, 0.0);
  // Same routing as the centrality solves: direct solve only where the
  // per-source iteration would contract at 1 - eps per step. One
  // factorization then serves all n rows.
  const bool dense = opts.method == SolveOptions::Method::dense ||
                     (opts.method == SolveOptions::Method::automatic && n <= kDenseNodeLimit &&
                      alpha > 0.99);
  if (dense && n > 0) {
    DenseLu lu(walk_system(g, alpha, kind), n);
    std::vector<double> col(n);
    for (NodeId u = 0; u < n; ++u) {
      std::fill(col.begin(), col.end(), 0.0);
      col[u] = 1.0;
      lu.solve(col);
      validate_walk_solution(col, kind, alpha);
      for (NodeId v = 0; v < n; ++v) m.at(u, v) = col[v];
    }
  } else {
    // Rows are independent; any evaluation order gives identical bits.
    for (NodeId u = 0; u < n; ++u) {
      const std::vector<double> row = utility_row_iterative(g, u, alpha, kind, opts);
      for (NodeId v = 0; v < n; ++v) m.at(u, v) = row[v];
    }
  }
  return m;
}

}  // namespace detail

inline UtilityMatrix pagerank_utilities(const DirectedGraph& g, double alpha, SolveOptions opts = {}) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("pagerank decay factor must be in (0,1)");
  return detail::utilities(g, alpha, Kind::pagerank, opts);
}

inline UtilityMatrix katz_utilities(const DirectedGraph& g, double alpha, SolveOptions opts = {}) {
  if (!(alpha > 0.0)) throw InvalidArgument("katz decay factor must be positive");
  return detail::utilities(g, alpha, Kind::katz, opts);
}

inline SolveOptions limit_solve_options(const DirectedGraph& g, double epsilon) {
  SolveOptions opts;
  opts.tol = 1e-8;
  opts.divergence_guard = std::max(1, g.node_count()) / (epsilon * epsilon);
  // At the limit the iteration contracts at 1 - eps per step regardless of
  // the measure (for Katz via alpha*lambda), so solve directly.
  if (g.node_count() <= detail::kDenseNodeLimit) opts.method = SolveOptions::Method::dense;
  return opts;
}

// PageRank with the decay factor pushed to its upper limit, alpha = 1 - eps.
inline CentralityVector limit_pagerank(const DirectedGraph& g, double epsilon = 1e-6) {
  if (!(epsilon > 0.0 && epsilon <= 0.1)) throw InvalidArgument("epsilon must be in (0, 0.1]");
  return pagerank(g, 1.0 - epsilon, limit_solve_options(g, epsilon));
}

// Katz with alpha -> 1/lambda, where lambda_ref is the spectral radius of
// the graph the caller is studying (the original graph in absorbing runs,
// fixed across subset evaluations). lambda_ref <= 0 means an acyclic
// reference graph; walk counts are then finite at any alpha and the natural
// limit is alpha -> 1, matching PageRank on functional inputs.
inline CentralityVector limit_katz(const DirectedGraph& g, double lambda_ref, double epsilon = 1e-6) {
  if (!(epsilon > 0.0 && epsilon <= 0.1)) throw InvalidArgument("epsilon must be in (0, 0.1]");
  const double alpha = lambda_ref > 0.0 ? (1.0 - epsilon) / lambda_ref : 1.0 - epsilon;
  return katz(g, alpha, limit_solve_options(g, epsilon));
}

// F_G(S) = min over S of the centrality in G - E+(S).
inline double group_score(const DirectedGraph& g, const NodeSet& s, Kind kind, double alpha,
                          SolveOptions opts = {}) {
  if (s.empty()) throw InvalidArgument("group score needs a nonempty subset");
  check_subset(g, s);
  const DirectedGraph cut = remove_outgoing(g, s);
  const CentralityVector c =
      kind == Kind::pagerank ? pagerank(cut, alpha, opts) : katz(cut, alpha, opts);
  double best = std::numeric_limits<double>::infinity();
  for (NodeId v : s) best = std::min(best, c.values[v]);
  return best;
}

struct LimitScore {
  double score = 0.0;
  bool divergent = false;
};

// Group score at the decay-factor limit. The limit is undefined when the
// score keeps growing as eps shrinks (a saturated cycle feeds the selected
// set); detected by comparing evaluations at eps and eps/2.
inline LimitScore limit_group_score(const DirectedGraph& g, const NodeSet& s, Kind kind,
                                    double epsilon = 1e-6, double lambda_ref = 0.0) {
  if (s.empty()) throw InvalidArgument("group score needs a nonempty subset");
  check_subset(g, s);
  const DirectedGraph cut = remove_outgoing(g, s);
  auto eval = [&](double eps) {
    const CentralityVector c = kind == Kind::pagerank ? limit_pagerank(cut, eps)
                                                      : limit_katz(cut, lambda_ref, eps);
    double best = std::numeric_limits<double>::infinity();
    for (NodeId v : s) best = std::min(best, c.values[v]);
    return best;
  };
  LimitScore out;
  try {
    out.score = eval(epsilon);
    const double refined = eval(epsilon / 2.0);
    if (refined > 1.5 * out.score) out.divergent = true;
  } catch (const DivergenceError&) {
    out.divergent = true;
  }
  return out;
}

}  // namespace netsel
