#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "netsel/errors.hpp"
#include "netsel/graph.hpp"
#include "netsel/rng.hpp"

namespace netsel {

struct PointCloud {
  std::vector<std::array<double, 2>> points;
  std::vector<int> group;  // 0 or 1 per point
  std::uint64_t seed = 0;
};

enum class EdgeModel { e_radius, e_appr, b_radius, b_appr };

inline const char* edge_model_name(EdgeModel m) {
  switch (m) {
    case EdgeModel::e_radius: return "e-radius";
    case EdgeModel::e_appr: return "e-appr";
    case EdgeModel::b_radius: return "b-radius";
    case EdgeModel::b_appr: return "b-appr";
  }
  return "";
}

// Two-Gaussian Euclidean model. Group sizes are exact counts, not sampled.
// The paper-side parameters (radius, probabilities, neighbor count, bias)
// have no published values; these defaults give connected-ish desk-scale
// graphs and are all overridable.
struct EuclideanConfig {
  int n = 200;
  std::pair<int, int> ratio{50, 150};  // group 0 and group 1 counts
  std::array<double, 2> mean0{-1.0, 0.0};
  std::array<double, 2> mean1{1.0, 0.0};
  double sigma0 = 0.5;
  double sigma1 = 0.5;
  EdgeModel model = EdgeModel::e_radius;
  double radius = 0.5;       // *_radius models
  double edge_prob = 0.5;    // *_radius models
  int neighbor_count = 10;   // *_appr models
  double omit_prob = 0.2;    // *_appr models
  double bias = 0.5;         // b_* models: anchor shift along +y
  std::uint64_t seed = 0;
};

namespace detail {

constexpr std::uint64_t kTagPointX = 0xA11CE;
constexpr std::uint64_t kTagEdgeCoin = 0xED6E;

inline double dist2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

}  // namespace detail

inline PointCloud sample_points(const EuclideanConfig& cfg) {
  if (cfg.ratio.first + cfg.ratio.second != cfg.n)
    throw InvalidArgument("group ratio must sum to n");
  if (cfg.ratio.first < 0 || cfg.ratio.second < 0) throw InvalidArgument("group counts must be >= 0");
  PointCloud cloud;
  cloud.seed = cfg.seed;
  const CounterRng rng(cfg.seed);
  cloud.points.reserve(cfg.n);
  cloud.group.reserve(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    const bool second = i >= cfg.ratio.first;
    const auto& mean = second ? cfg.mean1 : cfg.mean0;
    const double sigma = second ? cfg.sigma1 : cfg.sigma0;
    const auto [z1, z2] = rng.normal_pair(detail::kTagPointX, static_cast<std::uint64_t>(i));
    cloud.points.push_back({mean[0] + sigma * z1, mean[1] + sigma * z2});
    cloud.group.push_back(second ? 1 : 0);
  }
  return cloud;
}

// Build the directed graph of a Euclidean model. Edge coins are drawn from
// the counter stream keyed by (source, target), so the edge set does not
// depend on construction order. B-models measure distances from the anchor
// (x, y + bias); a node is excluded as its own neighbor by identity only.
inline DirectedGraph build_graph(const PointCloud& cloud, const EuclideanConfig& cfg) {
  const int n = static_cast<int>(cloud.points.size());
  const CounterRng rng(cfg.seed);
  const bool biased = cfg.model == EdgeModel::b_radius || cfg.model == EdgeModel::b_appr;
  const bool by_radius = cfg.model == EdgeModel::e_radius || cfg.model == EdgeModel::b_radius;
  if (!by_radius && cfg.neighbor_count >= n)
    throw InvalidArgument("neighbor count must be below the number of points");
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<int> order(n);
  for (NodeId u = 0; u < n; ++u) {
    std::array<double, 2> anchor = cloud.points[u];
    if (biased) anchor[1] += cfg.bias;
    if (by_radius) {
      const double r2 = cfg.radius * cfg.radius;
      for (NodeId v = 0; v < n; ++v) {
        if (v == u) continue;
        if (detail::dist2(anchor, cloud.points[v]) > r2) continue;
        if (rng.uniform(detail::kTagEdgeCoin, u, v) < cfg.edge_prob) edges.emplace_back(u, v);
      }
    } else {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double da = detail::dist2(anchor, cloud.points[a]);
        const double db = detail::dist2(anchor, cloud.points[b]);
        if (da != db) return da < db;
        return a < b;
      });
      int taken = 0;
      for (int v : order) {
        if (v == u) continue;
        if (taken == cfg.neighbor_count) break;
        ++taken;
        if (rng.uniform(detail::kTagEdgeCoin, u, v) < cfg.omit_prob) continue;
        edges.emplace_back(u, v);
      }
    }
  }
  return DirectedGraph(n, std::move(edges));
}

}  // namespace netsel
