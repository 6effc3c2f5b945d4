#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/metrics.hpp"
#include "lightspan/prioritized_spanner.hpp"

namespace lightspan {

/// How to pick a spanning tree out of a spanner. The built-in strategies are
/// stand-ins; `plugin` accepts an externally constructed tree and validates
/// it.
struct TreeStrategy {
  enum class Kind { MstOfSpanner, LastMedian, Plugin };

  Kind kind = Kind::MstOfSpanner;
  double alpha = 3.0;  // last-median root stretch
  std::vector<EdgeInput> plugin_edges;

  static TreeStrategy mst_of_spanner() { return {}; }
  static TreeStrategy last_median(double alpha = 3.0) {
    TreeStrategy s;
    s.kind = Kind::LastMedian;
    s.alpha = alpha;
    return s;
  }
  static TreeStrategy plugin(std::vector<EdgeInput> edges) {
    TreeStrategy s;
    s.kind = Kind::Plugin;
    s.plugin_edges = std::move(edges);
    return s;
  }
};

/// Spanning tree of a connected subgraph.
///  - mst-of-spanner: MST of the subgraph under the global edge order.
///  - last-median: shallow-light combine rooted at the vertex minimizing the
///    total distance to all others, then the shortest-path tree of that
///    union; root distances stretch by at most alpha.
///  - plugin: externally supplied edge list, validated against h.
Subgraph spanning_tree(const Subgraph& h, const TreeStrategy& strategy);

/// Scaling profile of a two-stage embedding: gamma(eps) =
/// alpha(eps/2) * beta(eps/2).
std::function<double(double)> compose_profiles(
    std::function<double(double)> alpha, std::function<double(double)> beta);

struct LightTreeReport {
  PrioritizedSpannerResult spanner_result;
  Subgraph tree;
  double rho = 0.0;
  double spanner_lightness = 1.0;
  double tree_lightness = 1.0;
  DistortionProfile spanner_profile;  // spanner vs graph
  DistortionProfile tree_profile;     // tree vs graph
  DistortionProfile stage_profile;    // tree vs spanner
  double average_distortion = 1.0;    // dist_1 of the tree
};

/// Light spanning tree: prioritized spanner under the canonical ranking of
/// the graph metric (or a caller-supplied ranking), then a spanning tree of
/// it. The tree inherits the spanner's lightness budget; the report carries
/// the measured per-stage profiles feeding the composition bound.
LightTreeReport light_tree(const Graph& g,
                           const std::optional<PriorityRanking>& pi,
                           double rho,
                           const TreeStrategy& strategy = TreeStrategy());

}  // namespace lightspan
