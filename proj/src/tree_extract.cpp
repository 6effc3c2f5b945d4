#include "lightspan/tree_extract.hpp"

#include <algorithm>

#include "lightspan/numeric.hpp"
#include "lightspan/scaling.hpp"
#include "lightspan/shortest_paths.hpp"
#include "lightspan/slt.hpp"

namespace lightspan {

namespace {

Subgraph tree_from_plugin(const Subgraph& h,
                          const std::vector<EdgeInput>& edges) {
  const Graph& g = h.parent();
  Subgraph tree(g);
  for (const auto& [u, v, w] : edges) {
    int id = g.find_edge(u, v);
    if (id < 0 || !approx_eq(g.edge(id).weight, w))
      throw NotATree("plugin edge (" + std::to_string(u) + "," +
                     std::to_string(v) + ") is not an edge of the graph");
    if (!h.contains(id))
      throw NotATree("plugin edge is not part of the spanner");
    tree.add_edge(id);
  }
  if (tree.edge_count() != g.vertex_count() - 1)
    throw NotATree("plugin tree must have exactly n-1 distinct edges");
  if (!tree.spans_parent())
    throw DisconnectedGraph("plugin tree does not span the graph");
  return tree;
}

Subgraph tree_last_median(const Subgraph& h, double alpha) {
  const Graph& g = h.parent();
  // root = vertex with the smallest total distance, ties to the lowest id
  auto rows = all_pairs(g, &h.mask());
  VertexId root = 0;
  double best = kInf;
  for (int v = 0; v < g.vertex_count(); ++v) {
    double total = 0.0;
    for (double d : rows[v]) total += d;
    if (total < best) {
      best = total;
      root = v;
    }
  }
  Subgraph combined = slt_within(h, std::span<const VertexId>(&root, 1), alpha);
  // the shortest-path tree of the combine preserves its root distances
  DistanceField field =
      shortest_paths(g, std::span<const VertexId>(&root, 1), &combined.mask());
  Subgraph tree(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (field.parent_edge[v] != -1) tree.add_edge(field.parent_edge[v]);
  return tree;
}

}  // namespace

Subgraph spanning_tree(const Subgraph& h, const TreeStrategy& strategy) {
  if (!h.spans_parent())
    throw DisconnectedGraph("spanner does not span its graph");
  switch (strategy.kind) {
    case TreeStrategy::Kind::MstOfSpanner:
      return mst(h.parent(), &h.mask());
    case TreeStrategy::Kind::LastMedian:
      return tree_last_median(h, strategy.alpha);
    case TreeStrategy::Kind::Plugin:
      return tree_from_plugin(h, strategy.plugin_edges);
  }
  throw InvalidParams("unknown tree strategy");
}

std::function<double(double)> compose_profiles(
    std::function<double(double)> alpha, std::function<double(double)> beta) {
  return [alpha = std::move(alpha), beta = std::move(beta)](double eps) {
    return alpha(eps / 2.0) * beta(eps / 2.0);
  };
}

LightTreeReport light_tree(const Graph& g,
                           const std::optional<PriorityRanking>& pi,
                           double rho, const TreeStrategy& strategy) {
  MetricSpace graph_metric = MetricSpace::from_graph(g);
  PriorityRanking ranking = pi ? *pi : canonical_ranking(graph_metric);
  PrioritizedSpannerResult spanner_result =
      prioritized_spanner(g, ranking, rho);
  Subgraph tree = spanning_tree(spanner_result.spanner(), strategy);

  MetricSpace spanner_metric = subgraph_metric(spanner_result.spanner());
  MetricSpace tree_metric = subgraph_metric(tree);

  LightTreeReport report{
      std::move(spanner_result),
      std::move(tree),
      rho,
      0.0,
      0.0,
      DistortionProfile(graph_metric, spanner_metric),
      DistortionProfile(graph_metric, tree_metric),
      DistortionProfile(spanner_metric, tree_metric),
      1.0,
  };
  double tree_weight = mst(g).weight();
  report.spanner_lightness = report.spanner_result.lightness();
  report.tree_lightness =
      tree_weight > 0.0 ? report.tree.weight() / tree_weight : 1.0;
  report.average_distortion = lq_distortion(report.tree_profile, 1.0);
  return report;
}

}  // namespace lightspan
