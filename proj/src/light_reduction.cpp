#include "lightspan/light_reduction.hpp"

#include <vector>

#include "lightspan/numeric.hpp"

namespace lightspan {

Graph reweight(const Graph& g, const Subgraph& tree, double delta) {
  if (!(delta > 0.0) || delta > 1.0)
    throw DeltaOutOfRange("delta must lie in (0, 1]");
  if (&tree.parent() != &g || tree.edge_ids() != mst(g).edge_ids())
    throw NotTheMst("reweight requires the MST of the input graph");
  std::vector<double> weights(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    double w = g.edge(i).weight;
    weights[i] = tree.contains(i) ? w : w / delta;
  }
  return g.with_weights(std::move(weights));
}

ReduceResult reduce(const SpannerBuilder& builder, const Graph& g,
                    double delta) {
  Subgraph tree = mst(g);
  Graph reweighted = reweight(g, tree, delta);
  Subgraph built = builder.build(reweighted);
  if (built.parent().edge_count() != g.edge_count())
    throw InvalidParams("builder output does not match the input graph");

  ReduceResult result{Subgraph(g)};
  result.delta = delta;
  // edge ids survive reweighting, so the output maps back one-to-one
  for (int id : built.edge_ids()) result.spanner.add_edge(id);
  result.spanner.add_edges(tree);

  double tree_weight = tree.weight();
  double built_weight_reweighted = 0.0;
  double built_excess_reweighted = 0.0;
  for (int id : built.edge_ids()) {
    built_weight_reweighted += reweighted.edge(id).weight;
    if (!tree.contains(id))
      built_excess_reweighted += reweighted.edge(id).weight;
  }
  result.base_lightness =
      tree_weight > 0.0 ? built_weight_reweighted / tree_weight : 1.0;
  result.reweighted_excess = built_excess_reweighted;
  result.excess_weight = result.spanner.weight() - tree_weight;
  result.lightness =
      tree_weight > 0.0 ? result.spanner.weight() / tree_weight : 1.0;
  return result;
}

}  // namespace lightspan
