#pragma once

#include <span>

#include "lightspan/graph.hpp"
#include "lightspan/metric_space.hpp"

namespace lightspan {

/// Stretch parameter of the greedy spanner; the guaranteed distortion is
/// 2t - 1 for every pair.
struct SpannerParams {
  int t = 2;
};

/// Classical greedy spanner: scan edges in increasing (weight, id) order and
/// keep an edge iff the spanner built so far cannot connect its endpoints
/// within (2t-1) times its weight. The result contains the MST.
Subgraph greedy_spanner(const Graph& g, int t);

/// Complete graph realizing a metric space; edge ids enumerate the pairs
/// (i, j), i < j, lexicographically.
Graph complete_graph(const MetricSpace& m);

/// Greedy stretch parameter giving O(log k) distortion over k terminals:
/// ceil(log2(max(k, 2))) + 1.
int backbone_stretch_param(int k);

/// Spanner of the terminal metric mapped back into the host graph: build the
/// metric closure over the terminals, run the greedy spanner on it with
/// t = backbone_stretch_param(|K|), and take the union of the shortest paths
/// realizing the selected closure edges. Every terminal pair then has
/// distortion at most 2t - 1 in the result.
Subgraph terminal_backbone(const Graph& g, std::span<const VertexId> terminals);

}  // namespace lightspan
