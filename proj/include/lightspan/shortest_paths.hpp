#pragma once

#include <limits>
#include <span>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Multi-source shortest-path distances with a predecessor forest rooted at
/// the sources. Single-source is the one-element case.
struct DistanceField {
  const Graph* graph = nullptr;
  std::vector<VertexId> sources;
  std::vector<double> dist;
  std::vector<int> parent_edge;  // -1 at sources and unreached vertices

  /// Edge ids of the forest path from v up to its source (v first).
  std::vector<int> path_edges_to(VertexId v) const;
};

DistanceField shortest_paths(const Graph& g, std::span<const VertexId> sources,
                             const std::vector<char>* edge_mask = nullptr);
DistanceField shortest_paths(const Subgraph& h,
                             std::span<const VertexId> sources);

/// Distance from s to t, abandoning the search once every frontier label
/// exceeds `cap`; returns +inf in that case.
double bounded_distance(const Graph& g, VertexId s, VertexId t, double cap,
                        const std::vector<char>* edge_mask = nullptr);

/// All-pairs distances, one Dijkstra per source, parallel across sources.
std::vector<std::vector<double>> all_pairs(
    const Graph& g, const std::vector<char>* edge_mask = nullptr);

}  // namespace lightspan
