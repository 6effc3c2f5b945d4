#pragma once

#include <span>

#include "lightspan/graph.hpp"

namespace lightspan {

/// Shallow-light subgraph rooted at a vertex set: contains the MST, keeps
/// every vertex within alpha times its true distance to the roots, and weighs
/// at most (1 + 2/(alpha-1)) times the MST.
///
/// The construction walks the MST's Euler tour from a root, accumulating
/// traversed weight; whenever the best certified distance to the roots
/// exceeds alpha times the true one, it grafts the shortest-path forest
/// branch to the current vertex and resets the accumulator.
Subgraph slt(const Graph& g, std::span<const VertexId> roots, double alpha);

/// Same construction restricted to the edges of a subgraph; distances and the
/// MST are those of the masked graph.
Subgraph slt_within(const Subgraph& h, std::span<const VertexId> roots,
                    double alpha);

}  // namespace lightspan
