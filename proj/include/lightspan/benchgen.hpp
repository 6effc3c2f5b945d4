#pragma once

#include <cstdint>

#include "lightspan/graph.hpp"

namespace lightspan {

/// The lightness/average-distortion trade-off witness: a complete graph on
/// n+1 vertices where consecutive vertices are joined by unit edges (the MST
/// path, weight n) and all other pairs by weight-2 edges.
Graph lower_bound_graph(int n);

struct LowerBoundVerdict {
  bool applicable = false;  // lightness(h) <= 1 + rho
  double rho = 0.0;
  double lightness = 0.0;
  int k = 0;                 // ceil(rho * n)
  int heavy_edge_count = 0;  // q: weight-2 edges in h
  bool heavy_count_ok = false;   // q <= k
  bool weight_ledger_ok = false; // w(h) >= n + q
  double dist1 = 0.0;
  double required = 0.0;  // 1/(128 rho)
  // proof-step diagnostics, to localize a violation if one ever appeared
  int incident_set_size = 0;  // |S|, vertices touching a heavy edge
  int near_set_size = 0;      // |N|, within delta of S along unit edges
  int min_far_count = 0;      // min over u outside N of |{v: d_h(u,v) > delta}|
  bool diagnostics_ok = false;
  bool pass = false;
};

/// Checks the guarantee that any subgraph of lightness 1 + rho on the
/// lower-bound graph has average distortion at least 1/(128 rho), together
/// with the edge-count ledger and the intermediate counting steps.
LowerBoundVerdict verify_lower_bound(const Graph& g, const Subgraph& h,
                                     double rho);

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_grid(int rows, int cols);

/// n points uniform in the unit square, edges between pairs within `radius`
/// weighted by Euclidean distance. If the radius graph is disconnected, the
/// Euclidean-MST edges crossing components are added. Deterministic in
/// (n, radius, seed).
Graph gen_random_geometric(int n, double radius, std::uint64_t seed);

/// G(n, p) with uniform weights in [1, 2); connected the same way.
Graph gen_er_weighted(int n, double p, std::uint64_t seed);

}  // namespace lightspan
