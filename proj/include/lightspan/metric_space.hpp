#pragma once

#include <span>
#include <string>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/shortest_paths.hpp"

namespace lightspan {

/// Finite metric space with an explicit distance matrix plus per-point sorted
/// rows for ball and radius queries. Input matrices are canonicalized to the
/// upper triangle so the stored matrix is exactly symmetric.
class MetricSpace {
 public:
  explicit MetricSpace(const std::vector<std::vector<double>>& matrix);
  MetricSpace(int n, std::vector<double> row_major);

  int size() const { return n_; }
  double distance(int a, int b) const { return d_[static_cast<size_t>(a) * n_ + b]; }

  /// |B(v, r)|: closed-ball cardinality; the center counts.
  int ball_size(int v, double r) const;

  /// R(v, eps): smallest radius whose closed ball holds at least ceil(eps*n)
  /// points. Always one of the distances out of v (0 for eps <= 1/n).
  double radius(int v, double eps) const;

  /// Largest eps for which u and v are mutually eps/2-far:
  /// min(1, 2*min(|B(u,d)|, |B(v,d)|)/n) at d = d(u,v).
  double farness(int u, int v) const;

  /// One-sided variant: largest eps for which at least one endpoint is
  /// eps/2-far from the other.
  double farness_one_sided(int u, int v) const;

  /// Shortest-path metric over all vertices of g.
  static MetricSpace from_graph(const Graph& g);

  const std::vector<double>& row_major() const { return d_; }

 private:
  void build_sorted_rows();

  int n_ = 0;
  std::vector<double> d_;
  std::vector<double> sorted_;  // ascending per-row copies
};

/// K x K shortest-path metric of a graph plus a retriever mapping each
/// terminal pair to its shortest path (as parent-graph edge ids).
class MetricClosure {
 public:
  MetricClosure(MetricSpace space, std::vector<VertexId> terminals,
                std::vector<DistanceField> fields);

  const MetricSpace& space() const { return space_; }
  const std::vector<VertexId>& terminals() const { return terminals_; }
  std::vector<int> path_edges(int i, int j) const;

 private:
  MetricSpace space_;
  std::vector<VertexId> terminals_;
  std::vector<DistanceField> fields_;  // single-source field per terminal
};

MetricClosure metric_closure(const Graph& g,
                             std::span<const VertexId> terminals);

/// Symmetry, zero diagonal and the triangle inequality, exhaustively.
bool check_metric_axioms(const MetricSpace& m, std::string* why = nullptr);

}  // namespace lightspan
