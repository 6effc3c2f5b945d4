#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "lightspan/errors.hpp"

namespace lightspan {

using VertexId = int;

/// Undirected weighted edge. `id` is the edge's position in the owning
/// graph's edge list and acts as the tie-breaker of the edge order.
struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;
  int id = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
};

using EdgeInput = std::tuple<VertexId, VertexId, double>;

/// Immutable connected weighted graph with a strict total order on edges,
/// (weight, id) lexicographic, which makes the MST unique. Parallel input
/// edges collapse to the lightest instance; disconnected input is rejected
/// at construction.
class Graph {
 public:
  Graph(int n, const std::vector<EdgeInput>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const WeightedEdge& edge(int id) const { return edges_[id]; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::span<const int> incident(VertexId v) const {
    return {adj_edges_.data() + adj_start_[v],
            adj_edges_.data() + adj_start_[v + 1]};
  }
  double total_weight() const { return total_weight_; }

  /// True iff edge a precedes edge b in the strict (weight, id) order.
  bool edge_less(int a, int b) const {
    const auto& ea = edges_[a];
    const auto& eb = edges_[b];
    if (ea.weight != eb.weight) return ea.weight < eb.weight;
    return a < b;
  }

  /// All edge ids sorted by the strict order.
  std::vector<int> edges_by_order() const;

  /// Same topology and edge ids, different weights.
  Graph with_weights(std::vector<double> weights) const;

  /// Edge id joining u and v, or -1.
  int find_edge(VertexId u, VertexId v) const;

 private:
  Graph() = default;
  void build_adjacency();
  void require_connected() const;

  int n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<int> adj_edges_;  // CSR incident edge ids
  std::vector<int> adj_start_;  // offsets, size n_ + 1
  double total_weight_ = 0.0;
};

/// Edge subset of a parent graph carrying the parent's weights. The output
/// type of every spanner, SLT and tree construction.
class Subgraph {
 public:
  explicit Subgraph(const Graph& parent);
  static Subgraph all_edges(const Graph& parent);

  const Graph& parent() const { return *parent_; }
  bool contains(int edge_id) const { return mask_[edge_id] != 0; }
  void add_edge(int edge_id);
  void add_edges(const Subgraph& other);
  int edge_count() const { return count_; }

  /// Total weight, summed in ascending edge-id order so equal edge sets give
  /// bit-identical sums.
  double weight() const;

  std::vector<int> edge_ids() const;  // ascending
  const std::vector<char>& mask() const { return mask_; }

  bool spans_parent() const;
  bool is_spanning_tree() const;

  /// True iff every edge of `other` is present here.
  bool contains_all(const Subgraph& other) const;

 private:
  const Graph* parent_;
  std::vector<char> mask_;
  int count_ = 0;
};

/// Minimum spanning tree under the strict (weight, id) order: deterministic,
/// equal inputs give identical edge-id sets. `mask` restricts the candidate
/// edges (the masked graph must still be connected).
Subgraph mst(const Graph& g, const std::vector<char>* mask = nullptr);

}  // namespace lightspan
