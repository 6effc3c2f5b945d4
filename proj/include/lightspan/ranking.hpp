#pragma once

#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

/// A priority ranking: the permutation v_1, ..., v_n of the vertices (or
/// metric points). Ranks are 1-based; rank 1 is the highest priority.
class PriorityRanking {
 public:
  explicit PriorityRanking(std::vector<VertexId> order);
  static PriorityRanking identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  VertexId at_rank(int rank) const { return order_[rank - 1]; }
  int rank_of(VertexId v) const { return rank_[v]; }
  const std::vector<VertexId>& order() const { return order_; }

  bool operator==(const PriorityRanking& other) const {
    return order_ == other.order_;
  }

 private:
  std::vector<VertexId> order_;
  std::vector<int> rank_;  // vertex -> 1-based rank
};

/// Alternates the ranks of two rankings of the same ground set, keeping each
/// element at its first occurrence. Lets a user-supplied order share the
/// priority sequence with the canonical one.
PriorityRanking interleave(const PriorityRanking& a, const PriorityRanking& b);

}  // namespace lightspan
