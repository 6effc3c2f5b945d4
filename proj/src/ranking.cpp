#include "lightspan/ranking.hpp"

#include <numeric>

namespace lightspan {

PriorityRanking::PriorityRanking(std::vector<VertexId> order)
    : order_(std::move(order)) {
  int n = static_cast<int>(order_.size());
  if (n == 0) throw InvalidParams("ranking must be nonempty");
  rank_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    VertexId v = order_[i];
    if (v < 0 || v >= n) throw InvalidVertex("ranking entry out of range");
    if (rank_[v] != 0) throw InvalidParams("ranking is not a permutation");
    rank_[v] = i + 1;
  }
}

PriorityRanking PriorityRanking::identity(int n) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  return PriorityRanking(std::move(order));
}

PriorityRanking interleave(const PriorityRanking& a, const PriorityRanking& b) {
  if (a.size() != b.size())
    throw InvalidParams("interleave requires rankings of equal size");
  int n = a.size();
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (VertexId v : {a.at_rank(i), b.at_rank(i)})
      if (!seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }
  }
  return PriorityRanking(std::move(order));
}

}  // namespace lightspan
