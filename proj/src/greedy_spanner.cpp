#include "lightspan/greedy_spanner.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "lightspan/numeric.hpp"

namespace lightspan {

namespace {

// Incremental spanner adjacency with a timestamped workspace, so each bounded
// query touches only accepted edges.
class GreedyScan {
 public:
  explicit GreedyScan(int n)
      : adj_(n), dist_(n, kInf), stamp_(n, 0), round_(0) {}

  void accept(VertexId u, VertexId v, double w) {
    adj_[u].emplace_back(v, w);
    adj_[v].emplace_back(u, w);
  }

  // Distance between u and v using accepted edges only, +inf once it would
  // exceed cap.
  double distance_within(VertexId u, VertexId v, double cap) {
    ++round_;
    touch(u) = 0.0;
    std::priority_queue<std::pair<double, VertexId>,
                        std::vector<std::pair<double, VertexId>>,
                        std::greater<>>
        heap;
    heap.emplace(0.0, u);
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d > touch(x)) continue;
      if (x == v) return d;
      if (d > cap) return kInf;
      for (auto [y, w] : adj_[x]) {
        double nd = d + w;
        if (nd <= cap && nd < touch(y)) {
          touch(y) = nd;
          heap.emplace(nd, y);
        }
      }
    }
    return touch(v);
  }

 private:
  double& touch(VertexId x) {
    if (stamp_[x] != round_) {
      stamp_[x] = round_;
      dist_[x] = kInf;
    }
    return dist_[x];
  }

  std::vector<std::vector<std::pair<VertexId, double>>> adj_;
  std::vector<double> dist_;
  std::vector<int> stamp_;
  int round_;
};

}  // namespace

Subgraph greedy_spanner(const Graph& g, int t) {
  if (t < 1) throw InvalidParams("stretch parameter t must be at least 1");
  double factor = 2.0 * t - 1.0;
  Subgraph spanner(g);
  GreedyScan scan(g.vertex_count());
  for (int id : g.edges_by_order()) {
    const auto& e = g.edge(id);
    double threshold = factor * e.weight;
    double cap = threshold + comparison_tol(threshold, threshold);
    double d = scan.distance_within(e.u, e.v, cap);
    if (definitely_gt(d, threshold)) {
      spanner.add_edge(id);
      scan.accept(e.u, e.v, e.weight);
    }
  }
  return spanner;
}

Graph complete_graph(const MetricSpace& m) {
  int n = m.size();
  std::vector<EdgeInput> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.emplace_back(i, j, m.distance(i, j));
  return Graph(n, edges);
}

int backbone_stretch_param(int k) {
  int t = 1;
  std::int64_t pow = 2;
  while (pow < std::max(k, 2)) {
    pow *= 2;
    ++t;
  }
  return t + 1;  // t now holds ceil(log2(max(k, 2)))
}

Subgraph terminal_backbone(const Graph& g,
                           std::span<const VertexId> terminals) {
  if (terminals.empty()) throw EmptySourceSet("terminal set must be nonempty");
  Subgraph backbone(g);
  if (terminals.size() == 1) return backbone;
  MetricClosure closure = metric_closure(g, terminals);
  Graph closure_graph = complete_graph(closure.space());
  int t = backbone_stretch_param(static_cast<int>(terminals.size()));
  Subgraph selected = greedy_spanner(closure_graph, t);
  for (int id : selected.edge_ids()) {
    const auto& e = closure_graph.edge(id);
    for (int host_edge : closure.path_edges(e.u, e.v))
      backbone.add_edge(host_edge);
  }
  return backbone;
}

}  // namespace lightspan
