#include "lightspan/shortest_paths.hpp"

#include <algorithm>
#include <queue>

#include "lightspan/parallel.hpp"

namespace lightspan {

namespace {

using HeapEntry = std::pair<double, VertexId>;
using MinHeap =
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

void check_sources(const Graph& g, std::span<const VertexId> sources) {
  if (sources.empty()) throw EmptySourceSet("source set must be nonempty");
  for (VertexId s : sources)
    if (s < 0 || s >= g.vertex_count())
      throw InvalidVertex("source vertex out of range");
}

}  // namespace

std::vector<int> DistanceField::path_edges_to(VertexId v) const {
  std::vector<int> path;
  while (parent_edge[v] != -1) {
    int e = parent_edge[v];
    path.push_back(e);
    v = graph->edge(e).other(v);
  }
  return path;
}

DistanceField shortest_paths(const Graph& g, std::span<const VertexId> sources,
                             const std::vector<char>* edge_mask) {
  check_sources(g, sources);
  DistanceField field;
  field.graph = &g;
  field.sources.assign(sources.begin(), sources.end());
  field.dist.assign(g.vertex_count(), kInf);
  field.parent_edge.assign(g.vertex_count(), -1);

  MinHeap heap;
  for (VertexId s : sources) {
    if (field.dist[s] == 0.0) continue;
    field.dist[s] = 0.0;
    heap.emplace(0.0, s);
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > field.dist[u]) continue;
    for (int e : g.incident(u)) {
      if (edge_mask && !(*edge_mask)[e]) continue;
      const auto& edge = g.edge(e);
      VertexId v = edge.other(u);
      double nd = d + edge.weight;
      if (nd < field.dist[v]) {
        field.dist[v] = nd;
        field.parent_edge[v] = e;
        heap.emplace(nd, v);
      }
    }
  }
  return field;
}

DistanceField shortest_paths(const Subgraph& h,
                             std::span<const VertexId> sources) {
  return shortest_paths(h.parent(), sources, &h.mask());
}

double bounded_distance(const Graph& g, VertexId s, VertexId t, double cap,
                        const std::vector<char>* edge_mask) {
  if (s == t) return 0.0;
  std::vector<double> dist(g.vertex_count(), kInf);
  dist[s] = 0.0;
  MinHeap heap;
  heap.emplace(0.0, s);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    if (u == t) return d;
    if (d > cap) return kInf;
    for (int e : g.incident(u)) {
      if (edge_mask && !(*edge_mask)[e]) continue;
      const auto& edge = g.edge(e);
      VertexId v = edge.other(u);
      double nd = d + edge.weight;
      if (nd < dist[v] && nd <= cap) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return dist[t];
}

std::vector<std::vector<double>> all_pairs(const Graph& g,
                                           const std::vector<char>* edge_mask) {
  int n = g.vertex_count();
  std::vector<std::vector<double>> d(n);
  parallel_for(0, n, [&](int s) {
    VertexId src = s;
    d[s] = shortest_paths(g, std::span<const VertexId>(&src, 1), edge_mask).dist;
  });
  return d;
}

}  // namespace lightspan
