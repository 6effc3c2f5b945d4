#include "lightspan/slt.hpp"

#include <algorithm>
#include <vector>

#include "lightspan/numeric.hpp"
#include "lightspan/shortest_paths.hpp"

namespace lightspan {

namespace {

Subgraph slt_impl(const Graph& g, std::span<const VertexId> roots, double alpha,
                  const std::vector<char>* mask) {
  if (!(alpha > 1.0))
    throw AlphaOutOfRange("slt requires alpha > 1");
  if (roots.empty()) throw EmptySourceSet("root set must be nonempty");

  Subgraph tree = mst(g, mask);
  DistanceField to_roots = shortest_paths(g, roots, mask);

  // tree adjacency, children visited in ascending edge-id order
  int n = g.vertex_count();
  std::vector<std::vector<int>> tree_adj(n);
  for (int id : tree.edge_ids()) {
    const auto& e = g.edge(id);
    tree_adj[e.u].push_back(id);
    tree_adj[e.v].push_back(id);
  }

  Subgraph out = tree;
  VertexId start = *std::min_element(roots.begin(), roots.end());
  double anchor_dist = 0.0;  // exact distance to roots at the last graft
  double walked = 0.0;       // tour weight since the last graft

  auto visit = [&](VertexId u) {
    if (definitely_gt(anchor_dist + walked, alpha * to_roots.dist[u])) {
      for (int e : to_roots.path_edges_to(u)) out.add_edge(e);
      anchor_dist = to_roots.dist[u];
      walked = 0.0;
    }
  };

  // iterative Euler tour of the MST
  struct Frame {
    VertexId vertex;
    int arrival_edge;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({start, -1});
  visit(start);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < tree_adj[f.vertex].size()) {
      int e = tree_adj[f.vertex][f.next++];
      if (e == f.arrival_edge) continue;
      VertexId child = g.edge(e).other(f.vertex);
      walked += g.edge(e).weight;
      stack.push_back({child, e});
      visit(child);
    } else {
      int e = f.arrival_edge;
      stack.pop_back();
      if (e != -1) {
        walked += g.edge(e).weight;
        visit(stack.back().vertex);
      }
    }
  }
  return out;
}

}  // namespace

Subgraph slt(const Graph& g, std::span<const VertexId> roots, double alpha) {
  return slt_impl(g, roots, alpha, nullptr);
}

Subgraph slt_within(const Subgraph& h, std::span<const VertexId> roots,
                    double alpha) {
  return slt_impl(h.parent(), roots, alpha, &h.mask());
}

}  // namespace lightspan
