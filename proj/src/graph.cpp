#include "lightspan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace lightspan {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Graph::Graph(int n, const std::vector<EdgeInput>& edges) : n_(n) {
  if (n < 1) throw InvalidParams("graph needs at least one vertex");
  std::map<std::pair<VertexId, VertexId>, int> seen;
  edges_.reserve(edges.size());
  for (const auto& [u, v, w] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw InvalidVertex("edge endpoint out of range");
    if (u == v) throw InvalidVertex("self loops are not allowed");
    if (!(w >= 0.0) || !std::isfinite(w))
      throw NegativeWeight("edge weights must be finite and nonnegative");
    auto key = std::minmax(u, v);
    auto it = seen.find(key);
    if (it == seen.end()) {
      int id = static_cast<int>(edges_.size());
      edges_.push_back({key.first, key.second, w, id});
      seen.emplace(key, id);
    } else if (w < edges_[it->second].weight) {
      // parallel edge: keep the first slot, the lighter weight
      edges_[it->second].weight = w;
    }
  }
  total_weight_ = 0.0;
  for (const auto& e : edges_) total_weight_ += e.weight;
  build_adjacency();
  require_connected();
}

void Graph::build_adjacency() {
  adj_start_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++adj_start_[e.u + 1];
    ++adj_start_[e.v + 1];
  }
  for (int i = 0; i < n_; ++i) adj_start_[i + 1] += adj_start_[i];
  adj_edges_.assign(adj_start_[n_], 0);
  std::vector<int> cursor(adj_start_.begin(), adj_start_.end() - 1);
  for (const auto& e : edges_) {
    adj_edges_[cursor[e.u]++] = e.id;
    adj_edges_[cursor[e.v]++] = e.id;
  }
}

void Graph::require_connected() const {
  UnionFind uf(n_);
  int components = n_;
  for (const auto& e : edges_)
    if (uf.unite(e.u, e.v)) --components;
  if (components != 1)
    throw DisconnectedGraph("input graph is not connected (" +
                            std::to_string(components) + " components)");
}

std::vector<int> Graph::edges_by_order() const {
  std::vector<int> ids(edges_.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(),
            [this](int a, int b) { return edge_less(a, b); });
  return ids;
}

Graph Graph::with_weights(std::vector<double> weights) const {
  if (static_cast<int>(weights.size()) != edge_count())
    throw InvalidParams("weight vector size mismatch");
  Graph out;
  out.n_ = n_;
  out.edges_ = edges_;
  out.adj_edges_ = adj_edges_;
  out.adj_start_ = adj_start_;
  out.total_weight_ = 0.0;
  for (int i = 0; i < edge_count(); ++i) {
    double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w))
      throw NegativeWeight("edge weights must be finite and nonnegative");
    out.edges_[i].weight = w;
    out.total_weight_ += w;
  }
  return out;
}

int Graph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return -1;
  for (int e : incident(u))
    if (edges_[e].other(u) == v) return e;
  return -1;
}

Subgraph::Subgraph(const Graph& parent)
    : parent_(&parent), mask_(parent.edge_count(), 0) {}

Subgraph Subgraph::all_edges(const Graph& parent) {
  Subgraph s(parent);
  for (int i = 0; i < parent.edge_count(); ++i) s.add_edge(i);
  return s;
}

void Subgraph::add_edge(int edge_id) {
  if (edge_id < 0 || edge_id >= parent_->edge_count())
    throw InvalidParams("edge id out of range");
  if (!mask_[edge_id]) {
    mask_[edge_id] = 1;
    ++count_;
  }
}

void Subgraph::add_edges(const Subgraph& other) {
  if (other.parent_ != parent_)
    throw InvalidParams("subgraph union requires a common parent graph");
  for (int i = 0; i < static_cast<int>(mask_.size()); ++i)
    if (other.mask_[i] && !mask_[i]) {
      mask_[i] = 1;
      ++count_;
    }
}

double Subgraph::weight() const {
  double w = 0.0;
  for (int i = 0; i < static_cast<int>(mask_.size()); ++i)
    if (mask_[i]) w += parent_->edge(i).weight;
  return w;
}

std::vector<int> Subgraph::edge_ids() const {
  std::vector<int> ids;
  ids.reserve(count_);
  for (int i = 0; i < static_cast<int>(mask_.size()); ++i)
    if (mask_[i]) ids.push_back(i);
  return ids;
}

bool Subgraph::spans_parent() const {
  UnionFind uf(parent_->vertex_count());
  int components = parent_->vertex_count();
  for (int i = 0; i < static_cast<int>(mask_.size()); ++i)
    if (mask_[i]) {
      const auto& e = parent_->edge(i);
      if (uf.unite(e.u, e.v)) --components;
    }
  return components == 1;
}

bool Subgraph::is_spanning_tree() const {
  return count_ == parent_->vertex_count() - 1 && spans_parent();
}

bool Subgraph::contains_all(const Subgraph& other) const {
  if (other.parent_ != parent_) return false;
  for (int i = 0; i < static_cast<int>(mask_.size()); ++i)
    if (other.mask_[i] && !mask_[i]) return false;
  return true;
}

Subgraph mst(const Graph& g, const std::vector<char>* mask) {
  Subgraph tree(g);
  UnionFind uf(g.vertex_count());
  int needed = g.vertex_count() - 1;
  for (int id : g.edges_by_order()) {
    if (mask && !(*mask)[id]) continue;
    const auto& e = g.edge(id);
    if (uf.unite(e.u, e.v)) {
      tree.add_edge(id);
      if (--needed == 0) break;
    }
  }
  if (needed != 0)
    throw DisconnectedGraph("edge subset does not connect the graph");
  return tree;
}

}  // namespace lightspan
