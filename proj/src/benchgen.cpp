#include "lightspan/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

#include "lightspan/metrics.hpp"
#include "lightspan/numeric.hpp"
#include "lightspan/shortest_paths.hpp"

namespace lightspan {

namespace {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

// Lightest cross-component links of the Euclidean complete graph, added so
// random instances stay connected without reshaping the neighborhood model.
void connect_components(std::vector<EdgeInput>& edges, int n,
                        const std::function<double(int, int)>& dist) {
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) {
      comp[x] = comp[comp[x]];
      x = comp[x];
    }
    return x;
  };
  int components = n;
  for (const auto& [u, v, w] : edges) {
    int a = find(u);
    int b = find(v);
    if (a != b) {
      comp[b] = a;
      --components;
    }
  }
  while (components > 1) {
    double best = kInf;
    int bu = -1, bv = -1;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (find(u) == find(v)) continue;
        double d = dist(u, v);
        if (d < best) {
          best = d;
          bu = u;
          bv = v;
        }
      }
    edges.emplace_back(bu, bv, best);
    comp[find(bv)] = find(bu);
    --components;
  }
}

}  // namespace

Graph lower_bound_graph(int n) {
  if (n < 2) throw InvalidParams("lower bound graph needs n >= 2");
  std::vector<EdgeInput> edges;
  edges.reserve(static_cast<size_t>(n + 1) * n / 2);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      edges.emplace_back(i, j, j - i == 1 ? 1.0 : 2.0);
  return Graph(n + 1, edges);
}

LowerBoundVerdict verify_lower_bound(const Graph& g, const Subgraph& h,
                                     double rho) {
  int n = g.vertex_count() - 1;
  if (n < 32) throw InvalidParams("lower bound verification needs n >= 32");
  if (g.edge_count() != (n + 1) * n / 2)
    throw InvalidParams("not a lower-bound graph: wrong edge count");
  for (const auto& e : g.edges()) {
    double expect = std::abs(e.u - e.v) == 1 ? 1.0 : 2.0;
    if (e.weight != expect)
      throw InvalidParams("not a lower-bound graph: wrong weight");
  }
  if (definitely_gt(1.0 / n, rho) || definitely_gt(rho, 1.0 / 32.0))
    throw InvalidParams("rho must lie in [1/n, 1/32]");

  LowerBoundVerdict verdict;
  verdict.rho = rho;
  verdict.lightness = lightness(g, h);
  verdict.k = static_cast<int>(ceil_count(rho, n));
  verdict.applicable = approx_leq(verdict.lightness, 1.0 + rho);

  int q = 0;
  for (int id : h.edge_ids())
    if (g.edge(id).weight == 2.0) ++q;
  verdict.heavy_edge_count = q;
  verdict.heavy_count_ok = q <= verdict.k;
  verdict.weight_ledger_ok = approx_geq(h.weight(), n + q);

  if (!verdict.applicable) return verdict;

  DistortionProfile profile = measure(g, h);
  verdict.dist1 = lq_distortion(profile, 1.0);
  verdict.required = 1.0 / (128.0 * rho);

  // proof internals: S, its delta-neighborhood along unit edges, and the far
  // sets of the untouched vertices
  double delta = 1.0 / (32.0 * rho);
  std::vector<char> in_s(n + 1, 0);
  for (int id : h.edge_ids())
    if (g.edge(id).weight == 2.0) {
      in_s[g.edge(id).u] = 1;
      in_s[g.edge(id).v] = 1;
    }
  verdict.incident_set_size =
      static_cast<int>(std::count(in_s.begin(), in_s.end(), 1));

  // unit-edge-only reach within delta, one bounded search per vertex of S
  std::vector<char> unit_mask(g.edge_count(), 0);
  for (int id : h.edge_ids())
    if (g.edge(id).weight == 1.0) unit_mask[id] = 1;
  std::vector<char> in_n(n + 1, 0);
  for (int v = 0; v <= n; ++v) {
    if (!in_s[v]) continue;
    VertexId source = v;
    DistanceField field =
        shortest_paths(g, std::span<const VertexId>(&source, 1), &unit_mask);
    for (int u = 0; u <= n; ++u)
      if (field.dist[u] <= delta) in_n[u] = 1;
  }
  verdict.near_set_size =
      static_cast<int>(std::count(in_n.begin(), in_n.end(), 1));

  auto h_rows = all_pairs(g, &h.mask());
  int min_far = n + 1;
  for (int u = 0; u <= n; ++u) {
    if (in_n[u]) continue;
    int far = 0;
    for (int v = 0; v <= n; ++v)
      if (v != u && h_rows[u][v] > delta) ++far;
    min_far = std::min(min_far, far);
  }
  verdict.min_far_count = min_far == n + 1 ? 0 : min_far;

  bool s_ok = verdict.incident_set_size <= 2 * q;
  bool n_ok = verdict.near_set_size <= (3.0 * n) / 8.0;
  bool far_ok = verdict.near_set_size == n + 1 ||
                verdict.min_far_count >= n - 2.0 * delta - 1.0;
  verdict.diagnostics_ok = s_ok && n_ok && far_ok;

  verdict.pass = verdict.heavy_count_ok && verdict.weight_ledger_ok &&
                 verdict.diagnostics_ok && verdict.dist1 >= verdict.required;
  return verdict;
}

Graph gen_cycle(int n) {
  if (n < 3) throw InvalidParams("cycle needs n >= 3");
  std::vector<EdgeInput> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n, 1.0);
  return Graph(n, edges);
}

Graph gen_path(int n) {
  if (n < 2) throw InvalidParams("path needs n >= 2");
  std::vector<EdgeInput> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, 1.0);
  return Graph(n, edges);
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2)
    throw InvalidParams("grid needs at least two vertices");
  std::vector<EdgeInput> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1), 1.0);
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c), 1.0);
    }
  return Graph(rows * cols, edges);
}

Graph gen_random_geometric(int n, double radius, std::uint64_t seed) {
  if (n < 2) throw InvalidParams("random geometric graph needs n >= 2");
  if (!(radius > 0.0)) throw InvalidParams("radius must be positive");
  SplitMix64 rng(seed);
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.uniform();
    y[i] = rng.uniform();
  }
  auto dist = [&](int a, int b) {
    return std::hypot(x[a] - x[b], y[a] - y[b]);
  };
  std::vector<EdgeInput> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = dist(i, j);
      if (d <= radius) edges.emplace_back(i, j, d);
    }
  connect_components(edges, n, dist);
  return Graph(n, edges);
}

Graph gen_er_weighted(int n, double p, std::uint64_t seed) {
  if (n < 2) throw InvalidParams("random graph needs n >= 2");
  if (!(p >= 0.0) || p > 1.0) throw InvalidParams("p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<EdgeInput> edges;
  std::vector<double> weights(static_cast<size_t>(n) * n, 1.5);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double coin = rng.uniform();
      double w = 1.0 + rng.uniform();
      weights[static_cast<size_t>(i) * n + j] = w;
      if (coin < p) edges.emplace_back(i, j, w);
    }
  connect_components(edges, n, [&](int a, int b) {
    return weights[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
  });
  return Graph(n, edges);
}

}  // namespace lightspan
