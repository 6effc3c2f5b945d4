#include "lightspan/metric_space.hpp"

#include <algorithm>
#include <cmath>

#include "lightspan/numeric.hpp"
#include "lightspan/parallel.hpp"

namespace lightspan {

MetricSpace::MetricSpace(const std::vector<std::vector<double>>& matrix) {
  n_ = static_cast<int>(matrix.size());
  if (n_ == 0) throw InvalidParams("metric space must be nonempty");
  d_.assign(static_cast<size_t>(n_) * n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(matrix[i].size()) != n_)
      throw InvalidParams("distance matrix must be square");
    for (int j = 0; j < n_; ++j) d_[static_cast<size_t>(i) * n_ + j] = matrix[i][j];
  }
  *this = MetricSpace(n_, std::move(d_));
}

MetricSpace::MetricSpace(int n, std::vector<double> row_major)
    : n_(n), d_(std::move(row_major)) {
  if (n_ <= 0 || d_.size() != static_cast<size_t>(n_) * n_)
    throw InvalidParams("distance matrix must be square");
  for (int i = 0; i < n_; ++i) {
    if (!approx_eq(distance(i, i), 0.0))
      throw InvalidParams("distance matrix diagonal must be zero");
    for (int j = i + 1; j < n_; ++j) {
      double dij = distance(i, j);
      double dji = distance(j, i);
      if (!(dij >= 0.0) || !std::isfinite(dij))
        throw InvalidParams("distances must be finite and nonnegative");
      if (!approx_eq(dij, dji))
        throw InvalidParams("distance matrix must be symmetric");
      // upper triangle is canonical
      d_[static_cast<size_t>(j) * n_ + i] = dij;
    }
    d_[static_cast<size_t>(i) * n_ + i] = 0.0;
  }
  build_sorted_rows();
}

void MetricSpace::build_sorted_rows() {
  sorted_ = d_;
  for (int i = 0; i < n_; ++i)
    std::sort(sorted_.begin() + static_cast<size_t>(i) * n_,
              sorted_.begin() + static_cast<size_t>(i + 1) * n_);
}

int MetricSpace::ball_size(int v, double r) const {
  auto begin = sorted_.begin() + static_cast<size_t>(v) * n_;
  auto end = begin + n_;
  return static_cast<int>(std::upper_bound(begin, end, r) - begin);
}

double MetricSpace::radius(int v, double eps) const {
  if (!(eps > 0.0) || eps > 1.0)
    throw InvalidParams("eps must lie in (0, 1]");
  auto k = std::min<std::int64_t>(n_, ceil_count(eps, n_));
  return sorted_[static_cast<size_t>(v) * n_ + (k - 1)];
}

double MetricSpace::farness(int u, int v) const {
  if (u == v) throw IdenticalPoints("farness needs two distinct points");
  double d = distance(u, v);
  int b = std::min(ball_size(u, d), ball_size(v, d));
  return std::min(1.0, 2.0 * b / n_);
}

double MetricSpace::farness_one_sided(int u, int v) const {
  if (u == v) throw IdenticalPoints("farness needs two distinct points");
  double d = distance(u, v);
  int b = std::max(ball_size(u, d), ball_size(v, d));
  return std::min(1.0, 2.0 * b / n_);
}

MetricSpace MetricSpace::from_graph(const Graph& g) {
  auto rows = all_pairs(g);
  int n = g.vertex_count();
  std::vector<double> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    std::copy(rows[i].begin(), rows[i].end(),
              flat.begin() + static_cast<size_t>(i) * n);
  return MetricSpace(n, std::move(flat));
}

MetricClosure::MetricClosure(MetricSpace space, std::vector<VertexId> terminals,
                             std::vector<DistanceField> fields)
    : space_(std::move(space)),
      terminals_(std::move(terminals)),
      fields_(std::move(fields)) {}

std::vector<int> MetricClosure::path_edges(int i, int j) const {
  if (i == j) return {};
  // the lower-index terminal's forest keeps path retrieval deterministic
  int a = std::min(i, j);
  int b = std::max(i, j);
  return fields_[a].path_edges_to(terminals_[b]);
}

MetricClosure metric_closure(const Graph& g,
                             std::span<const VertexId> terminals) {
  if (terminals.empty()) throw EmptySourceSet("terminal set must be nonempty");
  int k = static_cast<int>(terminals.size());
  std::vector<DistanceField> fields(k);
  parallel_for(0, k, [&](int i) {
    VertexId t = terminals[i];
    fields[i] = shortest_paths(g, std::span<const VertexId>(&t, 1));
  });
  std::vector<double> flat(static_cast<size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      double d = fields[i].dist[terminals[j]];
      flat[static_cast<size_t>(i) * k + j] = d;
      flat[static_cast<size_t>(j) * k + i] = d;
    }
  return MetricClosure(MetricSpace(k, std::move(flat)),
                       {terminals.begin(), terminals.end()},
                       std::move(fields));
}

bool check_metric_axioms(const MetricSpace& m, std::string* why) {
  int n = m.size();
  for (int i = 0; i < n; ++i) {
    if (m.distance(i, i) != 0.0) {
      if (why) *why = "nonzero diagonal at " + std::to_string(i);
      return false;
    }
    for (int j = i + 1; j < n; ++j)
      if (m.distance(i, j) != m.distance(j, i)) {
        if (why)
          *why = "asymmetry at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")";
        return false;
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (!approx_leq(m.distance(i, j),
                        m.distance(i, l) + m.distance(l, j))) {
          if (why)
            *why = "triangle violation at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(l) + ")";
          return false;
        }
  return true;
}

}  // namespace lightspan
