#include "lightspan/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lightspan/numeric.hpp"

namespace lightspan {

DensityNet density_net(const MetricSpace& m, double eps) {
  if (!(eps > 0.0) || !(eps < 1.0) ) {
    if (eps != 1.0)  // R(v,1) is still well defined; allow the boundary
      throw InvalidParams("eps must lie in (0, 1]");
  }
  int n = m.size();
  std::vector<double> reach(n);
  for (int v = 0; v < n; ++v) reach[v] = m.radius(v, eps);

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (reach[a] != reach[b]) return reach[a] < reach[b];
    return a < b;
  });

  DensityNet net{eps, {}};
  for (int v : order) {
    double to_net = kInf;
    for (int u : net.points) to_net = std::min(to_net, m.distance(v, u));
    if (definitely_gt(to_net, 2.0 * reach[v])) net.points.push_back(v);
  }

  // Definition checks: size, coverage, and the disjoint-balls witness that
  // forces the size bound.
  auto size_cap = floor_tolerant(1.0 / eps);
  if (static_cast<std::int64_t>(net.points.size()) > size_cap)
    throw Error("density net exceeded its size bound");
  for (int v = 0; v < n; ++v) {
    double to_net = kInf;
    for (int u : net.points) to_net = std::min(to_net, m.distance(v, u));
    if (!approx_leq(to_net, 2.0 * reach[v]))
      throw Error("density net failed to cover point " + std::to_string(v));
  }
  std::vector<char> claimed(n, 0);
  for (int u : net.points) {
    int members = 0;
    for (int x = 0; x < n; ++x)
      if (m.distance(u, x) <= reach[u]) {
        if (claimed[x]) throw Error("density net balls are not disjoint");
        claimed[x] = 1;
        ++members;
      }
    if (members < ceil_count(eps, n))
      throw Error("density net ball is too small");
  }
  return net;
}

PriorityRanking canonical_ranking(const MetricSpace& m) {
  int n = m.size();
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<char> placed(n, 0);
  std::int64_t levels = 0;
  while ((std::int64_t{1} << levels) < n) ++levels;  // ceil(log2 n)
  for (std::int64_t i = 1; i <= levels; ++i) {
    DensityNet net = density_net(m, std::ldexp(1.0, static_cast<int>(-i)));
    std::vector<int> tier = net.points;
    std::sort(tier.begin(), tier.end());
    for (int v : tier)
      if (!placed[v]) {
        placed[v] = 1;
        order.push_back(v);
      }
    // every net point must already be ranked below 2^(i+1)
    for (int v : net.points)
      if (std::find(order.begin(), order.end(), v) - order.begin() >=
          (std::int64_t{1} << (i + 1)) - 1)
        throw Error("canonical ranking violated its rank bound");
  }
  for (int v = 0; v < n; ++v)
    if (!placed[v]) order.push_back(v);
  return PriorityRanking(std::move(order));
}

Certification certify_coarse_scaling(const MetricSpace& source,
                                     const MetricSpace& target,
                                     const PriorityRanking& pi,
                                     const std::function<double(int)>& alpha) {
  int n = source.size();
  if (target.size() != n)
    throw InvalidParams("source and target sizes differ");
  if (!(pi == canonical_ranking(source)))
    throw RankingMismatch(
        "coarse certification requires the canonical ranking of the source");

  Certification cert;
  cert.table.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  double worst_ratio = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double ds = source.distance(u, v);
      double dt = target.distance(u, v);
      if (!approx_geq(dt, ds))
        throw ContractiveEmbedding("embedding contracts pair (" +
                                   std::to_string(u) + "," +
                                   std::to_string(v) + ")");
      PairCheck check;
      check.u = u;
      check.v = v;
      check.eps = source.farness(u, v);
      check.distortion = ds > 0.0 ? dt / ds : 1.0;
      auto rank_arg =
          std::min<std::int64_t>(n, ceil_tolerant(8.0 / check.eps));
      check.bound = 5.0 * alpha(static_cast<int>(rank_arg));
      cert.table.push_back(check);
      if (!approx_leq(check.distortion, check.bound)) {
        cert.pass = false;
        double ratio = check.distortion / check.bound;
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          cert.violation = check;
        }
      }
    }
  return cert;
}

WeightFunctionMu WeightFunctionMu::default_mu() {
  return WeightFunctionMu(
      [](int rank) {
        double x = std::numbers::pi * rank;
        return 6.0 / (x * x);
      },
      true);
}

WeightFunctionMu WeightFunctionMu::custom(std::function<double(int)> mu,
                                          bool tail_certified) {
  return WeightFunctionMu(std::move(mu), tail_certified);
}

void WeightFunctionMu::validate_for(int n) const {
  if (!tail_certified_)
    throw InvalidParams(
        "custom weight functions need an analytic tail certificate");
  double partial = 0.0;
  double prev = kInf;
  for (int i = 1; i <= n; ++i) {
    double value = mu_(i);
    if (!(value > 0.0)) throw InvalidParams("mu must be positive");
    if (definitely_gt(value, prev))
      throw InvalidParams("mu must be non-increasing");
    prev = value;
    partial += value;
  }
  if (definitely_gt(partial, 1.0))
    throw InvalidParams("mu partial sums exceed one");
}

DuplicatedSpace duplicate_metric(const MetricSpace& m,
                                 const PriorityRanking& pi,
                                 const WeightFunctionMu& mu) {
  int n = m.size();
  if (n < 2) throw DegenerateMetric("duplication needs at least two points");
  if (pi.size() != n)
    throw RankingMismatch("ranking size does not match the metric");
  mu.validate_for(n);

  double min_distance = kInf;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      min_distance = std::min(min_distance, m.distance(i, j));
  if (!(min_distance > 0.0))
    throw DegenerateMetric("duplication needs distinct points");
  double delta = min_distance / 2.0;

  std::vector<std::vector<int>> groups(n);
  std::vector<int> rank_of_point;
  std::vector<double> mu_values(n);
  for (int rank = 1; rank <= n; ++rank) {
    mu_values[rank - 1] = mu(rank);
    auto copies = ceil_count(mu_values[rank - 1], n);
    for (std::int64_t c = 0; c < copies; ++c) {
      groups[rank - 1].push_back(static_cast<int>(rank_of_point.size()));
      rank_of_point.push_back(rank);
    }
  }
  int z_size = static_cast<int>(rank_of_point.size());
  if (z_size > 2 * n) throw Error("duplicated space exceeded 2n points");

  std::vector<double> flat(static_cast<size_t>(z_size) * z_size, 0.0);
  for (int a = 0; a < z_size; ++a)
    for (int b = a + 1; b < z_size; ++b) {
      int ra = rank_of_point[a];
      int rb = rank_of_point[b];
      double d = ra == rb
                     ? delta
                     : m.distance(pi.at_rank(ra), pi.at_rank(rb));
      flat[static_cast<size_t>(a) * z_size + b] = d;
      flat[static_cast<size_t>(b) * z_size + a] = d;
    }
  DuplicatedSpace dz{MetricSpace(z_size, std::move(flat)), pi,
                     std::move(groups), std::move(rank_of_point),
                     std::move(mu_values), delta};

  // triangle inequality: guaranteed because delta is half the minimum
  // distance, verified exhaustively at desk scale
  if (z_size <= 600) {
    std::string why;
    if (!check_metric_axioms(dz.space, &why))
      throw Error("duplicated space is not a metric: " + why);
  }
  // the containment that makes representatives mutually far: every group i
  // sits inside both balls of radius d(u_i, u_j) for all lower-priority j
  for (int i = 1; i < dz.ranking.size(); ++i) {
    int ui = dz.representative(i);
    for (int j = i + 1; j <= dz.ranking.size(); ++j) {
      int uj = dz.representative(j);
      double d = dz.space.distance(ui, uj);
      for (int member : dz.groups[i - 1])
        if (!approx_leq(dz.space.distance(ui, member), d) ||
            !approx_leq(dz.space.distance(uj, member), d))
          throw Error("duplicated group escaped its containment ball");
    }
  }
  return dz;
}

PullBackResult pull_back_embedding(const DuplicatedSpace& dz,
                                   const MetricSpace& z_target,
                                   const std::function<double(double)>& gamma) {
  int z_size = dz.space.size();
  if (z_target.size() != z_size)
    throw InvalidParams("embedded space size mismatch");
  for (int a = 0; a < z_size; ++a)
    for (int b = a + 1; b < z_size; ++b)
      if (!approx_geq(z_target.distance(a, b), dz.space.distance(a, b)))
        throw ContractiveEmbedding("embedding contracts the duplicated space");

  int n = dz.ranking.size();
  std::vector<int> reps(n);
  std::vector<double> bounds(n);
  for (int rank = 1; rank <= n; ++rank) {
    reps[rank - 1] = dz.representative(rank);
    bounds[rank - 1] = gamma(dz.mu_values[rank - 1]);
  }

  // pulled-back distances indexed by the original point ids
  std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      double d = z_target.distance(reps[i - 1], reps[j - 1]);
      int p = dz.ranking.at_rank(i);
      int q = dz.ranking.at_rank(j);
      flat[static_cast<size_t>(p) * n + q] = d;
      flat[static_cast<size_t>(q) * n + p] = d;
    }

  PullBackResult result{MetricSpace(n, std::move(flat)), std::move(reps),
                        std::move(bounds), {}};
  double worst_ratio = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int p = dz.ranking.at_rank(i);
      int q = dz.ranking.at_rank(j);
      double ds = dz.space.distance(result.representatives[i - 1],
                                    result.representatives[j - 1]);
      double dt = result.target.distance(p, q);
      PairCheck check;
      check.u = p;
      check.v = q;
      check.eps = dz.mu_values[i - 1];
      check.distortion = ds > 0.0 ? dt / ds : 1.0;
      check.bound = result.rank_bound[i - 1];
      result.certification.table.push_back(check);
      if (!approx_leq(check.distortion, check.bound)) {
        result.certification.pass = false;
        double ratio = check.distortion / check.bound;
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          result.certification.violation = check;
        }
      }
    }
  return result;
}

}  // namespace lightspan
