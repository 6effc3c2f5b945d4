#include "lightspan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "lightspan/numeric.hpp"
#include "lightspan/shortest_paths.hpp"

namespace lightspan {

DistortionProfile::DistortionProfile(const MetricSpace& source,
                                     const MetricSpace& target)
    : n_(source.size()) {
  if (target.size() != n_)
    throw InvalidParams("source and target sizes differ");
  pairs_.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      PairDistortion p;
      p.u = u;
      p.v = v;
      p.d_source = source.distance(u, v);
      p.d_target = target.distance(u, v);
      p.distortion = p.d_source > 0.0 ? p.d_target / p.d_source
                                      : (p.d_target > 0.0 ? kInf : 1.0);
      p.eps_pair = source.farness(u, v);
      pairs_.push_back(p);
    }

  sorted_desc_.reserve(pairs_.size());
  for (const auto& p : pairs_) sorted_desc_.push_back(p.distortion);
  std::sort(sorted_desc_.begin(), sorted_desc_.end(), std::greater<>());

  std::vector<const PairDistortion*> by_farness(pairs_.size());
  for (size_t i = 0; i < pairs_.size(); ++i) by_farness[i] = &pairs_[i];
  std::sort(by_farness.begin(), by_farness.end(),
            [](const PairDistortion* a, const PairDistortion* b) {
              return a->eps_pair > b->eps_pair;
            });
  coarse_.reserve(pairs_.size());
  double running = 1.0;
  for (const PairDistortion* p : by_farness) {
    running = std::max(running, p->distortion);
    coarse_.emplace_back(p->eps_pair, running);
  }
}

double DistortionProfile::max_distortion() const {
  return sorted_desc_.empty() ? 1.0 : sorted_desc_.front();
}

double DistortionProfile::min_distortion() const {
  return sorted_desc_.empty() ? 1.0 : sorted_desc_.back();
}

double DistortionProfile::scaling_value(double eps) const {
  if (!(eps > 0.0) || eps > 1.0)
    throw InvalidParams("eps must lie in (0, 1]");
  if (sorted_desc_.empty()) return 1.0;
  auto c = pair_count();
  // up to floor(eps*C) pairs may exceed the bound
  auto k = std::min<std::int64_t>(
      c, floor_tolerant(eps * static_cast<double>(c)) + 1);
  return sorted_desc_[k - 1];
}

double DistortionProfile::coarse_value(double eps) const {
  if (!(eps > 0.0) || eps > 1.0)
    throw InvalidParams("eps must lie in (0, 1]");
  // last entry with eps_pair >= eps in the descending order
  auto it = std::partition_point(
      coarse_.begin(), coarse_.end(),
      [eps](const std::pair<double, double>& e) { return e.first >= eps; });
  if (it == coarse_.begin()) return 1.0;
  return (it - 1)->second;
}

std::vector<double> DistortionProfile::eps_grid() const {
  auto c = std::max<std::int64_t>(1, pair_count());
  int depth = 1;
  while ((std::int64_t{1} << depth) < c) ++depth;  // ceil(log2 C), min 1
  std::vector<double> grid;
  grid.reserve(depth);
  for (int k = 1; k <= depth; ++k) grid.push_back(std::ldexp(1.0, -k));
  return grid;
}

DistortionProfile measure(const Graph& g, const Subgraph& h) {
  if (&h.parent() != &g || !h.spans_parent())
    throw NotSpanning("subgraph does not span the graph");
  return DistortionProfile(MetricSpace::from_graph(g), subgraph_metric(h));
}

MetricSpace subgraph_metric(const Subgraph& h) {
  if (!h.spans_parent())
    throw NotSpanning("subgraph does not span the graph");
  auto rows = all_pairs(h.parent(), &h.mask());
  int n = h.parent().vertex_count();
  std::vector<double> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    std::copy(rows[i].begin(), rows[i].end(),
              flat.begin() + static_cast<size_t>(i) * n);
  return MetricSpace(n, std::move(flat));
}

double lightness(const Graph& g, const Subgraph& h) {
  double tree_weight = mst(g).weight();
  if (tree_weight <= 0.0) return h.weight() > 0.0 ? kInf : 1.0;
  return h.weight() / tree_weight;
}

double lq_distortion(const DistortionProfile& p, double q) {
  if (!(q >= 1.0)) throw InvalidParams("q must be at least 1");
  if (p.pair_count() == 0) return 1.0;
  if (std::isinf(q)) return p.max_distortion();
  double sum = 0.0;
  for (const auto& pair : p.pairs()) sum += std::pow(pair.distortion, q);
  return std::pow(sum / static_cast<double>(p.pair_count()), 1.0 / q);
}

std::vector<double> prioritized_profile(const DistortionProfile& p,
                                        const PriorityRanking& pi) {
  if (pi.size() != p.point_count())
    throw RankingMismatch("ranking size does not match the profile");
  if (p.point_count() < 2) return {};
  std::vector<double> alpha(p.point_count() - 1, 1.0);
  for (const auto& pair : p.pairs()) {
    int j = std::min(pi.rank_of(pair.u), pi.rank_of(pair.v));
    alpha[j - 1] = std::max(alpha[j - 1], pair.distortion);
  }
  return alpha;
}

std::vector<double> monotone_envelope(std::vector<double> profile) {
  double running = 0.0;
  for (double& value : profile) {
    running = std::max(running, value);
    value = running;
  }
  return profile;
}

Lemma21Result lemma21_check(const DistortionProfile& p, double q) {
  if (!(q >= 1.0) || std::isinf(q))
    throw InvalidParams("q must lie in [1, infinity)");
  Lemma21Result result;
  result.lhs = lq_distortion(p, q);
  auto c = p.pair_count();
  if (c == 0) {
    result.rhs = result.lhs;
    result.pass = true;
    return result;
  }
  // gamma_hat is constant on [k/C, (k+1)/C); integrate the steps exactly,
  // starting at 1/(2C)
  double integral = 0.0;
  double cd = static_cast<double>(c);
  integral += (1.0 / (2.0 * cd)) * std::pow(p.scaling_value(0.75 / cd), q);
  for (std::int64_t k = 1; k < c; ++k)
    integral +=
        (1.0 / cd) * std::pow(p.scaling_value((k + 0.5) / cd), q);
  result.rhs = std::pow(2.0 * integral, 1.0 / q);
  result.pass = result.lhs <= result.rhs * (1.0 + 1e-6);
  return result;
}

void write_profile_csv(std::ostream& out, const DistortionProfile& p) {
  out << "eps,gamma,gamma_coarse\n";
  char line[128];
  for (double eps : p.eps_grid()) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", eps,
                  p.scaling_value(eps), p.coarse_value(eps));
    out << line;
  }
}

}  // namespace lightspan
