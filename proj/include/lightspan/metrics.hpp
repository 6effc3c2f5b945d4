#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/metric_space.hpp"
#include "lightspan/ranking.hpp"

namespace lightspan {

struct PairDistortion {
  VertexId u = 0;
  VertexId v = 0;
  double d_source = 0.0;
  double d_target = 0.0;
  double distortion = 1.0;
  double eps_pair = 0.0;  // largest eps at which both ends are eps/2-far
};

/// All pair distortions of an embedding plus the order statistics backing the
/// scaling, coarse-scaling and prioritized profiles.
class DistortionProfile {
 public:
  DistortionProfile(const MetricSpace& source, const MetricSpace& target);

  int point_count() const { return n_; }
  std::int64_t pair_count() const {
    return static_cast<std::int64_t>(pairs_.size());
  }
  const std::vector<PairDistortion>& pairs() const { return pairs_; }

  double max_distortion() const;
  double min_distortion() const;

  /// gamma_hat(eps): the smallest bound exceeded by at most floor(eps*C)
  /// pairs; a non-increasing step function on (0, 1].
  double scaling_value(double eps) const;

  /// gamma_hat_c(eps): the worst distortion among pairs whose ends are
  /// mutually eps/2-far; 1 when no pair qualifies.
  double coarse_value(double eps) const;

  /// Reporting grid {2^-1, ..., 2^-ceil(log2 C)}.
  std::vector<double> eps_grid() const;

 private:
  int n_ = 0;
  std::vector<PairDistortion> pairs_;
  std::vector<double> sorted_desc_;              // distortions, descending
  std::vector<std::pair<double, double>> coarse_;  // (eps_pair desc, running max)
};

/// Pair distortions of a spanning subgraph against its parent graph.
DistortionProfile measure(const Graph& g, const Subgraph& h);

/// Shortest-path metric of a spanning subgraph (kept as a helper so callers
/// can reuse matrices across several profiles).
MetricSpace subgraph_metric(const Subgraph& h);

/// Psi(h) = w(h) / w(mst(g)).
double lightness(const Graph& g, const Subgraph& h);

/// q-th power mean of the pair distortions; q = infinity gives the maximum,
/// q = 1 the average distortion.
double lq_distortion(const DistortionProfile& p, double q);

/// alpha_hat(j): worst distortion among pairs whose higher-priority end has
/// rank j; entries j = 1..n-1.
std::vector<double> prioritized_profile(const DistortionProfile& p,
                                        const PriorityRanking& pi);

/// Running maximum from below: the certified monotone envelope of a per-rank
/// profile.
std::vector<double> monotone_envelope(std::vector<double> profile);

struct Lemma21Result {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// dist_q <= (2 * integral of gamma_hat(x)^q over [1/(2C), 1])^(1/q); the
/// integral is evaluated exactly on the step function's breakpoints.
Lemma21Result lemma21_check(const DistortionProfile& p, double q);

/// CSV with header eps,gamma,gamma_coarse over the reporting grid.
void write_profile_csv(std::ostream& out, const DistortionProfile& p);

}  // namespace lightspan
