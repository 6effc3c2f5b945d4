#pragma once

#include <functional>
#include <vector>

#include "lightspan/metric_space.hpp"
#include "lightspan/ranking.hpp"

namespace lightspan {

/// A set N with |N| <= 1/eps covering every point v within 2R(v, eps).
struct DensityNet {
  double eps = 0.0;
  std::vector<int> points;
};

/// Greedy density net: visit points by ascending (R(v,eps), id) and keep a
/// point iff it lies farther than 2R(v,eps) from the net so far. Both net
/// properties plus the disjoint-balls witness are verified before returning.
DensityNet density_net(const MetricSpace& m, double eps);

/// Ranking in which the union of the 2^-i density nets for i' <= i occupies
/// the first ranks, tier by tier; every point of the 2^-i net gets rank
/// below 2^(i+1). This is the ranking that turns prioritized distortion into
/// coarse scaling distortion.
PriorityRanking canonical_ranking(const MetricSpace& m);

struct PairCheck {
  int u = -1;
  int v = -1;
  double eps = 0.0;
  double distortion = 1.0;
  double bound = 0.0;
};

struct Certification {
  bool pass = true;
  std::vector<PairCheck> table;  // one entry per pair
  PairCheck violation;           // meaningful when !pass
};

/// Checks that a non-contractive embedding with prioritized distortion
/// `alpha` (w.r.t. the canonical ranking of the source) has coarse scaling
/// distortion 5*alpha(min(n, ceil(8/eps))): every pair is checked at its own
/// farness level. `target` holds the embedded distances.
Certification certify_coarse_scaling(const MetricSpace& source,
                                     const MetricSpace& target,
                                     const PriorityRanking& pi,
                                     const std::function<double(int)>& alpha);

/// Non-increasing weights over ranks with total mass one. Only the closed
/// form 6/(pi*j)^2 ships; custom functions need a caller-supplied tail
/// certificate and are checked numerically up to the rank in use.
class WeightFunctionMu {
 public:
  static WeightFunctionMu default_mu();
  static WeightFunctionMu custom(std::function<double(int)> mu,
                                 bool tail_certified);

  double operator()(int rank) const { return mu_(rank); }
  void validate_for(int n) const;

 private:
  WeightFunctionMu(std::function<double(int)> mu, bool tail_certified)
      : mu_(std::move(mu)), tail_certified_(tail_certified) {}

  std::function<double(int)> mu_;
  bool tail_certified_ = false;
};

/// The duplicated space of the coarse-scaling-to-prioritized reduction: the
/// rank-i point blown up into ceil(mu(i)*n) copies at mutual distance delta
/// (half the minimum original distance).
struct DuplicatedSpace {
  MetricSpace space;
  PriorityRanking ranking;
  std::vector<std::vector<int>> groups;  // groups[rank-1]: point ids in space
  std::vector<int> rank_of_point;        // space point -> 1-based rank
  std::vector<double> mu_values;         // mu(1..n)
  double half_min_distance = 0.0;

  int representative(int rank) const { return groups[rank - 1].front(); }
};

DuplicatedSpace duplicate_metric(const MetricSpace& m,
                                 const PriorityRanking& pi,
                                 const WeightFunctionMu& mu);

struct PullBackResult {
  MetricSpace target;               // embedded distances between originals
  std::vector<int> representatives; // chosen duplicate per rank
  std::vector<double> rank_bound;   // certified bound gamma(mu(rank))
  Certification certification;      // per-pair verification at rank level
};

/// Restricts an embedding of the duplicated space back to one representative
/// per original point. If the duplicated-space embedding has coarse scaling
/// distortion gamma, the restriction has prioritized distortion
/// gamma(mu(rank)) w.r.t. the ranking used for duplication; verified per pair.
PullBackResult pull_back_embedding(const DuplicatedSpace& dz,
                                   const MetricSpace& z_target,
                                   const std::function<double(double)>& gamma);

}  // namespace lightspan
