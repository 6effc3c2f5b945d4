#pragma once

#include <span>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/ranking.hpp"

namespace lightspan {

struct TerminalSpannerResult {
  Subgraph spanner;
  double delta = 1.0;
  int terminal_count = 0;
  int stretch_param = 0;  // greedy t used by the backbone
  double base_lightness = 1.0;
  double lightness = 1.0;
  /// Distortion bound certified for every terminal-to-vertex pair.
  double certified_distortion = 1.0;
};

/// Bound certified by the terminal construction for k terminals at a given
/// delta: (3(2t-1) + 2)/delta with t = backbone_stretch_param(k), or 2/delta
/// for a single terminal.
double terminal_certified_distortion(int k, double delta);

/// Spanner covering all terminal-to-vertex pairs with O(log k)/delta
/// distortion at lightness 1 + delta * base_lightness. Built as the
/// lightness reduction applied to (terminal backbone U slt(alpha=2) U MST).
/// Contains the MST of g.
TerminalSpannerResult terminal_spanner(const Graph& g,
                                       std::span<const VertexId> terminals,
                                       double delta);

struct SpannerLevel {
  int index = 0;           // 1-based
  int terminal_count = 0;  // |K_i|
  double delta = 0.0;
  double base_lightness = 1.0;
  double certified_distortion = 1.0;
};

class PrioritizedSpannerResult {
 public:
  PrioritizedSpannerResult(Subgraph spanner, PriorityRanking ranking,
                           std::vector<SpannerLevel> levels, double rho,
                           double lightness, int rebuilds);

  const Subgraph& spanner() const { return spanner_; }
  const PriorityRanking& ranking() const { return ranking_; }
  const std::vector<SpannerLevel>& levels() const { return levels_; }
  double rho() const { return rho_; }
  double lightness() const { return lightness_; }
  int rebuilds() const { return rebuilds_; }

  /// Certified distortion bound for pairs whose higher-priority endpoint has
  /// this 1-based rank; non-decreasing in the rank.
  double certified_bound(int rank) const;

  /// Smallest C with certified_bound(j) <= C*log(j+2)*log^2(log(j+4))/rho
  /// over all ranks; reported, never asserted.
  double reported_constant() const;

 private:
  Subgraph spanner_;
  PriorityRanking ranking_;
  std::vector<SpannerLevel> levels_;
  double rho_;
  double lightness_;
  int rebuilds_;
};

/// Terminal prefixes K_i = { v_j : j <= 2^(2^i) } for i = 1..ceil(loglog n),
/// truncated at n; the last level always covers every vertex.
std::vector<std::vector<VertexId>> level_terminal_sets(
    const PriorityRanking& pi);

/// Spanner with lightness at most 1 + rho and prioritized distortion
/// O(log j * poly(loglog j)) / rho with respect to the given ranking:
/// the union of one terminal spanner per level, all sharing one MST, with
/// per-level deltas scheduled (and rescaled if needed) so the final measured
/// lightness meets the budget.
PrioritizedSpannerResult prioritized_spanner(const Graph& g,
                                             const PriorityRanking& pi,
                                             double rho);

}  // namespace lightspan
