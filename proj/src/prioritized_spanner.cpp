#include "lightspan/prioritized_spanner.hpp"

#include <cmath>
#include <string>

#include "lightspan/greedy_spanner.hpp"
#include "lightspan/light_reduction.hpp"
#include "lightspan/numeric.hpp"
#include "lightspan/slt.hpp"

namespace lightspan {

double terminal_certified_distortion(int k, double delta) {
  if (k <= 1) return 2.0 / delta;
  int t = backbone_stretch_param(k);
  return (3.0 * (2.0 * t - 1.0) + 2.0) / delta;
}

TerminalSpannerResult terminal_spanner(const Graph& g,
                                       std::span<const VertexId> terminals,
                                       double delta) {
  if (terminals.empty()) throw EmptySourceSet("terminal set must be nonempty");
  std::vector<VertexId> k_set(terminals.begin(), terminals.end());
  SpannerBuilder base{
      "terminal-base",
      [&k_set](const Graph& host) {
        Subgraph out = terminal_backbone(host, k_set);
        out.add_edges(slt(host, k_set, 2.0));
        out.add_edges(mst(host));
        return out;
      },
  };
  ReduceResult reduced = reduce(base, g, delta);
  TerminalSpannerResult result{std::move(reduced.spanner)};
  result.delta = delta;
  result.terminal_count = static_cast<int>(k_set.size());
  result.stretch_param = backbone_stretch_param(result.terminal_count);
  result.base_lightness = reduced.base_lightness;
  result.lightness = reduced.lightness;
  result.certified_distortion =
      terminal_certified_distortion(result.terminal_count, delta);
  return result;
}

std::vector<std::vector<VertexId>> level_terminal_sets(
    const PriorityRanking& pi) {
  int n = pi.size();
  std::vector<std::vector<VertexId>> sets;
  std::int64_t cutoff = 4;  // 2^(2^1)
  while (true) {
    int size = static_cast<int>(std::min<std::int64_t>(n, cutoff));
    std::vector<VertexId> prefix(pi.order().begin(),
                                 pi.order().begin() + size);
    sets.push_back(std::move(prefix));
    if (size == n) break;
    cutoff = cutoff * cutoff;  // 2^(2^i) -> 2^(2^(i+1))
  }
  return sets;
}

PrioritizedSpannerResult::PrioritizedSpannerResult(
    Subgraph spanner, PriorityRanking ranking, std::vector<SpannerLevel> levels,
    double rho, double lightness, int rebuilds)
    : spanner_(std::move(spanner)),
      ranking_(std::move(ranking)),
      levels_(std::move(levels)),
      rho_(rho),
      lightness_(lightness),
      rebuilds_(rebuilds) {}

double PrioritizedSpannerResult::certified_bound(int rank) const {
  for (const auto& level : levels_)
    if (rank <= level.terminal_count) return level.certified_distortion;
  return levels_.back().certified_distortion;
}

double PrioritizedSpannerResult::reported_constant() const {
  double c = 0.0;
  for (int j = 1; j <= ranking_.size(); ++j) {
    double form = std::log2(j + 2.0) *
                  std::pow(std::log2(std::log2(j + 4.0)), 2.0) / rho_;
    c = std::max(c, certified_bound(j) / form);
  }
  return c;
}

PrioritizedSpannerResult prioritized_spanner(const Graph& g,
                                             const PriorityRanking& pi,
                                             double rho) {
  if (!(rho > 0.0) || !(rho < 1.0))
    throw InvalidParams("rho must lie in (0, 1)");
  if (pi.size() != g.vertex_count())
    throw RankingMismatch("ranking size does not match the graph");
  if (g.vertex_count() < 2)
    throw InvalidParams("prioritized spanner needs at least two vertices");

  auto terminal_sets = level_terminal_sets(pi);
  int level_count = static_cast<int>(terminal_sets.size());
  double normalizer = 0.0;
  for (int i = 1; i <= level_count; ++i) normalizer += 1.0 / (i * double(i));

  double tree_weight = mst(g).weight();
  // Per-level budget rho/(Z * i^2 * lbar); lbar starts as a lightness guess
  // and the whole schedule rescales until the measured excess fits rho.
  double lbar = 4.0;
  double scale = 1.0;
  constexpr int kMaxRounds = 8;
  for (int round = 0; round < kMaxRounds; ++round) {
    Subgraph merged(g);
    std::vector<SpannerLevel> levels;
    levels.reserve(level_count);
    double schedule_excess = 0.0;  // sum of delta_i * measured base lightness
    for (int i = 1; i <= level_count; ++i) {
      double delta =
          std::min(1.0, scale * rho / (normalizer * i * double(i) * lbar));
      TerminalSpannerResult ts =
          terminal_spanner(g, terminal_sets[i - 1], delta);
      merged.add_edges(ts.spanner);
      schedule_excess += delta * ts.base_lightness;
      levels.push_back({i, ts.terminal_count, delta, ts.base_lightness,
                        ts.certified_distortion});
    }
    double merged_lightness =
        tree_weight > 0.0 ? merged.weight() / tree_weight : 1.0;
    if (schedule_excess <= rho && merged_lightness <= 1.0 + rho)
      return PrioritizedSpannerResult(std::move(merged), pi, std::move(levels),
                                      rho, merged_lightness, round);
    scale *= std::min(0.5, 0.85 * rho / schedule_excess);
  }
  throw Error("prioritized spanner schedule failed to meet the lightness "
              "budget after rescaling");
}

}  // namespace lightspan
