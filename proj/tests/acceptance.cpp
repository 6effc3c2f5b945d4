// Acceptance suite: runs every contract of the library at desk scale and
// prints one pass/fail line per criterion. Exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lightspan/benchgen.hpp"
#include "lightspan/greedy_spanner.hpp"
#include "lightspan/light_reduction.hpp"
#include "lightspan/metrics.hpp"
#include "lightspan/numeric.hpp"
#include "lightspan/parallel.hpp"
#include "lightspan/prioritized_spanner.hpp"
#include "lightspan/scaling.hpp"
#include "lightspan/shortest_paths.hpp"
#include "lightspan/slt.hpp"
#include "lightspan/tree_extract.hpp"
#include "oracle.hpp"

using namespace lightspan;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

// Corpus graphs and cached light-tree builds shared across criteria. Maps are
// node-stable, so Subgraphs can keep pointing at their parents.
struct Context {
  std::map<std::string, Graph> graphs;
  std::map<std::string, LightTreeReport> reports;  // key: graph|rho
  std::map<std::string, double> build_seconds;

  Context() {
    graphs.emplace("grid-256", gen_grid(16, 16));
    graphs.emplace("geo-256", gen_random_geometric(256, 0.125, 7));
    graphs.emplace("cycle-256", gen_cycle(256));
    graphs.emplace("lb-256", lower_bound_graph(256));
    graphs.emplace("grid-128", gen_grid(8, 16));
    graphs.emplace("geo-128", gen_random_geometric(128, 0.18, 7));
    graphs.emplace("cycle-128", gen_cycle(128));
    graphs.emplace("lb-128", lower_bound_graph(128));
  }

  static std::string key(const std::string& name, double rho,
                         const char* strategy) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s|%.6f|%s", name.c_str(), rho, strategy);
    return buf;
  }

  const LightTreeReport& report(const std::string& name, double rho,
                                const TreeStrategy& strategy,
                                const char* strategy_name) {
    std::string k = key(name, rho, strategy_name);
    auto it = reports.find(k);
    if (it != reports.end()) return it->second;
    auto start = std::chrono::steady_clock::now();
    LightTreeReport built =
        light_tree(graphs.at(name), std::nullopt, rho, strategy);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    build_seconds[k] = seconds;
    return reports.emplace(k, std::move(built)).first->second;
  }

  const LightTreeReport& mst_tree_report(const std::string& name, double rho) {
    return report(name, rho, TreeStrategy::mst_of_spanner(), "mst");
  }

  const LightTreeReport& median_tree_report(const std::string& name,
                                            double rho) {
    return report(name, rho, TreeStrategy::last_median(), "median");
  }
};

const std::vector<std::string> kMainCorpus = {"grid-256", "geo-256",
                                              "cycle-256", "lb-256"};

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

// 1. lightness 1+rho for the prioritized spanner, tree no heavier, under the
// single-threaded time budget
Outcome criterion_lightness(Context& ctx) {
  Outcome out;
  double worst_seconds = 0.0;
  for (const auto& name : kMainCorpus)
    for (double rho : {0.1, 0.25, 0.5}) {
      const auto& report = ctx.mst_tree_report(name, rho);
      double budget = (1.0 + rho) * mst(ctx.graphs.at(name)).weight();
      if (!(report.spanner_result.spanner().weight() <= budget))
        out.fail(name + " rho=" + fmt(rho) + " spanner over budget");
      if (!(report.tree.weight() <= report.spanner_result.spanner().weight()))
        out.fail(name + " rho=" + fmt(rho) + " tree heavier than spanner");
      double seconds = ctx.build_seconds[Context::key(name, rho, "mst")];
      worst_seconds = std::max(worst_seconds, seconds);
      if (seconds >= 60.0)
        out.fail(name + " rho=" + fmt(rho) + " build took " + fmt(seconds) +
                 "s");
    }
  out.detail = "12 instances; worst build " + fmt(worst_seconds) + "s";
  return out;
}

// 2. terminal spanner distortion over K x V
Outcome criterion_terminal(Context& ctx) {
  Outcome out;
  double worst_ratio = 0.0;
  for (const auto& name : kMainCorpus) {
    const Graph& g = ctx.graphs.at(name);
    for (int k : {4, 16, 64})
      for (double delta : {0.25, 1.0}) {
        std::vector<VertexId> terminals;
        for (int v = 0; v < k; ++v) terminals.push_back(v);
        auto result = terminal_spanner(g, terminals, delta);
        double bound =
            3.0 * (2.0 * std::ceil(std::log2(double(k))) + 3.0) / delta;
        for (VertexId t : terminals) {
          auto in_g = shortest_paths(g, std::span<const VertexId>(&t, 1));
          auto in_h = shortest_paths(g, std::span<const VertexId>(&t, 1),
                                     &result.spanner.mask());
          for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == t) continue;
            double ratio = in_h.dist[v] / in_g.dist[v];
            worst_ratio = std::max(worst_ratio, ratio / bound);
            if (!approx_leq(in_h.dist[v], bound * in_g.dist[v])) {
              out.fail(name + " k=" + std::to_string(k) +
                       " delta=" + fmt(delta) + " pair (" + std::to_string(t) +
                       "," + std::to_string(v) + ") ratio " + fmt(ratio) +
                       " > " + fmt(bound));
              break;
            }
          }
        }
      }
  }
  out.detail = "worst measured/bound = " + fmt(worst_ratio);
  return out;
}

// 3. reduction exactness: weight ledger to 1e-9 and MST invariance
Outcome criterion_reduction(Context&) {
  Outcome out;
  SpannerBuilder greedy{"greedy-2", [](const Graph& host) {
                          return greedy_spanner(host, 2);
                        }};
  const double deltas[] = {0.25, 0.5, 1.0};
  for (int i = 0; i < 100; ++i) {
    int n = 10 + (i * 7) % 31;
    Graph g = oracle::random_connected_graph(n, 2 * n, 1000 + i);
    auto tree = mst(g);
    double delta = deltas[i % 3];
    if (mst(reweight(g, tree, delta)).edge_ids() != tree.edge_ids()) {
      out.fail("instance " + std::to_string(i) + ": reweighted MST changed");
      break;
    }
    auto reduced = reduce(greedy, g, delta);
    double lhs = reduced.excess_weight;
    double rhs = delta * reduced.reweighted_excess;
    if (std::abs(lhs - rhs) > 1e-9 * std::max({1.0, lhs, rhs})) {
      out.fail("instance " + std::to_string(i) + ": ledger off by " +
               fmt(lhs - rhs));
      break;
    }
  }
  out.detail = "100 instances";
  return out;
}

// 4. shallow-light trees: stretch alpha, lightness 1 + 2/(alpha-1)
Outcome criterion_slt(Context& ctx) {
  Outcome out;
  for (const auto& name : kMainCorpus) {
    const Graph& g = ctx.graphs.at(name);
    double tree_weight = mst(g).weight();
    for (int k : {1, 4, 16}) {
      std::vector<VertexId> roots;
      for (int v = 0; v < k; ++v) roots.push_back(v);
      for (double alpha : {1.5, 2.0, 4.0}) {
        auto s = slt(g, roots, alpha);
        if (!approx_leq(s.weight(), (1.0 + 2.0 / (alpha - 1.0)) * tree_weight))
          out.fail(name + " alpha=" + fmt(alpha) + " overweight");
        auto in_g = shortest_paths(g, roots);
        auto in_s = shortest_paths(g, roots, &s.mask());
        for (int v = 0; v < g.vertex_count(); ++v)
          if (!approx_leq(in_s.dist[v], alpha * in_g.dist[v])) {
            out.fail(name + " alpha=" + fmt(alpha) + " stretch broken at " +
                     std::to_string(v));
            break;
          }
      }
    }
  }
  out.detail = "4 graphs x |K| in {1,4,16} x alpha in {1.5,2,4}";
  return out;
}

// 5. density nets over random metrics (the constructor asserts the size,
// coverage and disjoint-balls witnesses; violations throw)
Outcome criterion_density_nets(Context&) {
  Outcome out;
  int built = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 8 + (i * 13) % 57;
    auto m = oracle::random_euclidean_metric(n, 500 + i);
    for (double eps : {1.0 / n, 0.1, 0.25, 0.5, 0.9}) {
      try {
        auto net = density_net(m, eps);
        ++built;
        if (static_cast<double>(net.points.size()) > 1.0 / eps + 1e-9)
          out.fail("net too large at metric " + std::to_string(i));
      } catch (const Error& e) {
        out.fail(std::string("net contract violated: ") + e.what());
        return out;
      }
    }
  }
  out.detail = std::to_string(built) + " nets";
  return out;
}

// 6. prioritized-to-coarse transfer under the canonical ranking
Outcome criterion_coarse_transfer(Context& ctx) {
  Outcome out;
  double worst = 0.0;
  for (const auto& name : kMainCorpus) {
    const auto& report = ctx.mst_tree_report(name, 0.25);
    const auto& profile = report.spanner_profile;
    int n = ctx.graphs.at(name).vertex_count();
    auto envelope = monotone_envelope(
        prioritized_profile(profile, report.spanner_result.ranking()));
    auto alpha = [&](double eps) {
      auto rank = std::min<std::int64_t>(n, ceil_tolerant(8.0 / eps));
      auto idx = std::min<std::int64_t>(rank,
                                        static_cast<std::int64_t>(envelope.size()));
      return envelope[idx - 1];
    };
    for (double eps : profile.eps_grid()) {
      double coarse = profile.coarse_value(eps);
      double bound = 5.0 * alpha(eps);
      worst = std::max(worst, coarse / bound);
      if (!approx_leq(coarse, bound)) {
        out.fail(name + " eps=" + fmt(eps) + ": " + fmt(coarse) + " > " +
                 fmt(bound));
        break;
      }
    }
  }
  out.detail = "worst coarse/bound = " + fmt(worst);
  return out;
}

// 7. duplication reduction: |Z| <= 2n and the pulled-back per-rank profile
Outcome criterion_duplication(Context& ctx) {
  Outcome out;
  MetricSpace metric = MetricSpace::from_graph(ctx.graphs.at("geo-128"));
  auto mu = WeightFunctionMu::default_mu();
  for (bool use_canonical : {false, true}) {
    PriorityRanking pi = use_canonical ? canonical_ranking(metric)
                                       : PriorityRanking::identity(128);
    auto dz = duplicate_metric(metric, pi, mu);
    if (dz.space.size() > 256) out.fail("|Z| exceeded 2n");
    Graph zg = complete_graph(dz.space);
    auto spanner = greedy_spanner(zg, 2);
    MetricSpace z_target = subgraph_metric(spanner);
    DistortionProfile z_profile(dz.space, z_target);
    auto result = pull_back_embedding(dz, z_target, [&](double eps) {
      return z_profile.coarse_value(eps);
    });
    if (!result.certification.pass) {
      const auto& v = result.certification.violation;
      out.fail("pull-back pair (" + std::to_string(v.u) + "," +
               std::to_string(v.v) + ") " + fmt(v.distortion) + " > " +
               fmt(v.bound));
    }
  }
  out.detail = "n=128, identity and canonical rankings";
  return out;
}

// 8. composition counting form across the corpus
Outcome criterion_composition(Context& ctx) {
  Outcome out;
  for (const auto& name : kMainCorpus)
    for (double rho : {0.1, 0.25, 0.5}) {
      const auto& report = ctx.mst_tree_report(name, rho);
      const auto& stage1 = report.spanner_profile.pairs();
      const auto& stage2 = report.stage_profile.pairs();
      auto c = report.tree_profile.pair_count();
      for (double eps : report.tree_profile.eps_grid()) {
        double bound = report.spanner_profile.scaling_value(eps / 2.0) *
                       report.stage_profile.scaling_value(eps / 2.0);
        std::int64_t exceeding = 0;
        for (size_t i = 0; i < stage1.size(); ++i)
          if (definitely_gt(stage1[i].distortion * stage2[i].distortion,
                            bound))
            ++exceeding;
        if (exceeding > floor_tolerant(eps * static_cast<double>(c))) {
          out.fail(name + " rho=" + fmt(rho) + " eps=" + fmt(eps) + ": " +
                   std::to_string(exceeding) + " pairs exceed");
          break;
        }
      }
    }
  out.detail = "12 builds x full eps grid";
  return out;
}

// 9. moment bound for q in {1,2} on every constructed spanner and tree
Outcome criterion_moment_bound(Context& ctx) {
  Outcome out;
  int checked = 0;
  for (const auto& name : kMainCorpus)
    for (double rho : {0.1, 0.25, 0.5}) {
      const auto& report = ctx.mst_tree_report(name, rho);
      for (const DistortionProfile* profile :
           {&report.spanner_profile, &report.tree_profile}) {
        for (double q : {1.0, 2.0}) {
          auto lemma = lemma21_check(*profile, q);
          ++checked;
          if (!lemma.pass)
            out.fail(name + " rho=" + fmt(rho) + " q=" + fmt(q) + ": " +
                     fmt(lemma.lhs) + " > " + fmt(lemma.rhs));
        }
      }
    }
  out.detail = std::to_string(checked) + " profile/moment checks";
  return out;
}

// 10. average-distortion floor on the hard instance
Outcome criterion_lower_bound(Context& ctx) {
  Outcome out;
  const Graph& g = ctx.graphs.at("lb-256");
  for (double rho : {1.0 / 32.0, 1.0 / 64.0}) {
    const auto& mst_report = ctx.mst_tree_report("lb-256", rho);
    const auto& median_report = ctx.median_tree_report("lb-256", rho);
    const std::pair<const char*, const Subgraph*> artifacts[] = {
        {"spanner", &mst_report.spanner_result.spanner()},
        {"mst-tree", &mst_report.tree},
        {"median-tree", &median_report.tree},
    };
    for (auto [label, sub] : artifacts) {
      auto verdict = verify_lower_bound(g, *sub, rho);
      if (!verdict.applicable) {
        out.fail(std::string(label) + " rho=" + fmt(rho) +
                 " unexpectedly overweight");
        continue;
      }
      if (!verdict.pass)
        out.fail(std::string(label) + " rho=" + fmt(rho) + " dist1 " +
                 fmt(verdict.dist1) + " < " + fmt(verdict.required) +
                 " or ledger broken");
    }
  }
  out.detail = "spanner + both trees at rho in {1/32, 1/64}";
  return out;
}

// 11. average-distortion headline: dist1 <= C/rho with C stable across sizes
// within each family (shallow-light tree extraction)
Outcome criterion_average_distortion(Context& ctx) {
  Outcome out;
  double rho = 0.25;
  std::ostringstream table;
  for (const std::string family : {"grid", "geo", "cycle", "lb"}) {
    double c128 =
        rho * ctx.median_tree_report(family + "-128", rho).average_distortion;
    double c256 =
        rho * ctx.median_tree_report(family + "-256", rho).average_distortion;
    double spread = std::abs(c256 - c128) / std::max(c128, c256);
    table << family << ": C=" << fmt(c128) << "/" << fmt(c256) << " ";
    if (spread > 0.2)
      out.fail(family + " constant drifts " + fmt(100 * spread) + "% across sizes");
  }
  out.detail = table.str() + "(dist1*rho at n=128/256)";
  return out;
}

// 12. oracle equivalence for the core algorithms
Outcome criterion_oracles(Context&) {
  Outcome out;

  // exhaustive MST enumeration, n <= 7
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    int n = 4 + static_cast<int>(seed % 4);
    Graph g = oracle::random_connected_graph(n, n + 2, seed);
    auto tree = mst(g);
    double best = kInf;
    for (const auto& t : oracle::all_spanning_trees(g))
      best = std::min(best, oracle::tree_weight(g, t));
    if (std::abs(tree.weight() - best) > 1e-9 * std::max(1.0, best))
      out.fail("mst weight off at seed " + std::to_string(seed));
  }

  // Dijkstra vs cubic DP, n <= 50
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = oracle::random_connected_graph(50, 130, 90 + seed);
    auto expect = oracle::apsp(g);
    auto got = all_pairs(g);
    for (int u = 0; u < 50; ++u)
      for (int v = 0; v < 50; ++v)
        if (std::abs(got[u][v] - expect[u][v]) >
            1e-9 * std::max(1.0, expect[u][v]))
          out.fail("distance mismatch at seed " + std::to_string(seed));
  }

  // greedy spanner distortion certificate at n = 200
  Graph g = oracle::random_connected_graph(200, 700, 424242);
  for (int t : {2, 3}) {
    auto h = greedy_spanner(g, t);
    auto dg = oracle::apsp(g);
    auto mask = h.mask();
    auto dh = oracle::apsp(g, &mask);
    for (int u = 0; u < 200; ++u)
      for (int v = 0; v < 200; ++v)
        if (!approx_leq(dh[u][v], (2.0 * t - 1.0) * dg[u][v]))
          out.fail("greedy certificate broken at t=" + std::to_string(t));
  }

  out.detail = "mst enumeration, cubic DP, greedy certificate";
  return out;
}

}  // namespace

int main() {
  // the lightness criterion's time budget is single-threaded
  set_worker_cap(1);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome(Context&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "lightness contract", criterion_lightness},
      {2, "terminal spanner distortion", criterion_terminal},
      {3, "reduction exactness", criterion_reduction},
      {4, "shallow-light trees", criterion_slt},
      {5, "density nets", criterion_density_nets},
      {6, "prioritized-to-coarse transfer", criterion_coarse_transfer},
      {7, "duplication reduction", criterion_duplication},
      {8, "composition counting form", criterion_composition},
      {9, "moment bound", criterion_moment_bound},
      {10, "average-distortion floor", criterion_lower_bound},
      {11, "average-distortion headline", criterion_average_distortion},
      {12, "oracle equivalence", criterion_oracles},
  };

  Context ctx;
  int failures = 0;
  for (const auto& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run(ctx);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %2d. %s%s%s\n", outcome.pass ? "PASS" : "FAIL",
                criterion.id, criterion.name,
                outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0)
    std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
