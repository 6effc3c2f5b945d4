// lightspan CLI: generate benchmark graphs, build light spanners and trees,
// measure distortion profiles, and certify the library's guarantees.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lightspan/benchgen.hpp"
#include "lightspan/greedy_spanner.hpp"
#include "lightspan/io.hpp"
#include "lightspan/light_reduction.hpp"
#include "lightspan/metrics.hpp"
#include "lightspan/numeric.hpp"
#include "lightspan/prioritized_spanner.hpp"
#include "lightspan/scaling.hpp"
#include "lightspan/shortest_paths.hpp"
#include "lightspan/slt.hpp"
#include "lightspan/tree_extract.hpp"

using json = nlohmann::ordered_json;
using namespace lightspan;

namespace {

constexpr int kExactMeasurementLimit = 2000;

void require_measurable(const Graph& g) {
  if (g.vertex_count() > kExactMeasurementLimit)
    throw InvalidParams(
        "profiles are exact order statistics; refusing n > " +
        std::to_string(kExactMeasurementLimit));
}

void emit(std::ostream& out, const std::string& path,
          const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot open " + path + " for writing");
  writer(file);
}

PriorityRanking resolve_ranking(const std::string& spec, const Graph& g) {
  if (spec.empty() || spec == "identity")
    return PriorityRanking::identity(g.vertex_count());
  if (spec == "canonical")
    return canonical_ranking(MetricSpace::from_graph(g));
  return read_ranking_file(spec, g.vertex_count());
}

json check_entry(const std::string& name, bool pass) {
  return json{{"invariant", name}, {"pass", pass}};
}

json witness_pair(int u, int v, double have, double bound) {
  return json{{"u", u}, {"v", v}, {"value", have}, {"bound", bound}};
}

struct GenOptions {
  std::string kind;
  int n = 64;
  int rows = 4;
  int cols = 4;
  double radius = 0.25;
  double p = 0.1;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  Graph g = [&] {
    if (opt.kind == "cycle") return gen_cycle(opt.n);
    if (opt.kind == "path") return gen_path(opt.n);
    if (opt.kind == "grid") return gen_grid(opt.rows, opt.cols);
    if (opt.kind == "random-geometric")
      return gen_random_geometric(opt.n, opt.radius, opt.seed);
    if (opt.kind == "er-weighted") return gen_er_weighted(opt.n, opt.p, opt.seed);
    if (opt.kind == "lower-bound") return lower_bound_graph(opt.n);
    throw InvalidParams("unknown generator kind: " + opt.kind);
  }();
  emit(std::cout, opt.out, [&](std::ostream& s) { write_edge_list(s, g); });
  return 0;
}

struct SpannerOptions {
  std::string input;
  std::string mode = "prioritized";
  std::string ranking = "identity";
  std::string terminals;
  double rho = 0.25;
  double delta = 1.0;
  std::string out;
};

int run_spanner(const SpannerOptions& opt) {
  Graph g = read_edge_list_file(opt.input);
  if (opt.mode == "prioritized") {
    PriorityRanking pi = resolve_ranking(opt.ranking, g);
    auto result = prioritized_spanner(g, pi, opt.rho);
    emit(std::cout, opt.out,
         [&](std::ostream& s) { write_edge_list(s, result.spanner()); });
    std::cerr << "spanner: " << result.spanner().edge_count()
              << " edges, lightness " << result.lightness() << " (budget "
              << 1.0 + opt.rho << ")\n";
    return 0;
  }
  if (opt.mode == "terminal") {
    if (opt.terminals.empty())
      throw InvalidParams("terminal mode needs --terminals");
    auto k = read_vertex_set_file(opt.terminals, g.vertex_count());
    auto result = terminal_spanner(g, k, opt.delta);
    emit(std::cout, opt.out,
         [&](std::ostream& s) { write_edge_list(s, result.spanner); });
    std::cerr << "terminal spanner: lightness " << result.lightness
              << ", certified distortion " << result.certified_distortion
              << "\n";
    return 0;
  }
  throw InvalidParams("unknown spanner mode: " + opt.mode);
}

struct TreeOptions {
  std::string input;
  std::string strategy = "mst-of-spanner";
  std::string tree_file;
  std::string ranking = "canonical";
  double rho = 0.25;
  std::string out;
};

TreeStrategy resolve_strategy(const std::string& name,
                              const std::string& tree_file, const Graph& g) {
  if (name == "mst-of-spanner") return TreeStrategy::mst_of_spanner();
  if (name == "last-median") return TreeStrategy::last_median();
  if (name == "plugin") {
    if (tree_file.empty()) throw InvalidParams("plugin strategy needs --tree");
    Graph parsed = read_edge_list_file(tree_file);
    if (parsed.vertex_count() != g.vertex_count())
      throw NotATree("plugin tree has the wrong vertex count");
    std::vector<EdgeInput> edges;
    for (const auto& e : parsed.edges())
      edges.emplace_back(e.u, e.v, e.weight);
    return TreeStrategy::plugin(std::move(edges));
  }
  throw InvalidParams("unknown tree strategy: " + name);
}

int run_tree(const TreeOptions& opt) {
  Graph g = read_edge_list_file(opt.input);
  require_measurable(g);
  std::optional<PriorityRanking> pi;
  if (opt.ranking != "canonical") pi = resolve_ranking(opt.ranking, g);
  auto report = light_tree(g, pi, opt.rho,
                           resolve_strategy(opt.strategy, opt.tree_file, g));
  emit(std::cout, opt.out,
       [&](std::ostream& s) { write_edge_list(s, report.tree); });
  std::cerr << "tree: lightness " << report.tree_lightness
            << " <= spanner lightness " << report.spanner_lightness
            << " <= " << 1.0 + opt.rho << "; average distortion "
            << report.average_distortion << "\n";
  return 0;
}

struct AnalyzeOptions {
  std::string input;
  std::string against;
  std::string ranking;
  std::string profile = "profile.csv";
  std::string report = "report.json";
};

int run_analyze(const AnalyzeOptions& opt) {
  Graph g = read_edge_list_file(opt.against);
  require_measurable(g);
  Subgraph h = match_subgraph(g, read_edge_list_file(opt.input));
  DistortionProfile profile = measure(g, h);

  json report;
  report["lightness"] = lightness(g, h);
  report["dist"] = {{"q1", lq_distortion(profile, 1.0)},
                    {"q2", lq_distortion(profile, 2.0)},
                    {"qinf", lq_distortion(profile, kInf)}};
  report["profile"] = opt.profile;

  json certifications = json::array();
  bool non_contractive = approx_geq(profile.min_distortion(), 1.0);
  certifications.push_back(check_entry("non-contractive", non_contractive));
  bool scaling_below_coarse = true;
  for (double eps : profile.eps_grid())
    scaling_below_coarse =
        scaling_below_coarse &&
        approx_leq(profile.scaling_value(eps), profile.coarse_value(eps));
  certifications.push_back(
      check_entry("scaling-profile-below-coarse", scaling_below_coarse));
  bool moments_ok = true;
  for (double q : {1.0, 2.0}) {
    auto lemma = lemma21_check(profile, q);
    moments_ok = moments_ok && lemma.pass;
    certifications.push_back(
        json{{"invariant", "moment-bound-q" + std::to_string(int(q))},
             {"pass", lemma.pass},
             {"lhs", lemma.lhs},
             {"rhs", lemma.rhs}});
  }
  report["certifications"] = certifications;

  if (!opt.ranking.empty()) {
    PriorityRanking pi = resolve_ranking(opt.ranking, g);
    report["prioritized_profile"] =
        monotone_envelope(prioritized_profile(profile, pi));
  }

  emit(std::cout, opt.profile,
       [&](std::ostream& s) { write_profile_csv(s, profile); });
  emit(std::cout, opt.report,
       [&](std::ostream& s) { s << report.dump(2) << '\n'; });
  bool pass = non_contractive && scaling_below_coarse && moments_ok;
  std::cerr << "analyze: " << (pass ? "all checks passed" : "CHECKS FAILED")
            << "\n";
  return pass ? 0 : 1;
}

struct CertifyOptions {
  std::string theorem;
  std::string input;
  std::string ranking = "identity";
  int n = 256;
  double rho = 0.25;
  double delta = 0.5;
};

json certify_prioritized(const Graph& g, const PriorityRanking& pi,
                         double rho) {
  auto result = prioritized_spanner(g, pi, rho);
  auto profile = measure(g, result.spanner());
  auto alpha = prioritized_profile(profile, pi);

  json checks = json::array();
  checks.push_back(
      check_entry("lightness <= 1+rho", result.lightness() <= 1.0 + rho));
  checks.push_back(check_entry("contains the MST",
                               result.spanner().contains_all(mst(g))));
  bool ranks_ok = true;
  json witness;
  for (size_t j = 1; j <= alpha.size(); ++j) {
    double bound = result.certified_bound(static_cast<int>(j));
    if (!approx_leq(alpha[j - 1], bound)) {
      ranks_ok = false;
      witness = json{{"rank", j}, {"measured", alpha[j - 1]}, {"bound", bound}};
      break;
    }
  }
  json rank_check =
      check_entry("per-rank distortion within certificate", ranks_ok);
  if (!ranks_ok) rank_check["witness"] = witness;
  checks.push_back(rank_check);
  checks.push_back(check_entry(
      "uniform distortion within the last certificate",
      approx_leq(profile.max_distortion(),
                 result.certified_bound(g.vertex_count()))));
  return checks;
}

json certify_reduction(const Graph& g, double delta) {
  json checks = json::array();
  auto tree = mst(g);
  Graph reweighted = reweight(g, tree, delta);
  checks.push_back(check_entry("reweighted graph keeps the MST",
                               mst(reweighted).edge_ids() == tree.edge_ids()));

  SpannerBuilder greedy{"greedy-2", [](const Graph& host) {
                          return greedy_spanner(host, 2);
                        }};
  auto reduced = reduce(greedy, g, delta);
  checks.push_back(check_entry(
      "weight ledger w(H)-w(T) = delta*w'(H'\\T)",
      approx_eq(reduced.excess_weight, delta * reduced.reweighted_excess)));
  checks.push_back(check_entry(
      "lightness <= 1 + delta*base",
      approx_leq(reduced.lightness, 1.0 + delta * reduced.base_lightness)));

  auto dg = all_pairs(g);
  auto dh = all_pairs(g, &reduced.spanner.mask());
  bool distortion_ok = true;
  json witness;
  double bound = 3.0 / delta;
  for (int u = 0; u < g.vertex_count() && distortion_ok; ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!approx_leq(dh[u][v], bound * dg[u][v])) {
        distortion_ok = false;
        witness = witness_pair(u, v, dh[u][v] / dg[u][v], bound);
        break;
      }
  json check = check_entry("all pairs within t/delta", distortion_ok);
  if (!distortion_ok) check["witness"] = witness;
  checks.push_back(check);
  return checks;
}

json certify_coarse(const Graph& g, double rho) {
  MetricSpace metric = MetricSpace::from_graph(g);
  PriorityRanking pi = canonical_ranking(metric);
  auto result = prioritized_spanner(g, pi, rho);
  MetricSpace embedded = subgraph_metric(result.spanner());
  DistortionProfile profile(metric, embedded);
  auto envelope = monotone_envelope(prioritized_profile(profile, pi));
  auto alpha = [&](int j) {
    int idx = std::min<int>(j, static_cast<int>(envelope.size()));
    return envelope[idx - 1];
  };
  auto cert = certify_coarse_scaling(metric, embedded, pi, alpha);
  json checks = json::array();
  json check = check_entry("coarse profile within 5*alpha(8/eps)", cert.pass);
  if (!cert.pass)
    check["witness"] =
        witness_pair(cert.violation.u, cert.violation.v,
                     cert.violation.distortion, cert.violation.bound);
  checks.push_back(check);
  checks.push_back(
      check_entry("lightness <= 1+rho", result.lightness() <= 1.0 + rho));
  return checks;
}

json certify_duplication(const Graph& g) {
  if (g.vertex_count() > 512)
    throw InvalidParams("duplication certification is capped at n = 512");
  MetricSpace metric = MetricSpace::from_graph(g);
  auto mu = WeightFunctionMu::default_mu();
  PriorityRanking pi = PriorityRanking::identity(metric.size());
  auto dz = duplicate_metric(metric, pi, mu);

  json checks = json::array();
  checks.push_back(
      check_entry("|Z| <= 2n", dz.space.size() <= 2 * metric.size()));

  Graph zg = complete_graph(dz.space);
  auto spanner = greedy_spanner(zg, 2);
  MetricSpace z_target = subgraph_metric(spanner);
  DistortionProfile z_profile(dz.space, z_target);
  auto result = pull_back_embedding(dz, z_target, [&](double eps) {
    return z_profile.coarse_value(eps);
  });
  json check = check_entry("per-rank pull-back within gamma(mu(rank))",
                           result.certification.pass);
  if (!result.certification.pass)
    check["witness"] = witness_pair(
        result.certification.violation.u, result.certification.violation.v,
        result.certification.violation.distortion,
        result.certification.violation.bound);
  checks.push_back(check);
  return checks;
}

json certify_composition(const Graph& g, double rho) {
  auto report =
      light_tree(g, std::nullopt, rho, TreeStrategy::mst_of_spanner());
  json checks = json::array();
  checks.push_back(check_entry("tree lightness <= spanner lightness <= 1+rho",
                               report.tree_lightness <=
                                       report.spanner_lightness + 1e-12 &&
                                   report.spanner_lightness <= 1.0 + rho));
  const auto& stage1 = report.spanner_profile.pairs();
  const auto& stage2 = report.stage_profile.pairs();
  bool counting_ok = true;
  json witness;
  for (double eps : report.tree_profile.eps_grid()) {
    double bound = report.spanner_profile.scaling_value(eps / 2.0) *
                   report.stage_profile.scaling_value(eps / 2.0);
    std::int64_t exceeding = 0;
    for (size_t i = 0; i < stage1.size(); ++i)
      if (definitely_gt(stage1[i].distortion * stage2[i].distortion, bound))
        ++exceeding;
    auto allowed = floor_tolerant(
        eps * static_cast<double>(report.tree_profile.pair_count()));
    if (exceeding > allowed) {
      counting_ok = false;
      witness =
          json{{"eps", eps}, {"exceeding", exceeding}, {"allowed", allowed}};
      break;
    }
  }
  json check = check_entry("composition counting form", counting_ok);
  if (!counting_ok) check["witness"] = witness;
  checks.push_back(check);
  bool pointwise = true;
  for (double eps : report.tree_profile.eps_grid())
    pointwise = pointwise &&
                approx_leq(report.tree_profile.scaling_value(eps),
                           report.spanner_profile.scaling_value(eps / 2.0) *
                               report.stage_profile.scaling_value(eps / 2.0));
  checks.push_back(
      check_entry("composed profile dominates the tree", pointwise));
  return checks;
}

json certify_lower_bound(int n, double rho) {
  Graph g = lower_bound_graph(n);
  require_measurable(g);
  auto report =
      light_tree(g, std::nullopt, rho, TreeStrategy::mst_of_spanner());
  json checks = json::array();
  const std::pair<const char*, const Subgraph*> artifacts[] = {
      {"spanner", &report.spanner_result.spanner()},
      {"tree", &report.tree},
  };
  for (auto [name, sub] : artifacts) {
    auto verdict = verify_lower_bound(g, *sub, rho);
    json entry;
    entry["artifact"] = name;
    entry["invariant"] = "dist1 >= 1/(128 rho) with consistent ledger";
    entry["pass"] = verdict.pass;
    entry["applicable"] = verdict.applicable;
    entry["lightness"] = verdict.lightness;
    entry["dist1"] = verdict.dist1;
    entry["required"] = verdict.required;
    entry["heavy_edges"] = verdict.heavy_edge_count;
    entry["heavy_budget"] = verdict.k;
    entry["diagnostics"] = json{{"incident_set", verdict.incident_set_size},
                                {"near_set", verdict.near_set_size},
                                {"min_far_count", verdict.min_far_count},
                                {"ok", verdict.diagnostics_ok}};
    checks.push_back(entry);
  }
  return checks;
}

int run_certify(const CertifyOptions& opt) {
  json result;
  result["theorem"] = opt.theorem;
  json checks;
  if (opt.theorem == "6.1") {
    checks = certify_lower_bound(opt.n, opt.rho);
  } else {
    if (opt.input.empty())
      throw InvalidParams("certify --theorem " + opt.theorem +
                          " needs --input");
    Graph g = read_edge_list_file(opt.input);
    require_measurable(g);
    if (opt.theorem == "3.1")
      checks = certify_prioritized(g, resolve_ranking(opt.ranking, g), opt.rho);
    else if (opt.theorem == "3.2")
      checks = certify_reduction(g, opt.delta);
    else if (opt.theorem == "4.1")
      checks = certify_coarse(g, opt.rho);
    else if (opt.theorem == "4.2")
      checks = certify_duplication(g);
    else if (opt.theorem == "5.1")
      checks = certify_composition(g, opt.rho);
    else
      throw InvalidParams("unknown theorem: " + opt.theorem);
  }
  bool pass = true;
  for (const auto& check : checks) pass = pass && check["pass"].get<bool>();
  result["pass"] = pass;
  result["checks"] = checks;
  std::cout << result.dump(2) << '\n';
  return pass ? 0 : 1;
}

struct VerifyLbOptions {
  int n = 256;
  double rho = 1.0 / 32.0;
  std::string input;
};

int run_verify_lb(const VerifyLbOptions& opt) {
  Graph g = lower_bound_graph(opt.n);
  require_measurable(g);
  json out;
  out["n"] = opt.n;
  out["rho"] = opt.rho;
  LowerBoundVerdict verdict;
  if (!opt.input.empty()) {
    Subgraph h = match_subgraph(g, read_edge_list_file(opt.input));
    verdict = verify_lower_bound(g, h, opt.rho);
  } else {
    auto report =
        light_tree(g, std::nullopt, opt.rho, TreeStrategy::mst_of_spanner());
    verdict = verify_lower_bound(g, report.tree, opt.rho);
  }
  out["applicable"] = verdict.applicable;
  out["lightness"] = verdict.lightness;
  out["dist1"] = verdict.dist1;
  out["required"] = verdict.required;
  out["margin"] = verdict.dist1 - verdict.required;
  out["heavy_edges"] = verdict.heavy_edge_count;
  out["heavy_budget"] = verdict.k;
  out["weight_ledger_ok"] = verdict.weight_ledger_ok;
  out["diagnostics_ok"] = verdict.diagnostics_ok;
  out["pass"] = verdict.pass;
  std::cout << out.dump(2) << '\n';
  return verdict.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "light spanners and spanning trees with measured distortion guarantees"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a benchmark graph");
  gen->add_option("kind", gen_opt.kind,
                  "grid|random-geometric|er-weighted|cycle|path|lower-bound")
      ->required();
  gen->add_option("--n", gen_opt.n, "vertex count (path/cycle/geometric/er)");
  gen->add_option("--rows", gen_opt.rows, "grid rows");
  gen->add_option("--cols", gen_opt.cols, "grid columns");
  gen->add_option("--radius", gen_opt.radius, "geometric connection radius");
  gen->add_option("--p", gen_opt.p, "er edge probability");
  gen->add_option("--seed", gen_opt.seed, "random seed");
  gen->add_option("--out", gen_opt.out, "output edge list (default stdout)");

  SpannerOptions sp_opt;
  auto* spanner = app.add_subcommand("spanner", "build a light spanner");
  spanner->add_option("--input", sp_opt.input, "input edge list")->required();
  spanner->add_option("--mode", sp_opt.mode, "prioritized|terminal");
  spanner->add_option("--ranking", sp_opt.ranking,
                      "identity|canonical|<ranking file>");
  spanner->add_option("--terminals", sp_opt.terminals, "terminal set file");
  spanner->add_option("--rho", sp_opt.rho, "lightness budget (prioritized)");
  spanner->add_option("--delta", sp_opt.delta, "weight trade (terminal)");
  spanner->add_option("--out", sp_opt.out, "output edge list");

  TreeOptions tree_opt;
  auto* tree = app.add_subcommand("tree", "build a light spanning tree");
  tree->add_option("--input", tree_opt.input, "input edge list")->required();
  tree->add_option("--rho", tree_opt.rho, "lightness budget");
  tree->add_option("--strategy", tree_opt.strategy,
                   "mst-of-spanner|last-median|plugin");
  tree->add_option("--tree", tree_opt.tree_file, "plugin tree edge list");
  tree->add_option("--ranking", tree_opt.ranking,
                   "canonical|identity|<ranking file>");
  tree->add_option("--out", tree_opt.out, "output edge list");

  AnalyzeOptions an_opt;
  auto* analyze = app.add_subcommand(
      "analyze", "measure a built structure against a graph");
  analyze->add_option("--input", an_opt.input, "built edge list")->required();
  analyze->add_option("--against", an_opt.against, "host graph edge list")
      ->required();
  analyze->add_option("--ranking", an_opt.ranking,
                      "optional ranking for the per-rank profile");
  analyze->add_option("--profile", an_opt.profile, "profile CSV path");
  analyze->add_option("--report", an_opt.report, "report JSON path");

  CertifyOptions cert_opt;
  auto* certify =
      app.add_subcommand("certify", "run a guarantee's assertion suite");
  certify->add_option("--theorem", cert_opt.theorem, "3.1|3.2|4.1|4.2|5.1|6.1")
      ->required();
  certify->add_option("--input", cert_opt.input, "input edge list");
  certify->add_option("--ranking", cert_opt.ranking, "ranking for 3.1");
  certify->add_option("--n", cert_opt.n, "instance size for 6.1");
  certify->add_option("--rho", cert_opt.rho, "lightness budget");
  certify->add_option("--delta", cert_opt.delta, "weight trade for 3.2");

  VerifyLbOptions lb_opt;
  auto* verify_lb = app.add_subcommand(
      "verify-lb", "check the average-distortion floor on the hard instance");
  verify_lb->add_option("--n", lb_opt.n, "instance size");
  verify_lb->add_option("--rho", lb_opt.rho, "lightness budget");
  verify_lb->add_option("--input", lb_opt.input,
                        "structure to verify (default: build a light tree)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (spanner->parsed()) return run_spanner(sp_opt);
    if (tree->parsed()) return run_tree(tree_opt);
    if (analyze->parsed()) return run_analyze(an_opt);
    if (certify->parsed()) return run_certify(cert_opt);
    if (verify_lb->parsed()) return run_verify_lb(lb_opt);
  } catch (const Error& e) {
    json failure;
    failure["status"] = "error";
    failure["message"] = e.what();
    std::cout << failure.dump(2) << '\n';
    return 2;
  }
  return 0;
}
