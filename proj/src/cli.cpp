#include "monochrome/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monochrome/coloring.hpp"
#include "monochrome/constructions.hpp"
#include "monochrome/counting.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/graphon.hpp"
#include "monochrome/io.hpp"
#include "monochrome/limits.hpp"
#include "monochrome/stats.hpp"
#include "monochrome/verify.hpp"

namespace mono {

namespace {

using nlohmann::json;

constexpr std::uint64_t kReferenceStream = std::uint64_t{1} << 62;

struct Config {
  std::string graph_path;
  std::string generator;
  std::string pattern = "K3";
  int colors = 2;
  std::size_t reps = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string graphon_path;
  std::string regime = "auto";
  std::string suite = "all";
  double lambda = 1;
  double prob = 0.5;
  int clique = 3;
  double density = 1;
};

struct Host {
  HostGraph graph;
  std::string label;
};

std::optional<Host> load_host(const Config& cfg) {
  if (!cfg.graph_path.empty() && !cfg.generator.empty()) throw InputError("give either --graph or --gen, not both");
  if (!cfg.graph_path.empty()) return Host{read_edge_list_file(cfg.graph_path), cfg.graph_path};
  if (!cfg.generator.empty()) return Host{generate(cfg.generator), cfg.generator};
  return std::nullopt;
}

Host require_host(const Config& cfg) {
  auto host = load_host(cfg);
  if (!host) throw InputError("this command needs a host graph (--graph FILE or --gen SPEC)");
  return std::move(*host);
}

json host_json(const Host& h) {
  return {{"source", h.label},
          {"n", h.graph.size()},
          {"edges", h.graph.edge_count()},
          {"hash", hex64(graph_hash(h.graph))}};
}

std::string graph_label(const SmallGraph& f) {
  std::string out;
  for (const Edge& e : f.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

void emit(const Config& cfg, std::ostream& out, const json& report) {
  const std::string text = report.dump(2) + '\n';
  out << text;
  if (!cfg.out_path.empty()) atomic_write(cfg.out_path, text);
}

double sample_mean(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_variance(const std::vector<double>& x) {
  if (x.size() < 2) return 0;
  const double m = sample_mean(x);
  double s = 0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

int cmd_count(const Config& cfg, std::ostream& out) {
  const Host host = require_host(cfg);
  const Pattern h = parse_pattern(cfg.pattern);
  const std::uint64_t homs = count_injective_homs(h.graph(), host.graph);
  json family = json::array();
  for (const SupergraphClass& f : supergraph_family(h)) {
    family.push_back({{"F", graph_label(f.graph)},
                      {"copies_of_H_in_F", f.pattern_copies},
                      {"automorphisms", f.automorphisms},
                      {"induced_density", induced_density(f.graph, host.graph)}});
  }
  emit(cfg, out,
       {{"schema_version", kReportSchemaVersion},
        {"command", "count"},
        {"pattern", h.name()},
        {"graph", host_json(host)},
        {"copies", homs / h.automorphisms()},
        {"injective_homomorphisms", homs},
        {"automorphisms", h.automorphisms()},
        {"injective_density", injective_density(h.graph(), host.graph)},
        {"homomorphism_density", homomorphism_density(h.graph(), host.graph)},
        {"induced_family", family}});
  return 0;
}

int cmd_simulate(const Config& cfg, std::ostream& out) {
  const Host host = require_host(cfg);
  const Pattern h = parse_pattern(cfg.pattern);
  if (cfg.reps == 0) throw InputError("--reps must be at least 1");
  SampleSet samples = run_monte_carlo(h, host.graph, cfg.colors, cfg.reps, cfg.seed);
  samples.graph = host.label;
  json report = {{"schema_version", kReportSchemaVersion},
                 {"command", "simulate"},
                 {"pattern", h.name()},
                 {"graph", host_json(host)},
                 {"colors", cfg.colors},
                 {"reps", cfg.reps},
                 {"seed", cfg.seed},
                 {"sample_mean", sample_mean(samples.values)},
                 {"sample_variance", sample_variance(samples.values)}};
  try {
    const MomentReport m = exact_variance(h, host.graph, cfg.colors);
    report["exact_mean"] = m.mean;
    report["exact_variance"] = m.variance;
    report["copies"] = m.copy_count;
    if (m.variance > 0) {
      report["mean_z_score"] = (sample_mean(samples.values) - m.mean) / std::sqrt(m.variance / cfg.reps);
    }
  } catch (const BudgetExceeded& e) {
    report["exact_mean"] = exact_mean(h, host.graph, cfg.colors);
    report["notice"] = std::string("exact variance omitted: ") + e.what();
  }
  if (!cfg.out_path.empty()) {
    write_samples(cfg.out_path, samples, graph_hash(host.graph));
    report["samples_file"] = cfg.out_path;
  }
  out << report.dump(2) << '\n';
  return 0;
}

json mixture_json(const PoissonMixture& mix) {
  json comps = json::array();
  for (const auto& c : mix.components) {
    comps.push_back({{"F", c.label}, {"multiplicity", c.multiplicity}, {"rate", c.rate}});
  }
  return comps;
}

json chisq_json(const ChiSqMixture& law) {
  return {{"eigenvalues", law.eigenvalues},
          {"c", law.c},
          {"scale", law.scale},
          {"source", law.source},
          {"discarded_mass", law.discarded_mass},
          {"variance", law.variance()}};
}

int cmd_limit(const Config& cfg, std::ostream& out) {
  const Pattern h = parse_pattern(cfg.pattern);
  const auto host = load_host(cfg);
  std::optional<StepGraphon> w;
  std::string provenance;
  if (!cfg.graphon_path.empty()) {
    const std::string text = read_file(cfg.graphon_path);
    w = graphon_from_json(text);
    provenance = "graphon:" + hex64(fnv1a(text));
  } else if (host) {
    provenance = "graph:" + hex64(graph_hash(host->graph));
  } else {
    throw InputError("limit needs --graphon FILE or a host graph");
  }

  json report = {{"schema_version", kReportSchemaVersion},
                 {"command", "limit"},
                 {"pattern", h.name()},
                 {"provenance", provenance},
                 {"seed", cfg.seed},
                 {"colors", cfg.colors}};
  if (host) report["graph"] = host_json(*host);

  std::string regime = cfg.regime;
  if (regime == "auto") {
    if (!host) throw InputError("--regime auto needs a host graph");
    const RegimeReport r = classify_regime(h, host->graph, cfg.colors);
    report["routing"] = {{"regime", to_string(r.regime)},
                         {"mean", r.mean},
                         {"copies", r.copies},
                         {"hub_share", r.hub_share},
                         {"stein_bound", r.stein_bound},
                         {"reason", r.reason},
                         {"heuristic", true}};
    switch (r.regime) {
      case Regime::poisson:
        regime = "poisson";
        break;
      case Regime::gaussian:
        regime = "normal";
        break;
      case Regime::chisq_fixed_c:
        regime = "chisq";
        break;
      case Regime::degenerate:
        report["law"] = "degenerate";
        report["notice"] = r.reason;
        emit(cfg, out, report);
        return 0;
    }
  }

  if (w && density_W(h.graph(), *w) <= 0) {
    report["law"] = "degenerate";
    report["notice"] =
        "t(H,W) = 0: outside the limit theorems (compare K_{1,n,n}, where T tends to a product of two "
        "independent Pois(1))";
    emit(cfg, out, report);
    return 0;
  }
  if (!w && count_copies(h, host->graph) == 0) {
    report["law"] = "degenerate";
    report["notice"] = "no copies of H in G: T is identically 0";
    emit(cfg, out, report);
    return 0;
  }

  std::optional<SampleSet> samples;
  if (cfg.reps > 0) {
    if (!host) throw InputError("goodness of fit needs a host graph to simulate on");
    samples = run_monte_carlo(h, host->graph, cfg.colors, cfg.reps, cfg.seed);
  }

  if (regime == "poisson") {
    const PoissonMixture mix =
        w ? poisson_mixture_params(h, *w, cfg.lambda) : poisson_mixture_from_host(h, host->graph, cfg.colors);
    report["law"] = "poisson-mixture";
    report["parameters"] = {{"components", mixture_json(mix)}, {"mean", mix.mean()}, {"variance", mix.variance()}};
    if (!w) report["parameters"]["lambda"] = mix.mean();
    if (w) report["parameters"]["lambda"] = cfg.lambda;
    if (samples) {
      const auto emp = empirical_pmf(samples->values);
      const MixturePmf law = mixture_pmf(mix, std::max<std::size_t>(emp.size() + 50, 100));
      report["goodness_of_fit"] = {{"statistic", "total variation"},
                                   {"value", tv_lattice(emp, law.pmf)},
                                   {"law_tail_mass", law.tail},
                                   {"reps", cfg.reps}};
    }
  } else if (regime == "normal") {
    if (!host) throw InputError("the Gaussian law needs a host graph");
    const GaussianLimit g = gaussian_limit(h, host->graph, cfg.colors);
    report["law"] = "gaussian";
    report["parameters"] = {{"mean", g.mean},
                            {"sd", g.sd},
                            {"bound_terms", {g.bound_terms.first, g.bound_terms.second}},
                            {"bound", g.bound_terms.first + g.bound_terms.second},
                            {"bound_note", "up to an H-dependent constant"}};
    if (samples) {
      const SampleSet z = standardize(*samples, g.mean, g.sd);
      Rng rng = stream_rng(cfg.seed, kReferenceStream);
      std::normal_distribution<double> normal;
      std::vector<double> ref(cfg.reps);
      std::vector<double> control(cfg.reps);
      for (auto& x : ref) x = normal(rng);
      for (auto& x : control) x = normal(rng);
      report["goodness_of_fit"] = {{"statistic", "wasserstein-1"},
                                   {"value", wasserstein1_empirical(z.values, ref)},
                                   {"control", wasserstein1_empirical(control, ref)},
                                   {"reps", cfg.reps}};
    }
  } else if (regime == "chisq") {
    if (cfg.colors < 2) throw InputError("the chi-squared law needs --colors >= 2");
    std::vector<double> eig;
    std::string source;
    if (w) {
      eig = kernel_eigenvalues(kernel_WH(h, *w));
      source = "graphon";
    } else {
      eig = finite_n_spectrum(scaled_two_point_matrix(h, host->graph));
      source = "finite-n matrix";
    }
    try {
      const ChiSqMixture law = chisq_limit(eig, cfg.colors, h.order(), source);
      report["law"] = "chisq-mixture";
      report["parameters"] = chisq_json(law);
      if (samples) {
        const double mean = exact_mean(h, host->graph, cfg.colors);
        const auto gamma = gamma_statistic(*samples, mean, host->graph.size(), h.order());
        Rng rng = stream_rng(cfg.seed, kReferenceStream);
        std::vector<double> ref(cfg.reps);
        for (auto& x : ref) x = law.sample(rng);
        report["goodness_of_fit"] = {{"statistic", "kolmogorov-smirnov"},
                                     {"value", ks_statistic(gamma, ref)},
                                     {"reps", cfg.reps}};
      }
    } catch (const DegenerateConfiguration& e) {
      report["law"] = "degenerate";
      report["notice"] = e.what();
    }
  } else {
    throw InputError("unknown regime '" + regime + "' (poisson, normal, chisq or auto)");
  }
  emit(cfg, out, report);
  return 0;
}

int cmd_birthday(const Config& cfg, std::ostream& out) {
  const BirthdayEstimate est = birthday_sample_size(cfg.clique, cfg.colors, cfg.prob, cfg.density);
  json report = {{"schema_version", kReportSchemaVersion},
                 {"command", "birthday"},
                 {"clique", cfg.clique},
                 {"colors", cfg.colors},
                 {"probability", cfg.prob},
                 {"density", cfg.density},
                 {"estimate", est.value},
                 {"ceiling", est.ceiling}};
  if (cfg.density == 1) {
    report["exact_probability_at_ceiling"] = collision_probability(est.ceiling, cfg.colors, cfg.clique);
  }
  const std::size_t reps = cfg.reps > 0 ? cfg.reps : 10000;
  if (cfg.density == 1 && est.ceiling >= static_cast<std::uint64_t>(cfg.clique)) {
    const Pattern h = parse_pattern("K" + std::to_string(cfg.clique));
    const SampleSet s = run_monte_carlo(h, complete_graph(est.ceiling), cfg.colors, reps, cfg.seed);
    double hits = 0;
    for (double x : s.values) hits += x > 0;
    report["monte_carlo"] = {{"reps", reps}, {"seed", cfg.seed}, {"p_at_least_one", hits / static_cast<double>(reps)}};
  }
  emit(cfg, out, report);
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto checks = run_suite(cfg.suite);
  json list = json::array();
  bool all = true;
  for (const CheckResult& c : checks) {
    all = all && c.pass;
    list.push_back({{"suite", c.suite}, {"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
  }
  emit(cfg, out,
       {{"schema_version", kReportSchemaVersion},
        {"command", "verify"},
        {"suite", cfg.suite},
        {"pass", all},
        {"checks", list}});
  return all ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Monochromatic subgraph counts under random colourings"};
  app.require_subcommand(1);

  auto host_flags = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "edge-list file");
    sub->add_option("--gen", cfg.generator, "generator: complete:n, bipartite:a,b, tripartite:a,b,c, gnp:n,p,seed, pyramid:n, k1nn:n");
    sub->add_option("--pattern", cfg.pattern, "K<s>, C<k>, P<k>, K<a>,<b>, star<k> or an edge list like 0-1,1-2");
  };
  auto* count = app.add_subcommand("count", "count copies and densities of a pattern");
  host_flags(count);
  count->add_option("--out", cfg.out_path, "write the JSON report here");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo draws of the monochromatic count");
  host_flags(simulate);
  simulate->add_option("--colors", cfg.colors, "colour count")->check(CLI::PositiveNumber);
  simulate->add_option("--reps", cfg.reps, "repetitions")->required();
  simulate->add_option("--seed", cfg.seed, "master seed");
  simulate->add_option("--out", cfg.out_path, "CSV file for the draws (metadata goes to FILE.json)");

  auto* limit = app.add_subcommand("limit", "limit law for the monochromatic count");
  host_flags(limit);
  limit->add_option("--graphon", cfg.graphon_path, "step graphon JSON file");
  limit->add_option("--regime", cfg.regime, "poisson, normal, chisq or auto");
  limit->add_option("--colors", cfg.colors, "colour count")->check(CLI::PositiveNumber);
  limit->add_option("--lambda", cfg.lambda, "limiting mean for the Poisson mixture");
  limit->add_option("--reps", cfg.reps, "Monte Carlo draws for a goodness-of-fit block");
  limit->add_option("--seed", cfg.seed, "master seed");
  limit->add_option("--out", cfg.out_path, "write the JSON report here");

  auto* birthday = app.add_subcommand("birthday", "group size for a monochromatic K_s");
  birthday->add_option("--clique", cfg.clique, "clique size s");
  birthday->add_option("--colors", cfg.colors, "colour count")->check(CLI::PositiveNumber);
  birthday->add_option("--prob", cfg.prob, "target probability");
  birthday->add_option("--density", cfg.density, "t(K_s,W); 1 for complete hosts");
  birthday->add_option("--reps", cfg.reps, "Monte Carlo repetitions (default 10000)");
  birthday->add_option("--seed", cfg.seed, "master seed");
  birthday->add_option("--out", cfg.out_path, "write the JSON report here");

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", cfg.suite, "graph, graphon, trace, spectrum, moments, regimes, stats or all");
  verify->add_option("--out", cfg.out_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (limit->parsed()) return cmd_limit(cfg, out);
    if (birthday->parsed()) return cmd_birthday(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateConfiguration& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mono
