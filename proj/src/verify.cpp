#include "monochrome/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <unordered_set>

#include "monochrome/coloring.hpp"
#include "monochrome/constructions.hpp"
#include "monochrome/counting.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/graphon.hpp"
#include "monochrome/io.hpp"
#include "monochrome/limits.hpp"
#include "monochrome/stats.hpp"

namespace mono {

namespace {

using Checks = std::vector<CheckResult>;

void record(Checks& out, const std::string& suite, const std::string& name, double value, double threshold) {
  out.push_back({suite, name, value, threshold, value <= threshold});
}

double rel_error(double x, double ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); }

// All isomorphism classes of graphs on v vertices.
std::vector<SmallGraph> all_graph_classes(int v) {
  std::vector<Edge> pairs;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) pairs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<SmallGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    SmallGraph g(v);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) g.add_edge(static_cast<int>(pairs[e].u), static_cast<int>(pairs[e].v));
    }
    if (seen.insert(canonical_code(g)).second) out.push_back(g);
  }
  return out;
}

// Injective edge-preserving tuples counted by plain enumeration.
std::uint64_t tuple_oracle(const SmallGraph& f, const HostGraph& g) {
  const int v = f.order();
  std::vector<Vertex> image(static_cast<std::size_t>(v));
  std::function<std::uint64_t(int)> go = [&](int d) -> std::uint64_t {
    if (d == v) {
      for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b) {
          if (f.adjacent(a, b) && !g.adjacent(image[a], image[b])) return 0;
        }
      }
      return 1;
    }
    std::uint64_t total = 0;
    for (Vertex x = 0; x < g.size(); ++x) {
      if (std::find(image.begin(), image.begin() + d, x) != image.begin() + d) continue;
      image[d] = x;
      total += go(d + 1);
    }
    return total;
  };
  return go(0);
}

std::vector<Pattern> small_patterns() {
  std::vector<Pattern> out;
  for (const char* spec : {"K2", "K1,2", "K3", "P4", "C4", "star3"}) out.push_back(parse_pattern(spec));
  return out;
}

Checks graph_suite() {
  Checks out;
  const std::string s = "graph";
  record(out, s, "aut K3 = 6", std::abs(double(parse_pattern("K3").automorphisms()) - 6), 0);
  record(out, s, "aut K1,2 = 2", std::abs(double(parse_pattern("K1,2").automorphisms()) - 2), 0);
  record(out, s, "aut C4 = 8", std::abs(double(parse_pattern("C4").automorphisms()) - 8), 0);

  double remainder = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const HostGraph g = gnp(10, 0.5, seed);
    for (const Pattern& h : small_patterns()) {
      remainder += static_cast<double>(count_injective_homs(h.graph(), g) % h.automorphisms());
    }
  }
  record(out, s, "copy counts are integral", remainder, 0);

  for (int v = 2; v <= 4; ++v) {
    const HostGraph g = gnp(9, 0.45, 17 + v);
    double total = 0;
    for (const SmallGraph& f : all_graph_classes(v)) {
      total += std::tgamma(v + 1.0) / static_cast<double>(automorphism_count(f)) * induced_density(f, g);
    }
    record(out, s, "induced densities sum to 1, v=" + std::to_string(v), std::abs(total - 1), 1e-12);
  }

  double mismatch = 0;
  for (std::uint64_t seed = 3; seed <= 6; ++seed) {
    const HostGraph g = gnp(8, 0.5, seed);
    for (const Pattern& h : small_patterns()) {
      mismatch += std::abs(static_cast<double>(count_injective_homs(h.graph(), g)) -
                           static_cast<double>(tuple_oracle(h.graph(), g)));
    }
  }
  record(out, s, "injective homs match exhaustive tuples", mismatch, 0);

  double asym = 0;
  const HostGraph g = gnp(8, 0.6, 11);
  for (const char* spec : {"K1,2", "P4", "K3"}) {
    const Pattern h = parse_pattern(spec);
    for (int u = 0; u < h.order(); ++u) {
      for (int v = 0; v < h.order(); ++v) {
        if (u == v) continue;
        for (Vertex i = 0; i < g.size(); ++i) {
          for (Vertex j = 0; j < g.size(); ++j) {
            asym += std::abs(static_cast<double>(two_point_count(h, v, u, i, j, g)) -
                             static_cast<double>(two_point_count(h, u, v, j, i, g)));
          }
        }
      }
    }
  }
  record(out, s, "two-point counts swap symmetrically", asym, 0);

  double differ = 0;
  for (const char* spec : {"K1,2", "K3", "P4", "C4", "star3", "0-1,1-2,2-3,3-4,1-3"}) {
    const Pattern h = parse_pattern(spec);
    for (int a = 0; a < h.order(); ++a) {
      for (int b = 0; b < h.order(); ++b) {
        if (a == b) continue;
        const PivotList j{{{a, b}, {b, a}}};
        differ += canonical_code(cycle_of_pattern(h, j)) != canonical_code(join_graph(h, a, b));
      }
    }
  }
  record(out, s, "2-cycles are isomorphic to joins", differ, 0);
  return out;
}

StepGraphon three_block_graphon() {
  Eigen::Vector3d sizes(0.2, 0.3, 0.5);
  Eigen::Matrix3d values;
  values << 0.9, 0.2, 0.5, 0.2, 0.1, 0.7, 0.5, 0.7, 0.4;
  return StepGraphon(sizes, values);
}

Checks graphon_suite() {
  Checks out;
  const std::string s = "graphon";
  const double p = 0.7;
  for (const char* spec : {"K2", "K3", "K1,2", "C4", "K4", "P4", "C5"}) {
    const Pattern h = parse_pattern(spec);
    const auto eig = kernel_eigenvalues(kernel_WH(h, StepGraphon::constant(p)));
    const double v = h.order();
    const double expected = v * (v - 1) / 2 / static_cast<double>(h.automorphisms()) *
                            std::pow(p, static_cast<double>(h.edge_count()));
    const double err = eig.size() == 1 ? std::abs(eig[0] - expected) : 1.0;
    record(out, s, std::string("constant graphon single eigenvalue, H=") + spec, err, 1e-12);
  }

  const std::vector<std::pair<std::string, StepGraphon>> graphons = {
      {"bipartite", StepGraphon::bipartite()},
      {"tripartite", StepGraphon::multipartite(3)},
      {"three-block", three_block_graphon()}};
  for (const char* spec : {"K2", "K1,2", "K3"}) {
    const Pattern h = parse_pattern(spec);
    for (const auto& [label, w] : graphons) {
      const auto eig = kernel_eigenvalues(kernel_WH(h, w));
      for (int gpow = 2; gpow <= 3; ++gpow) {
        double lhs = 0;
        for (double x : eig) lhs += std::pow(x, gpow);
        double rhs = 0;
        for (const PivotList& j : all_pivot_lists(h.order(), gpow)) rhs += density_W(cycle_multigraph(h, j), w);
        rhs *= std::pow(1.0 / (2.0 * static_cast<double>(h.automorphisms())), gpow);
        record(out, s, "power sum g=" + std::to_string(gpow) + ", H=" + spec + ", W=" + label, std::abs(lhs - rhs),
               1e-9);
      }
      const double bound = h.order() * h.order() / (2.0 * static_cast<double>(h.automorphisms()));
      record(out, s, std::string("W_H bounded, H=") + spec + ", W=" + label,
             std::max(0.0, kernel_WH(h, w).values.maxCoeff() - bound), 0);
    }
  }

  const HostGraph g = gnp(7, 0.5, 5);
  const StepGraphon fg = StepGraphon::from_graph(g);
  for (const char* spec : {"K2", "K3", "K1,2", "C4"}) {
    const Pattern h = parse_pattern(spec);
    record(out, s, std::string("t(F,f^G) = t(F,G), F=") + spec,
           std::abs(density_W(h.graph(), fg) - homomorphism_density(h.graph(), g)), 1e-12);
  }

  const auto star = kernel_eigenvalues(kernel_WH(parse_pattern("K1,2"), StepGraphon::bipartite()));
  const double err = star.size() == 2 ? std::max(std::abs(star[0] - 0.375), std::abs(star[1] + 0.125)) : 1.0;
  record(out, s, "K1,2 on bipartite graphon: eigenvalues 3/8, -1/8", err, 1e-10);
  return out;
}

Checks trace_suite() {
  Checks out;
  const std::string s = "trace";
  auto run = [&](const std::string& spec, const HostGraph& g, const std::string& host, int power) {
    const TraceIdentityReport r = trace_identity_check(parse_pattern(spec), g, power);
    record(out, s, "H=" + spec + ", G=" + host + ", g=" + std::to_string(power), r.pass ? r.relative_error : 1.0,
           1e-12);
  };
  for (std::size_t n = 3; n <= 6; ++n) {
    for (int power = 2; power <= 3; ++power) run("K2", complete_graph(n), "K" + std::to_string(n), power);
  }
  run("K1,2", to_host(parse_pattern("P4").graph()), "P4", 2);
  run("K1,2", gnp(8, 0.5, 2), "G(8,1/2)", 3);
  run("K3", complete_graph(5), "K5", 2);
  run("K3", gnp(9, 0.6, 4), "G(9,0.6)", 2);
  return out;
}

double top3_error(const std::vector<double>& finite, std::vector<double> limit) {
  limit.resize(3, 0.0);
  std::sort(limit.begin(), limit.end(), std::greater<>());
  double err = 0;
  for (std::size_t k = 0; k < 3; ++k) err = std::max(err, std::abs(finite[k] - limit[k]));
  return err;
}

Checks spectrum_suite() {
  Checks out;
  const std::string s = "spectrum";
  struct Case {
    std::string pattern;
    HostGraph host;
    StepGraphon limit;
    std::string label;
  };
  const std::vector<Case> cases = {
      {"K2", complete_graph(300), StepGraphon::constant(1), "K2 on K300"},
      {"K1,2", complete_bipartite(150, 150), StepGraphon::bipartite(), "K1,2 on K150,150"},
      {"K3", complete_tripartite(100, 100, 100), StepGraphon::multipartite(3), "K3 on K100,100,100"}};
  for (const Case& c : cases) {
    const Pattern h = parse_pattern(c.pattern);
    const auto finite = finite_n_spectrum(scaled_two_point_matrix(h, c.host), 3);
    const auto limit = kernel_eigenvalues(kernel_WH(h, c.limit));
    record(out, s, "top-3 eigenvalues near the graphon, " + c.label, top3_error(finite, limit), 0.02);
  }
  const ScaledTwoPointMatrix b = scaled_two_point_matrix(parse_pattern("K2"), complete_graph(3));
  const auto eig = finite_n_spectrum(b);
  record(out, s, "K2 on K3 spectrum {1/3,-1/6,-1/6}",
         std::max({std::abs(eig[0] - 1.0 / 3), std::abs(eig[1] + 1.0 / 6), std::abs(eig[2] + 1.0 / 6)}), 1e-12);
  return out;
}

Checks moments_suite() {
  Checks out;
  const std::string s = "moments";
  const std::vector<std::pair<std::string, HostGraph>> hosts = {
      {"K3", complete_graph(3)},           {"K4", complete_graph(4)},
      {"K2,3", complete_bipartite(2, 3)},  {"P5", to_host(parse_pattern("P5").graph())},
      {"G(7,1/2)", gnp(7, 0.5, 9)},        {"G(8,0.6)", gnp(8, 0.6, 21)}};
  for (const auto& [label, g] : hosts) {
    for (const char* spec : {"K2", "K1,2", "K3"}) {
      const Pattern h = parse_pattern(spec);
      for (int c = 1; c <= 3; ++c) {
        // Exhaustive enumeration of all c^n colourings.
        Coloring col{c, std::vector<std::uint32_t>(g.size(), 0)};
        long double sum = 0;
        long double sq = 0;
        long double count = 0;
        while (true) {
          const auto t = static_cast<long double>(serial::monochromatic_count(h, g, col));
          sum += t;
          sq += t * t;
          count += 1;
          std::size_t pos = 0;
          while (pos < col.colors.size() && ++col.colors[pos] == static_cast<std::uint32_t>(c)) col.colors[pos++] = 0;
          if (pos == col.colors.size()) break;
        }
        const double mean = static_cast<double>(sum / count);
        const double var = static_cast<double>(sq / count - (sum / count) * (sum / count));
        const MomentReport m = exact_variance(h, g, c);
        const std::string tag = std::string("H=") + spec + ", G=" + label + ", c=" + std::to_string(c);
        record(out, s, "mean " + tag, rel_error(m.mean, mean), 1e-12);
        record(out, s, "variance " + tag, rel_error(m.variance, var), 1e-12);
        double pairs = 0;
        for (const auto& [k, p] : m.pair_profile) pairs += p;
        const double n2 = static_cast<double>(m.copy_count) * static_cast<double>(m.copy_count);
        record(out, s, "pair profile sums to N^2, " + tag, std::abs(pairs - n2), 0);
      }
    }
  }

  const Pattern k3 = parse_pattern("K3");
  const HostGraph g = complete_graph(20);
  const SampleSet a = run_monte_carlo(k3, g, 4, 200, 7);
  const SampleSet b = serial::run_monte_carlo(k3, g, 4, 200, 7);
  double diff = 0;
  for (std::size_t r = 0; r < a.values.size(); ++r) diff += std::abs(a.values[r] - b.values[r]);
  record(out, s, "parallel and serial Monte Carlo agree", diff, 0);

  for (const char* spec : {"K2", "K3", "K4"}) {
    const PoissonMixture mix = poisson_mixture_params(parse_pattern(spec), StepGraphon::constant(1), 2.5);
    record(out, s, std::string("mixture mean equals lambda, H=") + spec, std::abs(mix.mean() - 2.5), 1e-12);
  }
  const PoissonMixture star = poisson_mixture_params(parse_pattern("K1,2"), StepGraphon::constant(0.3), 2.5);
  record(out, s, "mixture mean equals lambda, H=K1,2, W=0.3", std::abs(star.mean() - 2.5), 1e-12);
  return out;
}

Checks regimes_suite() {
  Checks out;
  const std::string s = "regimes";
  auto expect = [&](const std::string& spec, const HostGraph& g, int c, Regime want, const std::string& label) {
    const RegimeReport r = classify_regime(parse_pattern(spec), g, c);
    record(out, s, label + " -> " + to_string(want), r.regime == want ? 0.0 : 1.0, 0);
  };
  expect("K3", complete_graph(50), 99, Regime::poisson, "K3 on K50, c=99");
  expect("K2", complete_graph(500), 50, Regime::gaussian, "K2 on K500, c=50");
  expect("K2", complete_graph(100), 2, Regime::chisq_fixed_c, "K2 on K100, c=2");
  expect("K3", complete_bipartite(20, 20), 5, Regime::degenerate, "K3 on K20,20");
  expect("K3", pyramid_plus_bipartite(30), 4, Regime::degenerate, "K3 on pyramid + K30,30");
  expect("K3", k1nn(30), 30, Regime::degenerate, "K3 on K1,30,30");
  return out;
}

Checks stats_suite() {
  Checks out;
  const std::string s = "stats";
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal;
  double worst = 0;
  double range = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(200);
    std::vector<double> b(200);
    std::vector<double> c(200);
    for (auto& x : a) x = normal(rng);
    for (auto& x : b) x = normal(rng) + 0.3;
    for (auto& x : c) x = 2 * normal(rng);
    const double ab = wasserstein1_empirical(a, b);
    const double bc = wasserstein1_empirical(b, c);
    const double ac = wasserstein1_empirical(a, c);
    worst = std::max(worst, ac - ab - bc);
    const double ks = ks_statistic(a, c);
    range = std::max({range, -ks, ks - 1});
  }
  record(out, s, "Wasserstein triangle inequality", std::max(0.0, worst), 1e-12);
  record(out, s, "KS statistic within [0,1]", std::max(0.0, range), 0);
  const std::vector<double> p{0.2, 0.5, 0.3};
  const std::vector<double> q{0.0, 0.0, 0.0, 1.0};
  const double tv = tv_lattice(p, q);
  record(out, s, "TV within [0,1]", std::max({0.0, -tv, tv - 1}), 0);

  Eigen::MatrixXd m = Eigen::MatrixXd::Random(30, 30);
  m = 0.5 * (m + m.transpose()).eval();
  const auto eig = symmetric_eigenvalues(m).values;
  double tr = 0;
  double fro = 0;
  for (double x : eig) {
    tr += x;
    fro += x * x;
  }
  record(out, s, "eigenvalues sum to the trace", std::abs(tr - m.trace()), 1e-9);
  record(out, s, "squared eigenvalues sum to the Frobenius norm", std::abs(fro - m.squaredNorm()), 1e-9);
  return out;
}

const std::map<std::string, std::function<Checks()>>& suites() {
  static const std::map<std::string, std::function<Checks()>> table = {
      {"graph", graph_suite},     {"graphon", graphon_suite}, {"trace", trace_suite},
      {"spectrum", spectrum_suite}, {"moments", moments_suite}, {"regimes", regimes_suite},
      {"stats", stats_suite}};
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  out.push_back("all");
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  if (suite == "all") {
    Checks out;
    for (const auto& [name, fn] : suites()) {
      const Checks part = fn();
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto it = suites().find(suite);
  if (it == suites().end()) throw InputError("unknown suite '" + suite + "'");
  return it->second();
}

}  // namespace mono
