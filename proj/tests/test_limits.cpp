#include <doctest.h>

#include <random>

#include "monochrome/counting.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/io.hpp"
#include "monochrome/limits.hpp"
#include "monochrome/stats.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

Eigen::MatrixXd scaled_two_point_oracle(const Pattern& h, const HostGraph& g) {
  const std::size_t n = g.size();
  const double scale =
      1.0 / (2.0 * static_cast<double>(h.automorphisms()) * std::pow(static_cast<double>(n), h.order() - 1));
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      std::uint64_t sum = 0;
      for (int u = 0; u < h.order(); ++u) {
        for (int v = 0; v < h.order(); ++v) {
          if (u != v) sum += oracle::two_point(h.graph(), u, v, i, j, g);
        }
      }
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(sum) * scale;
    }
  }
  return b;
}

// P(no colour used s or more times) tracked through the number of colours
// used exactly 0..s-1 times, one vertex at a time.
double collision_oracle(std::size_t n, int c, int s) {
  std::vector<int> start(static_cast<std::size_t>(s), 0);
  start[0] = c;
  std::map<std::vector<int>, double> states{{start, 1.0}};
  for (std::size_t step = 0; step < n; ++step) {
    std::map<std::vector<int>, double> next;
    for (const auto& [state, p] : states) {
      for (int k = 0; k < s; ++k) {
        if (state[k] == 0) continue;
        const double move = p * state[k] / c;
        if (k + 1 == s) continue;
        std::vector<int> t = state;
        --t[k];
        ++t[k + 1];
        next[t] += move;
      }
    }
    states = std::move(next);
  }
  double ok = 0;
  for (const auto& [state, p] : states) ok += p;
  return 1 - ok;
}

std::vector<double> convolve_mixture(const PoissonMixture& m, std::size_t cap) {
  std::vector<double> out(cap + 1, 0);
  out[0] = 1;
  for (const auto& comp : m.components) {
    const auto pois = poisson_pmf(comp.rate, cap);
    std::vector<double> next(cap + 1, 0);
    for (std::size_t a = 0; a <= cap; ++a) {
      for (std::size_t k = 0; a + k * comp.multiplicity <= cap; ++k) next[a + k * comp.multiplicity] += out[a] * pois[k];
    }
    out = next;
  }
  return out;
}

StepGraphon three_blocks() {
  Eigen::VectorXd sizes(3);
  sizes << 0.2, 0.3, 0.5;
  Eigen::MatrixXd values(3, 3);
  values << 0.9, 0.1, 0.6, 0.1, 0.3, 0.8, 0.6, 0.8, 0.2;
  return StepGraphon(sizes, values);
}

}  // namespace

TEST_CASE("Poisson mixture parameters") {
  for (const char* spec : {"K2", "K3", "K4"}) {
    const PoissonMixture m = poisson_mixture_params(parse_pattern(spec), three_blocks(), 1.7);
    REQUIRE(m.components.size() == 1);
    CHECK(m.components[0].multiplicity == 1);
    CHECK(m.components[0].rate == doctest::Approx(1.7));
  }

  const PoissonMixture one = poisson_mixture_params(parse_pattern("K1,2"), StepGraphon::constant(1), 2);
  REQUIRE(one.components.size() == 2);
  CHECK(one.components[0].multiplicity == 1);
  CHECK(one.components[0].rate == 0.0);
  CHECK(one.components[1].multiplicity == 3);
  CHECK(one.components[1].rate == doctest::Approx(2.0 / 3));

  const double p = 0.3;
  const PoissonMixture er = poisson_mixture_params(parse_pattern("K1,2"), StepGraphon::constant(p), 2);
  CHECK(er.components[0].rate == doctest::Approx(2 * (1 - p)));
  CHECK(er.components[1].rate == doctest::Approx(2 * p / 3));

  CHECK_THROWS_AS(poisson_mixture_params(parse_pattern("K3"), StepGraphon::bipartite(), 1), DegenerateConfiguration);
}

TEST_CASE("Poisson mixture mean equals lambda") {
  std::vector<StepGraphon> ws{StepGraphon::constant(0.4), StepGraphon::constant(1), three_blocks(),
                              StepGraphon::bipartite()};
  for (const char* spec : {"K2", "K1,2", "P4", "C4", "K3"}) {
    for (const StepGraphon& w : ws) {
      const Pattern h = parse_pattern(spec);
      if (density_W(h.graph(), w) == 0) continue;
      CHECK(poisson_mixture_params(h, w, 2.5).mean() == doctest::Approx(2.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("finite-n Poisson mixture") {
  const int c = 40;
  const PoissonMixture m = poisson_mixture_from_host(parse_pattern("K1,2"), complete_graph(20), c);
  REQUIRE(m.components.size() == 2);
  CHECK(m.components[0].rate == 0.0);
  CHECK(m.components[1].rate == doctest::Approx(1140.0 / (c * c)));
  const HostGraph g = gnp(25, 0.4, 5);
  const Pattern star = parse_pattern("K1,2");
  CHECK(poisson_mixture_from_host(star, g, 7).mean() == doctest::Approx(exact_mean(star, g, 7)));
}

TEST_CASE("mixture pmf tables") {
  const auto single = mixture_pmf(PoissonMixture{{{1, 2.0, ""}}}, 40);
  const auto pois = poisson_pmf(2.0, 40);
  for (std::size_t k = 0; k <= 40; ++k) CHECK(single.pmf[k] == doctest::Approx(pois[k]).epsilon(1e-12));

  const auto lattice = mixture_pmf(PoissonMixture{{{3, 1.5, ""}}}, 30);
  for (std::size_t k = 0; k <= 30; ++k) {
    if (k % 3 != 0) CHECK(lattice.pmf[k] == 0.0);
  }

  const PoissonMixture mix{{{1, 0.7, ""}, {3, 1.1, ""}, {2, 0.4, ""}}};
  for (std::size_t cap : {5, 20, 60}) {
    const auto t = mixture_pmf(mix, cap);
    double total = t.tail;
    for (double x : t.pmf) total += x;
    CHECK(std::abs(total - 1) < 1e-12);
    const auto want = convolve_mixture(mix, cap);
    for (std::size_t k = 0; k <= cap; ++k) CHECK(std::abs(t.pmf[k] - want[k]) < 1e-14);
  }
}

TEST_CASE("sampling Poisson mixtures") {
  Rng rng = stream_rng(3, 0);
  for (int r = 0; r < 50; ++r) CHECK(sample_poisson_mixture(PoissonMixture{{{1, 0.0, ""}, {3, 0.0, ""}}}, rng) == 0);

  const std::size_t draws = 100000;
  std::vector<double> x;
  for (std::size_t r = 0; r < draws; ++r) x.push_back(static_cast<double>(sample_poisson_mixture(PoissonMixture{{{1, 2.0, ""}}}, rng)));
  CHECK(tv_lattice(empirical_pmf(x), poisson_pmf(2.0, 40)) < 0.01);

  const PoissonMixture mix{{{1, 0.5, ""}, {3, 0.8, ""}}};
  double sum = 0;
  for (std::size_t r = 0; r < draws; ++r) sum += static_cast<double>(sample_poisson_mixture(mix, rng));
  CHECK(std::abs(sum / draws - mix.mean()) < 3 * std::sqrt(mix.variance() / draws));
}

TEST_CASE("Stein bound terms") {
  const auto [first, second] = stein_bound_terms(2, 100, 100);
  CHECK(first + second == doctest::Approx(0.2));
  for (std::size_t n : {100, 1000, 100000}) CHECK(stein_bound_terms(2, n, 4).second == doctest::Approx(0.5));
  for (int v : {2, 3}) {
    for (std::size_t n : {50, 500}) {
      const int c = static_cast<int>(std::pow(static_cast<double>(n), static_cast<double>(v) / (v - 1)));
      CHECK(stein_bound_terms(v, n, c).first == doctest::Approx(1).epsilon(0.05));
    }
  }
  for (int c : {2, 10, 50}) {
    const double rhs = stein_bound_rhs(parse_pattern("K2"), complete_graph(80), c);
    CHECK(rhs == doctest::Approx(std::sqrt(c / 6400.0) + std::sqrt(1.0 / c)));
  }
}

TEST_CASE("Gaussian limit and standardisation") {
  const Pattern k2 = parse_pattern("K2");
  const HostGraph g = complete_graph(40);
  const GaussianLimit lim = gaussian_limit(k2, g, 8);
  const MomentReport exact = exact_variance(k2, g, 8);
  CHECK(lim.mean == doctest::Approx(exact.mean));
  CHECK(lim.sd == doctest::Approx(std::sqrt(exact.variance)));

  SampleSet flat;
  flat.values.assign(10, 3.0);
  for (double z : standardize(flat, 3.0, 2.0).values) CHECK(z == 0.0);
  CHECK_THROWS_AS(standardize(flat, 3.0, 0.0), DegenerateConfiguration);

  const std::size_t reps = 20000;
  const SampleSet z = standardize(run_monte_carlo(k2, g, 8, reps, 4), lim.mean, lim.sd);
  const auto m = empirical_moments(z.values, 4);
  CHECK(std::abs(m[0]) < 3 / std::sqrt(static_cast<double>(reps)));
  CHECK(std::abs(m[1] - 1) < 3 * std::sqrt((m[3] - 1) / reps));
}

TEST_CASE("scaled two-point matrix") {
  const HostGraph g = gnp(12, 0.5, 3);
  const Eigen::MatrixXd k2 = scaled_two_point_matrix(parse_pattern("K2"), g).values;
  for (Vertex i = 0; i < 12; ++i) {
    for (Vertex j = 0; j < 12; ++j) CHECK(k2(i, j) == doctest::Approx(g.adjacent(i, j) ? 1.0 / 24 : 0.0));
  }
  for (const char* spec : {"K1,2", "K3", "P4"}) {
    const Pattern h = parse_pattern(spec);
    const Eigen::MatrixXd b = scaled_two_point_matrix(h, g).values;
    CHECK((b - scaled_two_point_oracle(h, g)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((b - b.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(b.diagonal().cwiseAbs().maxCoeff() == 0.0);
    CHECK(serial::scaled_two_point_matrix(h, g).values == b);
  }
  const auto eig = finite_n_spectrum(scaled_two_point_matrix(parse_pattern("K2"), complete_graph(3)));
  REQUIRE(eig.size() == 3);
  CHECK(eig[0] == doctest::Approx(1.0 / 3));
  CHECK(eig[1] == doctest::Approx(-1.0 / 6));
  CHECK(eig[2] == doctest::Approx(-1.0 / 6));
}

TEST_CASE("finite-n spectra") {
  for (std::size_t n : {10, 50, 120}) {
    const auto eig = finite_n_spectrum(scaled_two_point_matrix(parse_pattern("K2"), complete_graph(n)));
    CHECK(eig[0] == doctest::Approx((n - 1.0) / (2.0 * n)));
    double trace = 0;
    for (double x : eig) trace += x;
    CHECK(std::abs(trace) < 1e-12);
  }
  const auto star = finite_n_spectrum(scaled_two_point_matrix(parse_pattern("K1,2"), complete_bipartite(100, 100)), 2);
  REQUIRE(star.size() == 2);
  CHECK(std::abs(star[0] - 0.375) < 0.01);
  CHECK(std::abs(star[1] + 0.125) < 0.01);
  CHECK_THROWS_AS(finite_n_spectrum(scaled_two_point_matrix(parse_pattern("K2"), complete_graph(30)), 0, 20),
                  BudgetExceeded);
}

TEST_CASE("trace identities") {
  const TraceIdentityReport k3 = trace_identity_check(parse_pattern("K2"), complete_graph(3), 2);
  CHECK(k3.pass);
  CHECK(k3.trace_direct == doctest::Approx(1.0 / 6));
  CHECK(k3.chain_sum == doctest::Approx(1.0 / 6));
  CHECK(k3.trace_spectral == doctest::Approx(1.0 / 6));

  CHECK(trace_identity_check(parse_pattern("K2"), complete_graph(4), 3).relative_error < 1e-12);
  const HostGraph p4 = HostGraph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(trace_identity_check(parse_pattern("K1,2"), p4, 2).relative_error < 1e-12);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const HostGraph g = gnp(9, 0.6, seed);
    for (const char* spec : {"K2", "K1,2", "K3"}) {
      for (int power = 2; power <= 3; ++power) {
        const auto r = trace_identity_check(parse_pattern(spec), g, power);
        CHECK(r.relative_error < 1e-12);
        CHECK(std::abs(r.trace_spectral - r.trace_direct) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(trace_identity_check(parse_pattern("K2"), complete_graph(13), 2), InputError);
}

TEST_CASE("chi-squared mixtures") {
  const std::vector<double> one{1.0};
  const ChiSqMixture unit = chisq_limit(one, 2, 2);
  CHECK(unit.mean() == 0.0);
  CHECK(unit.variance() == doctest::Approx(0.5));

  const auto constant = kernel_eigenvalues(kernel_WH(parse_pattern("K3"), StepGraphon::constant(0.5)));
  const ChiSqMixture k3 = chisq_limit(constant, 3, 3);
  REQUIRE(k3.eigenvalues.size() == 1);
  CHECK(k3.eigenvalues[0] == doctest::Approx(0.5 * 0.125));
  CHECK(k3.scale == doctest::Approx(1.0 / 9));

  const auto star_eigs = kernel_eigenvalues(kernel_WH(parse_pattern("K1,2"), StepGraphon::bipartite()));
  const int c = 4;
  const ChiSqMixture star = chisq_limit(star_eigs, c, 3);
  CHECK(star.scale * star.eigenvalues[0] == doctest::Approx(3.0 / (8 * c * c)));
  CHECK(star.scale * star.eigenvalues[1] == doctest::Approx(-1.0 / (8 * c * c)));
  CHECK(star.variance() == doctest::Approx(std::pow(c, -4.0) * 2 * (c - 1) * (9.0 / 64 + 1.0 / 64)));

  const std::vector<double> tiny{1.0, 1e-12};
  CHECK(chisq_limit(tiny, 3, 2).eigenvalues.size() == 1);
  const std::vector<double> zeros{0.0};
  CHECK_THROWS_AS(chisq_limit(zeros, 3, 2), DegenerateConfiguration);

  Rng rng = stream_rng(1, 0);
  const std::size_t draws = 100000;
  std::vector<double> x;
  for (std::size_t r = 0; r < draws; ++r) x.push_back(star.sample(rng));
  const auto m = empirical_moments(x, 4);
  CHECK(std::abs(m[0]) < 4 * std::sqrt(star.variance() / draws));
  CHECK(std::abs(m[1] - star.variance()) < 4 * std::sqrt((m[3] - m[1] * m[1]) / draws));
}

TEST_CASE("gamma statistic") {
  SampleSet s;
  s.values = {10, 12, 8};
  const auto g = gamma_statistic(s, 10, 4, 2);
  CHECK(g == std::vector<double>{0, 0.5, -0.5});
}

TEST_CASE("birthday sample sizes") {
  const BirthdayEstimate three = birthday_sample_size(3, 365, 0.5, 1);
  CHECK(std::abs(three.value - 82.1) < 0.05);
  CHECK(three.ceiling == 83);
  const BirthdayEstimate two = birthday_sample_size(2, 365, 0.5, 1);
  CHECK(std::abs(two.value - 22.5) < 0.05);
  CHECK(two.ceiling == 23);
  double last = 1e9;
  for (double p : {0.5, 0.1, 1e-2, 1e-4, 1e-8}) {
    const double v = birthday_sample_size(3, 365, p, 1).value;
    CHECK(v < last);
    last = v;
  }
  CHECK(last < 1);
  CHECK_THROWS_AS(birthday_sample_size(3, 365, 0.5, 0), DegenerateConfiguration);
}

TEST_CASE("collision probabilities") {
  CHECK(std::abs(collision_probability(23, 365, 2) - 0.507297) < 1e-6);
  CHECK(std::abs(collision_probability(22, 365, 2) - 0.475695) < 1e-6);
  for (std::size_t n : {5, 40, 83, 120}) {
    for (int s : {2, 3, 4}) CHECK(std::abs(collision_probability(n, 365, s) - collision_oracle(n, 365, s)) < 1e-12);
  }
  for (std::size_t n : {3, 6, 9}) CHECK(std::abs(collision_probability(n, 4, 3) - collision_oracle(n, 4, 3)) < 1e-14);
  CHECK(collision_probability(9, 4, 3) == doctest::Approx(1.0));
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(parse_pattern("K3"), complete_graph(50), 99).regime == Regime::poisson);
  CHECK(classify_regime(parse_pattern("K2"), complete_graph(500), 50).regime == Regime::gaussian);
  CHECK(classify_regime(parse_pattern("K2"), complete_graph(100), 3).regime == Regime::chisq_fixed_c);
  CHECK(classify_regime(parse_pattern("K3"), complete_bipartite(20, 20), 7).regime == Regime::degenerate);
  CHECK(classify_regime(parse_pattern("K3"), complete_graph(20), 1).regime == Regime::degenerate);
  CHECK(classify_regime(parse_pattern("K3"), pyramid_plus_bipartite(60), 60).regime == Regime::degenerate);
  CHECK(classify_regime(parse_pattern("K3"), k1nn(60), 60).regime == Regime::degenerate);

  const auto through = copies_through_vertex(parse_pattern("K3"), complete_graph(6));
  for (auto x : through) CHECK(x == 10);
}
