#include "monochrome/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "monochrome/constructions.hpp"
#include "monochrome/counting.hpp"
#include "monochrome/embedding.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/stats.hpp"

namespace mono {

namespace {

__extension__ typedef unsigned __int128 u128;

std::string edge_label(const SmallGraph& f) {
  std::string out;
  for (const Edge& e : f.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

std::vector<std::pair<int, int>> ordered_pairs(int v) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

double two_point_scale(const Pattern& pattern, std::size_t n) {
  return 1.0 / (2.0 * static_cast<double>(pattern.automorphisms()) *
                std::pow(static_cast<double>(n), pattern.order() - 1));
}

void check_two_point_input(const Pattern& pattern, const HostGraph& g) {
  if (g.size() < static_cast<std::size_t>(pattern.order())) {
    throw InputError("the host graph has fewer vertices than the pattern");
  }
}

}  // namespace

double PoissonMixture::mean() const {
  double sum = 0;
  for (const auto& c : components) sum += static_cast<double>(c.multiplicity) * c.rate;
  return sum;
}

double PoissonMixture::variance() const {
  double sum = 0;
  for (const auto& c : components) {
    const double m = static_cast<double>(c.multiplicity);
    sum += m * m * c.rate;
  }
  return sum;
}

PoissonMixture poisson_mixture_params(const Pattern& pattern, const StepGraphon& w, double lambda) {
  if (!(lambda > 0)) throw InputError("lambda must be positive");
  const double t = density_W(pattern.graph(), w);
  if (t <= 0) {
    throw DegenerateConfiguration("t(H,W) = 0: no Poisson mixture limit (compare the K_{1,n,n} example, "
                                  "where T tends to a product of two independent Pois(1))");
  }
  PoissonMixture out;
  for (const SupergraphClass& f : supergraph_family(pattern)) {
    const double rate = lambda * static_cast<double>(pattern.automorphisms()) / static_cast<double>(f.automorphisms) *
                        induced_density_W(f.graph, w) / t;
    out.components.push_back({f.pattern_copies, rate, edge_label(f.graph)});
  }
  return out;
}

PoissonMixture poisson_mixture_from_host(const Pattern& pattern, const HostGraph& g, int c) {
  if (c < 1) throw InputError("colour count must be at least 1");
  const double q = std::pow(static_cast<double>(c), -(pattern.order() - 1));
  PoissonMixture out;
  for (const SupergraphClass& f : supergraph_family(pattern)) {
    const double subsets = static_cast<double>(count_induced_maps(f.graph, g)) / static_cast<double>(f.automorphisms);
    out.components.push_back({f.pattern_copies, subsets * q, edge_label(f.graph)});
  }
  return out;
}

std::vector<double> poisson_pmf(double rate, std::size_t support_cap) {
  std::vector<double> out(support_cap + 1, 0.0);
  if (rate == 0) {
    out[0] = 1;
    return out;
  }
  for (std::size_t k = 0; k <= support_cap; ++k) {
    out[k] = std::exp(static_cast<double>(k) * std::log(rate) - rate - std::lgamma(static_cast<double>(k) + 1));
  }
  return out;
}

MixturePmf mixture_pmf(const PoissonMixture& mixture, std::size_t support_cap) {
  std::vector<double> acc(support_cap + 1, 0.0);
  acc[0] = 1;
  for (const auto& comp : mixture.components) {
    if (comp.rate == 0) continue;
    const std::size_t m = comp.multiplicity;
    const std::vector<double> base = poisson_pmf(comp.rate, support_cap / m);
    std::vector<double> next(support_cap + 1, 0.0);
    for (std::size_t a = 0; a <= support_cap; ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t k = 0; a + k * m <= support_cap; ++k) next[a + k * m] += acc[a] * base[k];
    }
    acc = std::move(next);
  }
  MixturePmf out;
  out.tail = std::max(0.0, 1.0 - std::accumulate(acc.begin(), acc.end(), 0.0));
  out.pmf = std::move(acc);
  return out;
}

std::uint64_t sample_poisson_mixture(const PoissonMixture& mixture, Rng& rng) {
  std::uint64_t total = 0;
  for (const auto& comp : mixture.components) {
    if (comp.rate == 0) continue;
    std::poisson_distribution<std::uint64_t> draw(comp.rate);
    total += comp.multiplicity * draw(rng);
  }
  return total;
}

std::pair<double, double> stein_bound_terms(int v, std::size_t n, int c) {
  if (c < 2) throw InputError("the Wasserstein bound needs at least 2 colours");
  const double nn = static_cast<double>(n);
  const double cc = static_cast<double>(c);
  return {std::sqrt(std::pow(cc, v - 1) / std::pow(nn, v)), std::sqrt(1 / cc)};
}

double stein_bound_rhs(const Pattern& pattern, const HostGraph& g, int c) {
  const auto [a, b] = stein_bound_terms(pattern.order(), g.size(), c);
  return a + b;
}

GaussianLimit gaussian_limit(const Pattern& pattern, const HostGraph& g, int c) {
  const MomentReport moments = exact_variance(pattern, g, c);
  return {moments.mean, std::sqrt(moments.variance), stein_bound_terms(pattern.order(), g.size(), c)};
}

SampleSet standardize(const SampleSet& samples, double mean, double sd) {
  if (!(sd > 0)) {
    throw DegenerateConfiguration("standard deviation is zero; T does not fluctuate (compare the n-pyramid example)");
  }
  SampleSet out = samples;
  for (double& x : out.values) x = (x - mean) / sd;
  return out;
}

ScaledTwoPointMatrix scaled_two_point_matrix(const Pattern& pattern, const HostGraph& g) {
  check_two_point_input(pattern, g);
  const long n = static_cast<long>(g.size());
  const auto pairs = ordered_pairs(pattern.order());
  const double scale = two_point_scale(pattern, g.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
#pragma omp parallel
  {
    std::vector<EmbeddingCounter> counters;
    for (auto [u, v] : pairs) {
      const int pins[] = {u, v};
      counters.emplace_back(pattern.graph(), MapKind::injective, pins);
    }
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      for (long j = i + 1; j < n; ++j) {
        const Vertex images[] = {static_cast<Vertex>(i), static_cast<Vertex>(j)};
        std::uint64_t sum = 0;
        for (auto& counter : counters) sum += counter.count(g, images);
        const double value = static_cast<double>(sum) * scale;
        b(i, j) = value;
        b(j, i) = value;
      }
    }
  }
  return {std::move(b)};
}

std::vector<double> finite_n_spectrum(const ScaledTwoPointMatrix& b, std::size_t top_k, std::size_t max_order) {
  const auto n = static_cast<std::size_t>(b.values.rows());
  if (n > max_order) {
    throw BudgetExceeded("dense eigensolver limited to " + std::to_string(max_order) + " vertices, got " +
                         std::to_string(n));
  }
  std::vector<double> values = symmetric_eigenvalues(b.values).values;
  if (top_k == 0 || top_k >= values.size()) return values;
  std::stable_sort(values.begin(), values.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
  values.resize(top_k);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

TraceIdentityReport trace_identity_check(const Pattern& pattern, const HostGraph& g, int power) {
  if (power != 2 && power != 3) throw InputError("trace identity is checked for g = 2 or 3");
  if (g.size() > 12) throw InputError("trace identity brute force needs n <= 12");
  check_two_point_input(pattern, g);
  const int v = pattern.order();
  const std::size_t n = g.size();
  const auto pairs = ordered_pairs(v);

  // M tables per ordered pivot pair, from single pinned counts.
  std::vector<std::vector<std::uint64_t>> m(pairs.size(), std::vector<std::uint64_t>(n * n, 0));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) m[p][i * n + j] = two_point_count(pattern, pairs[p].first, pairs[p].second, i, j, g);
    }
  }

  u128 total = 0;
  std::vector<std::size_t> pivot(static_cast<std::size_t>(power), 0);
  std::vector<std::size_t> chain(static_cast<std::size_t>(power), 0);
  while (true) {
    std::fill(chain.begin(), chain.end(), 0);
    while (true) {
      u128 prod = 1;
      for (int a = 0; a < power && prod != 0; ++a) {
        prod *= m[pivot[a]][chain[a] * n + chain[(a + 1) % power]];
      }
      total += prod;
      int pos = power - 1;
      while (pos >= 0 && ++chain[pos] == n) chain[pos--] = 0;
      if (pos < 0) break;
    }
    int pos = power - 1;
    while (pos >= 0 && ++pivot[pos] == pairs.size()) pivot[pos--] = 0;
    if (pos < 0) break;
  }

  const ScaledTwoPointMatrix b = scaled_two_point_matrix(pattern, g);
  Eigen::MatrixXd product = b.values;
  for (int k = 1; k < power; ++k) product = product * b.values;

  TraceIdentityReport out;
  out.g = power;
  out.trace_direct = product.trace();
  for (double x : symmetric_eigenvalues(b.values).values) out.trace_spectral += std::pow(x, power);
  out.chain_sum = static_cast<double>(static_cast<long double>(total) *
                                      std::pow(static_cast<long double>(two_point_scale(pattern, n)), power));
  const double denom = std::max(std::abs(out.chain_sum), 1e-300);
  out.relative_error = std::abs(out.trace_direct - out.chain_sum) / denom;
  const double spectral_error = std::abs(out.trace_spectral - out.chain_sum) / std::max(denom, 1.0);
  out.pass = out.relative_error <= 1e-12 && spectral_error <= 1e-9;
  return out;
}

double ChiSqMixture::variance() const {
  double sq = 0;
  for (double x : eigenvalues) sq += x * x;
  return scale * scale * 2.0 * (c - 1) * sq;
}

double ChiSqMixture::sample(Rng& rng) const {
  std::chi_squared_distribution<double> chi(static_cast<double>(c - 1));
  double sum = 0;
  for (double x : eigenvalues) sum += x * (chi(rng) - (c - 1));
  return scale * sum;
}

ChiSqMixture chisq_limit(std::span<const double> eigenvalues, int c, int order, std::string source) {
  if (c < 2) throw InputError("the chi-squared limit needs at least 2 colours");
  double top = 0;
  for (double x : eigenvalues) top = std::max(top, std::abs(x));
  if (top == 0) throw DegenerateConfiguration("every eigenvalue is zero: no chi-squared mixture limit");
  ChiSqMixture out;
  out.c = c;
  out.order = order;
  out.scale = std::pow(static_cast<double>(c), -(order - 1));
  out.source = std::move(source);
  for (double x : eigenvalues) {
    if (std::abs(x) >= 1e-8 * top) {
      out.eigenvalues.push_back(x);
    } else {
      out.discarded_mass += x * x;
    }
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

std::vector<double> gamma_statistic(const SampleSet& samples, double mean, std::size_t n, int order) {
  const double scale = std::pow(static_cast<double>(n), order - 1);
  std::vector<double> out;
  out.reserve(samples.values.size());
  for (double x : samples.values) out.push_back((x - mean) / scale);
  return out;
}

BirthdayEstimate birthday_sample_size(int s, int c, double p, double t) {
  if (s < 2) throw InputError("clique size must be at least 2");
  if (c < 1) throw InputError("colour count must be at least 1");
  if (!(p > 0 && p < 1)) throw InputError("target probability must lie in (0,1)");
  if (!(t > 0)) throw DegenerateConfiguration("t(K_s,W) = 0: no finite group size reaches the target");
  const double factorial = std::tgamma(static_cast<double>(s) + 1);
  const double value =
      std::pow(factorial / t * std::pow(static_cast<double>(c), s - 1) * std::log(1 / (1 - p)), 1.0 / s);
  return {value, static_cast<std::uint64_t>(std::ceil(value))};
}

double collision_probability(std::size_t n, int c, int s) {
  if (c < 1 || s < 1) throw InputError("collision probability needs c >= 1 and s >= 1");
  // n! [x^n] (sum_{j<s} x^j/j!)^c / c^n counts colourings with every class below s.
  std::vector<long double> factor(static_cast<std::size_t>(s), 1.0L);
  for (int j = 1; j < s; ++j) factor[j] = factor[j - 1] / j;
  std::vector<long double> poly(n + 1, 0.0L);
  poly[0] = 1;
  for (int k = 0; k < c; ++k) {
    std::vector<long double> next(n + 1, 0.0L);
    for (std::size_t m = 0; m <= n; ++m) {
      if (poly[m] == 0) continue;
      for (int j = 0; j < s && m + j <= n; ++j) next[m + j] += poly[m] * factor[j];
    }
    poly = std::move(next);
  }
  long double none = poly[n];
  for (std::size_t m = 1; m <= n; ++m) none *= static_cast<long double>(m) / c;
  return static_cast<double>(1.0L - none);
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::poisson:
      return "poisson";
    case Regime::gaussian:
      return "gaussian";
    case Regime::chisq_fixed_c:
      return "chisq-fixed-c";
    case Regime::degenerate:
      return "degenerate";
  }
  return "unknown";
}

std::vector<std::uint64_t> copies_through_vertex(const Pattern& pattern, const HostGraph& g) {
  const long n = static_cast<long>(g.size());
  const int v = pattern.order();
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
#pragma omp parallel
  {
    std::vector<EmbeddingCounter> counters;
    for (int u = 0; u < v; ++u) {
      const int pins[] = {u};
      counters.emplace_back(pattern.graph(), MapKind::injective, pins);
    }
#pragma omp for schedule(dynamic, 8)
    for (long x = 0; x < n; ++x) {
      const Vertex image = static_cast<Vertex>(x);
      std::uint64_t maps = 0;
      for (auto& counter : counters) maps += counter.count(g, std::span<const Vertex>(&image, 1));
      out[x] = maps / pattern.automorphisms();
    }
  }
  return out;
}

RegimeReport classify_regime(const Pattern& pattern, const HostGraph& g, int c) {
  if (c < 1) throw InputError("colour count must be at least 1");
  RegimeReport out;
  const int v = pattern.order();
  out.copies = count_copies(pattern, g);
  out.mean = static_cast<double>(out.copies) / std::pow(static_cast<double>(c), v - 1);
  if (c >= 2) out.stein_bound = stein_bound_rhs(pattern, g, c);
  if (out.copies == 0) {
    out.reason = "no copies of H: t(H,G) = 0, outside every limit theorem (compare the K_{1,n,n} example)";
    return out;
  }
  if (c == 1) {
    out.reason = "one colour: T is constant";
    return out;
  }
  const auto through = copies_through_vertex(pattern, g);
  out.hub_share = static_cast<double>(*std::max_element(through.begin(), through.end())) /
                  static_cast<double>(out.copies);
  if (out.hub_share >= kHubShare && g.size() > static_cast<std::size_t>(2 * v)) {
    out.reason = "a single vertex lies in at least half of all copies, so t(H,G_n) -> 0 "
                 "(compare the n-pyramid and K_{1,n,n} examples)";
    return out;
  }
  if (out.mean <= kPoissonMaxMean && c >= kLargeColourCount) {
    out.regime = Regime::poisson;
    out.reason = "bounded mean with many colours (heuristic thresholds)";
  } else if (c >= kLargeColourCount && out.stein_bound <= kGaussianMaxBound) {
    out.regime = Regime::gaussian;
    out.reason = "growing mean with many colours and a small Wasserstein bound (heuristic thresholds)";
  } else {
    out.regime = Regime::chisq_fixed_c;
    out.reason = "few colours: fixed-c chi-squared mixture (heuristic thresholds)";
  }
  return out;
}

namespace serial {

ScaledTwoPointMatrix scaled_two_point_matrix(const Pattern& pattern, const HostGraph& g) {
  check_two_point_input(pattern, g);
  const std::size_t n = g.size();
  const double scale = two_point_scale(pattern, n);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (auto [u, v] : ordered_pairs(pattern.order())) {
    const int pins[] = {u, v};
    EmbeddingCounter counter(pattern.graph(), MapKind::injective, pins);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        if (i == j) continue;
        const Vertex images[] = {i, j};
        b(i, j) += static_cast<double>(counter.count(g, images));
      }
    }
  }
  b *= scale;
  return {std::move(b)};
}

}  // namespace serial

}  // namespace mono
