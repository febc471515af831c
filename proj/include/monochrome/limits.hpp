#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "monochrome/coloring.hpp"
#include "monochrome/graph.hpp"
#include "monochrome/graphon.hpp"

namespace mono {

// ---- Poisson mixture (bounded mean, c -> infinity) -------------------------

struct PoissonComponent {
  std::uint64_t multiplicity = 1;  // N(H,F)
  double rate = 0;                 // lambda_F
  std::string label;               // edge list of F
};

/// Law of sum_F N(H,F) X_F with independent X_F ~ Pois(lambda_F).
struct PoissonMixture {
  std::vector<PoissonComponent> components;
  double mean() const;
  double variance() const;
};

/// Rates lambda |Aut H| / |Aut F| t_ind(F,W) / t(H,W), one component per
/// supergraph class F of H. Throws DegenerateConfiguration if t(H,W) = 0.
PoissonMixture poisson_mixture_params(const Pattern& pattern, const StepGraphon& w, double lambda);

/// Finite-n version: X_F counts the v-subsets inducing a copy of F, each
/// monochromatic with probability c^{-(v-1)}, so lambda_F = (#such subsets) / c^{v-1}.
PoissonMixture poisson_mixture_from_host(const Pattern& pattern, const HostGraph& g, int c);

struct MixturePmf {
  std::vector<double> pmf;  // P(X = k) for k = 0..support_cap
  double tail = 0;          // P(X > support_cap)
};

MixturePmf mixture_pmf(const PoissonMixture& mixture, std::size_t support_cap);
std::uint64_t sample_poisson_mixture(const PoissonMixture& mixture, Rng& rng);

/// Poisson(rate) pmf on 0..support_cap.
std::vector<double> poisson_pmf(double rate, std::size_t support_cap);

// ---- Gaussian regime -------------------------------------------------------

struct GaussianLimit {
  double mean = 0;
  double sd = 0;
  std::pair<double, double> bound_terms;  // (c^{v-1}/n^v)^{1/2}, (1/c)^{1/2}
};

/// The two terms of the Wasserstein bound (up to an H-dependent constant).
std::pair<double, double> stein_bound_terms(int v, std::size_t n, int c);
double stein_bound_rhs(const Pattern& pattern, const HostGraph& g, int c);

/// Mean, sd and bound terms from the exact moments.
GaussianLimit gaussian_limit(const Pattern& pattern, const HostGraph& g, int c);

/// (x - mean) / sd for every value. Throws DegenerateConfiguration if sd <= 0.
SampleSet standardize(const SampleSet& samples, double mean, double sd);

// ---- Chi-squared mixture (fixed c) ----------------------------------------

/// B(i,j) = sum_{u != v} M_{u,v}(i,j) / (2 |Aut H| n^{v-1}); zero diagonal.
struct ScaledTwoPointMatrix {
  Eigen::MatrixXd values;
};

ScaledTwoPointMatrix scaled_two_point_matrix(const Pattern& pattern, const HostGraph& g);

inline constexpr std::size_t kMaxSpectrumOrder = 2000;

/// Eigenvalues, descending. top_k > 0 keeps the top_k of largest magnitude.
/// Throws BudgetExceeded above `max_order` rows.
std::vector<double> finite_n_spectrum(const ScaledTwoPointMatrix& b, std::size_t top_k = 0,
                                      std::size_t max_order = kMaxSpectrumOrder);

struct TraceIdentityReport {
  int g = 0;
  double trace_direct = 0;    // tr(B^g) by matrix products
  double trace_spectral = 0;  // sum of lambda^g
  double chain_sum = 0;       // K_g n^{-g(v-1)} sum_J sum_chains prod M
  double relative_error = 0;  // |trace_direct - chain_sum| / max(|chain_sum|, tiny)
  bool pass = false;
};

/// Brute-force check of tr(B^g) against the pivot-list chain sum; n <= 12,
/// g in {2,3}.
TraceIdentityReport trace_identity_check(const Pattern& pattern, const HostGraph& g, int power);

/// c^{-(v-1)} sum_r lambda_r (chi2_{c-1} - (c-1)) with independent terms.
struct ChiSqMixture {
  std::vector<double> eigenvalues;  // kept, descending
  int c = 2;
  int order = 2;                    // v = |V(H)|
  double scale = 1;                 // c^{-(v-1)}
  std::string source;               // "graphon" or "finite-n matrix"
  double discarded_mass = 0;        // sum of lambda^2 over dropped eigenvalues

  double mean() const { return 0; }
  double variance() const;
  double sample(Rng& rng) const;
};

/// Keeps eigenvalues with |lambda| >= 1e-8 |lambda_1|. Throws
/// DegenerateConfiguration when every eigenvalue is zero.
ChiSqMixture chisq_limit(std::span<const double> eigenvalues, int c, int order, std::string source = "graphon");

/// Gamma = (T - E T) / n^{v-1} for each sampled T.
std::vector<double> gamma_statistic(const SampleSet& samples, double mean, std::size_t n, int order);

// ---- Birthday problem ------------------------------------------------------

struct BirthdayEstimate {
  double value = 0;
  std::uint64_t ceiling = 0;
};

/// n ~ (s! / t c^{s-1} log(1/(1-p)))^{1/s}.
BirthdayEstimate birthday_sample_size(int s, int c, double p, double t);

/// Exact P(some colour is used at least s times) when n vertices receive
/// independent uniform colours, i.e. P(T(K_s,K_n) > 0).
double collision_probability(std::size_t n, int c, int s);

// ---- Regime routing --------------------------------------------------------

enum class Regime { poisson, gaussian, chisq_fixed_c, degenerate };
std::string to_string(Regime r);

struct RegimeReport {
  Regime regime = Regime::degenerate;
  double mean = 0;
  double stein_bound = 0;
  std::uint64_t copies = 0;
  double hub_share = 0;  // largest fraction of copies through one vertex
  std::string reason;
};

// Heuristic thresholds.
inline constexpr double kPoissonMaxMean = 20;
inline constexpr int kLargeColourCount = 30;
inline constexpr double kGaussianMaxBound = 0.5;
inline constexpr double kHubShare = 0.5;

/// For each host vertex x, the number of copies of H containing x.
std::vector<std::uint64_t> copies_through_vertex(const Pattern& pattern, const HostGraph& g);

RegimeReport classify_regime(const Pattern& pattern, const HostGraph& g, int c);

namespace serial {

ScaledTwoPointMatrix scaled_two_point_matrix(const Pattern& pattern, const HostGraph& g);

}  // namespace serial

}  // namespace mono
