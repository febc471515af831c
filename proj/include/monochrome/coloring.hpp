#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "monochrome/graph.hpp"
#include "monochrome/graphon.hpp"

namespace mono {

using Rng = std::mt19937_64;

/// Generator for stream `stream` of master seed `seed`. Streams with
/// different indices are seeded independently, so a rep's draws depend only
/// on (seed, rep) and not on which thread runs it.
Rng stream_rng(std::uint64_t seed, std::uint64_t stream);

struct Coloring {
  int c = 1;
  std::vector<std::uint32_t> colors;
};

Coloring sample_coloring(std::size_t n, int c, Rng& rng);

/// Number of copies of H whose vertices all share one colour. Each colour
/// class is searched with images restricted to that class; single-stream.
std::uint64_t monochromatic_count(const Pattern& pattern, const HostGraph& g, const Coloring& coloring);

/// E T = N(H,G) / c^{v-1}.
double exact_mean(const Pattern& pattern, const HostGraph& g, int c);

struct MomentReport {
  double mean = 0;
  double variance = 0;
  std::uint64_t copy_count = 0;
  // |s ∪ t| -> number of ordered copy pairs (s,t) with that union size.
  std::map<int, double> pair_profile;
};

/// Exact mean and variance. Pairs of copies are grouped by the vertex subsets
/// they span; subsets sharing at least two vertices are found through an
/// index on vertex pairs. `budget` caps the number of pair-term operations.
MomentReport exact_variance(const Pattern& pattern, const HostGraph& g, int c, double budget = 1e9);

struct LowerBoundReport {
  bool skipped = false;
  std::string notice;
  double variance = 0;
  double bound = 0;  // max(n^v / c^{v-1}, n^{2v-2} / c^{2v-3})
  double kappa = 0;  // variance / bound
};

/// Compares Var T with the order of magnitude expected when t(H,W) > 0.
LowerBoundReport variance_lower_bound_check(const Pattern& pattern, const HostGraph& g, int c,
                                            const StepGraphon& w);

/// J(H,G): one Bernoulli(c^{-(v-1)}) per v-subset S, weighted by N(H,G[S]).
/// Subsets sharing a weight are pooled, so a draw is a sum of binomials.
class IndependentApprox {
 public:
  IndependentApprox(const Pattern& pattern, const HostGraph& g, int c);
  std::uint64_t sample(Rng& rng) const;
  double mean() const;

 private:
  double q_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> weights_;  // (weight, subset count)
};

std::uint64_t sample_independent_approx(const Pattern& pattern, const HostGraph& g, int c, Rng& rng);

struct SampleSet {
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::size_t reps = 0;
  int c = 1;
  std::string pattern;
  std::string graph;
};

/// `reps` draws of T; rep r uses stream_rng(seed, r).
SampleSet run_monte_carlo(const Pattern& pattern, const HostGraph& g, int c, std::size_t reps,
                          std::uint64_t seed);

namespace serial {

/// Enumerates every copy once and tests whether it is monochromatic.
std::uint64_t monochromatic_count(const Pattern& pattern, const HostGraph& g, const Coloring& coloring);

SampleSet run_monte_carlo(const Pattern& pattern, const HostGraph& g, int c, std::size_t reps,
                          std::uint64_t seed);

}  // namespace serial

}  // namespace mono
