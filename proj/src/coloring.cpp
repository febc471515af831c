#include "monochrome/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monochrome/counting.hpp"
#include "monochrome/embedding.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/subsets.hpp"

namespace mono {

namespace {

__extension__ typedef unsigned __int128 u128;

void check_colors(int c) {
  if (c < 1) throw InputError("colour count must be at least 1");
}

// Reusable scratch for class-restricted counting.
class MonoCounter {
 public:
  MonoCounter(const Pattern& pattern, const HostGraph& g)
      : pattern_(pattern), g_(g), counter_(pattern.graph(), MapKind::injective, kRootPin) {}

  std::uint64_t count(const Coloring& coloring) {
    const std::size_t n = g_.size();
    if (coloring.colors.size() != n) throw InputError("colouring does not cover the host graph");
    const std::size_t words = g_.words();
    const auto c = static_cast<std::size_t>(coloring.c);
    masks_.assign(c * words, 0);
    class_size_.assign(c, 0);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t col = coloring.colors[x];
      if (col >= c) throw InputError("colour index out of range");
      masks_[col * words + (x >> 6)] |= Word{1} << (x & 63);
      ++class_size_[col];
    }
    const auto v = static_cast<std::size_t>(pattern_.order());
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t col = coloring.colors[x];
      if (class_size_[col] < v) continue;
      const Vertex image = static_cast<Vertex>(x);
      total += counter_.count(g_, std::span<const Vertex>(&image, 1),
                              std::span<const Word>(masks_.data() + col * words, words));
    }
    return total / pattern_.automorphisms();
  }

 private:
  static constexpr int kRootPin[] = {0};
  const Pattern& pattern_;
  const HostGraph& g_;
  EmbeddingCounter counter_;
  std::vector<Word> masks_;
  std::vector<std::size_t> class_size_;
};

std::string describe(const HostGraph& g) {
  return "n=" + std::to_string(g.size()) + ",m=" + std::to_string(g.edge_count());
}

long double inverse_power(int c, int k) { return std::pow(static_cast<long double>(c), -k); }

}  // namespace

Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Coloring sample_coloring(std::size_t n, int c, Rng& rng) {
  check_colors(c);
  Coloring out{c, std::vector<std::uint32_t>(n, 0)};
  if (c == 1) return out;
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(c - 1));
  for (auto& x : out.colors) x = pick(rng);
  return out;
}

std::uint64_t monochromatic_count(const Pattern& pattern, const HostGraph& g, const Coloring& coloring) {
  check_colors(coloring.c);
  MonoCounter counter(pattern, g);
  return counter.count(coloring);
}

double exact_mean(const Pattern& pattern, const HostGraph& g, int c) {
  check_colors(c);
  return static_cast<double>(count_copies(pattern, g)) / std::pow(static_cast<double>(c), pattern.order() - 1);
}

MomentReport exact_variance(const Pattern& pattern, const HostGraph& g, int c, double budget) {
  check_colors(c);
  const int v = pattern.order();
  const SubsetProfile profile = subset_profile(pattern, g);
  const std::size_t subsets = profile.size();

  // Pair index: for every vertex pair inside a subset, the subsets containing it.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
  keyed.reserve(subsets * static_cast<std::size_t>(v * (v - 1) / 2));
  for (std::size_t s = 0; s < subsets; ++s) {
    const auto set = profile.subset(s);
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        keyed.emplace_back(static_cast<std::uint64_t>(set[a]) * g.size() + set[b], static_cast<std::uint32_t>(s));
      }
    }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> start;
  std::vector<std::uint32_t> members(keyed.size());
  double work = 0;
  for (std::size_t e = 0; e < keyed.size(); ++e) {
    if (e == 0 || keyed[e].first != keyed[e - 1].first) start.push_back(e);
    members[e] = keyed[e].second;
  }
  start.push_back(keyed.size());
  // pairs_of[s] lists the index lists that subset s belongs to.
  std::vector<std::size_t> pairs_of(keyed.size());
  std::vector<std::size_t> fill(subsets, 0);
  const std::size_t per = static_cast<std::size_t>(v * (v - 1) / 2);
  for (std::size_t l = 0; l + 1 < start.size(); ++l) {
    const double len = static_cast<double>(start[l + 1] - start[l]);
    work += len * len;
    for (std::size_t e = start[l]; e < start[l + 1]; ++e) {
      const std::uint32_t s = members[e];
      pairs_of[s * per + fill[s]++] = l;
    }
  }
  if (work > budget) {
    throw BudgetExceeded("exact variance needs about " + std::to_string(work) +
                         " pair-term operations (budget " + std::to_string(budget) +
                         "); use a smaller host or raise the budget");
  }

  constexpr int kMaxOrder = Pattern::kMaxOrder;
  std::uint64_t shared[kMaxOrder + 1] = {};
  const long total_subsets = static_cast<long>(subsets);
#pragma omp parallel reduction(+ : shared[:kMaxOrder + 1])
  {
    std::vector<std::uint32_t> stamp(subsets, 0);
#pragma omp for schedule(dynamic, 64)
    for (long s = 0; s < total_subsets; ++s) {
      const auto mark = static_cast<std::uint32_t>(s + 1);
      const auto set = profile.subset(static_cast<std::size_t>(s));
      const std::uint64_t ms = profile.copies[s];
      for (std::size_t p = 0; p < per; ++p) {
        const std::size_t l = pairs_of[static_cast<std::size_t>(s) * per + p];
        for (std::size_t e = start[l]; e < start[l + 1]; ++e) {
          const std::uint32_t t = members[e];
          if (stamp[t] == mark) continue;
          stamp[t] = mark;
          const auto other = profile.subset(t);
          int common = 0;
          for (int a = 0, b = 0; a < v && b < v;) {
            if (set[a] == other[b]) {
              ++common;
              ++a;
              ++b;
            } else if (set[a] < other[b]) {
              ++a;
            } else {
              ++b;
            }
          }
          shared[common] += ms * profile.copies[t];
        }
      }
    }
  }

  std::vector<std::uint64_t> through(g.size(), 0);
  for (std::size_t s = 0; s < subsets; ++s) {
    for (Vertex x : profile.subset(s)) through[x] += profile.copies[s];
  }
  u128 q1 = 0;
  for (std::uint64_t t : through) q1 += static_cast<u128>(t) * t;
  u128 at_least_two = 0;
  for (int j = 2; j <= v; ++j) {
    q1 -= static_cast<u128>(j) * shared[j];
    at_least_two += shared[j];
  }
  const std::uint64_t copies = profile.total_copies();
  const u128 q0 = static_cast<u128>(copies) * copies - q1 - at_least_two;

  MomentReport out;
  out.copy_count = copies;
  out.mean = static_cast<double>(copies) / std::pow(static_cast<double>(c), v - 1);
  out.pair_profile[2 * v] = static_cast<double>(q0);
  out.pair_profile[2 * v - 1] = static_cast<double>(q1);
  long double variance = 0;
  for (int j = 2; j <= v; ++j) {
    out.pair_profile[2 * v - j] = static_cast<double>(shared[j]);
    variance += static_cast<long double>(shared[j]) * (inverse_power(c, 2 * v - j - 1) - inverse_power(c, 2 * v - 2));
  }
  out.variance = static_cast<double>(variance);
  return out;
}

LowerBoundReport variance_lower_bound_check(const Pattern& pattern, const HostGraph& g, int c,
                                            const StepGraphon& w) {
  LowerBoundReport out;
  if (density_W(pattern.graph(), w) <= 0) {
    out.skipped = true;
    out.notice = "t(H,W) = 0: the variance lower bound does not apply";
    return out;
  }
  const int v = pattern.order();
  const double n = static_cast<double>(g.size());
  const double cc = static_cast<double>(c);
  out.variance = exact_variance(pattern, g, c).variance;
  out.bound = std::max(std::pow(n, v) / std::pow(cc, v - 1), std::pow(n, 2 * v - 2) / std::pow(cc, 2 * v - 3));
  out.kappa = out.variance / out.bound;
  return out;
}

IndependentApprox::IndependentApprox(const Pattern& pattern, const HostGraph& g, int c) {
  if (c < 2) throw InputError("the independent approximation needs at least 2 colours");
  q_ = std::pow(static_cast<double>(c), -(pattern.order() - 1));
  const SubsetProfile profile = subset_profile(pattern, g);
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (std::uint64_t m : profile.copies) ++histogram[m];
  weights_.assign(histogram.begin(), histogram.end());
}

std::uint64_t IndependentApprox::sample(Rng& rng) const {
  std::uint64_t total = 0;
  for (auto [weight, count] : weights_) {
    std::binomial_distribution<std::uint64_t> draw(count, q_);
    total += weight * draw(rng);
  }
  return total;
}

double IndependentApprox::mean() const {
  double sum = 0;
  for (auto [weight, count] : weights_) sum += static_cast<double>(weight) * static_cast<double>(count);
  return sum * q_;
}

std::uint64_t sample_independent_approx(const Pattern& pattern, const HostGraph& g, int c, Rng& rng) {
  return IndependentApprox(pattern, g, c).sample(rng);
}

SampleSet run_monte_carlo(const Pattern& pattern, const HostGraph& g, int c, std::size_t reps,
                          std::uint64_t seed) {
  check_colors(c);
  if (reps == 0) throw InputError("reps must be at least 1");
  SampleSet out{std::vector<double>(reps, 0.0), seed, reps, c, pattern.name(), describe(g)};
  const long total = static_cast<long>(reps);
#pragma omp parallel
  {
    MonoCounter counter(pattern, g);
#pragma omp for schedule(dynamic, 16)
    for (long r = 0; r < total; ++r) {
      Rng rng = stream_rng(seed, static_cast<std::uint64_t>(r));
      out.values[r] = static_cast<double>(counter.count(sample_coloring(g.size(), c, rng)));
    }
  }
  return out;
}

namespace serial {

std::uint64_t monochromatic_count(const Pattern& pattern, const HostGraph& g, const Coloring& coloring) {
  if (coloring.colors.size() != g.size()) throw InputError("colouring does not cover the host graph");
  EmbeddingCounter counter(pattern.graph(), MapKind::injective);
  std::uint64_t maps = 0;
  counter.enumerate(g, {}, [&](std::span<const Vertex> image) {
    const std::uint32_t first = coloring.colors[image[0]];
    for (Vertex x : image) {
      if (coloring.colors[x] != first) return;
    }
    ++maps;
  });
  return maps / pattern.automorphisms();
}

SampleSet run_monte_carlo(const Pattern& pattern, const HostGraph& g, int c, std::size_t reps,
                          std::uint64_t seed) {
  check_colors(c);
  if (reps == 0) throw InputError("reps must be at least 1");
  SampleSet out{std::vector<double>(reps, 0.0), seed, reps, c, pattern.name(), describe(g)};
  for (std::size_t r = 0; r < reps; ++r) {
    Rng rng = stream_rng(seed, r);
    out.values[r] = static_cast<double>(serial::monochromatic_count(pattern, g, sample_coloring(g.size(), c, rng)));
  }
  return out;
}

}  // namespace serial

}  // namespace mono
