#pragma once

// Slow, obviously-correct reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "monochrome/coloring.hpp"
#include "monochrome/graph.hpp"
#include "monochrome/graphon.hpp"

namespace oracle {

using mono::HostGraph;
using mono::SmallGraph;
using mono::Vertex;

inline std::vector<std::vector<int>> permutations(int v) {
  std::vector<int> p(v);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::uint64_t automorphisms(const SmallGraph& g) {
  std::uint64_t count = 0;
  for (const auto& p : permutations(g.order())) {
    bool ok = true;
    for (int a = 0; a < g.order() && ok; ++a) {
      for (int b = 0; b < g.order() && ok; ++b) ok = g.adjacent(a, b) == g.adjacent(p[a], p[b]);
    }
    count += ok;
  }
  return count;
}

// Minimum upper-triangle code over all v! relabelings.
inline std::uint64_t canonical(const SmallGraph& g) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& p : permutations(g.order())) {
    std::uint64_t code = 0;
    for (int a = 0; a < g.order(); ++a) {
      for (int b = a + 1; b < g.order(); ++b) code = (code << 1) | (g.adjacent(p[a], p[b]) ? 1U : 0U);
    }
    best = std::min(best, code);
  }
  return best;
}

enum class Kind { hom, injective, induced };

// Visits every map V(F) -> V(G) (all n^v of them) and counts the ones of the
// requested kind.
inline std::uint64_t maps(const SmallGraph& f, const HostGraph& g, Kind kind) {
  const int v = f.order();
  const std::size_t n = g.size();
  std::vector<std::size_t> img(static_cast<std::size_t>(v), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < v && ok; ++a) {
      for (int b = a + 1; b < v && ok; ++b) {
        if (kind != Kind::hom && img[a] == img[b]) ok = false;
        else if (f.adjacent(a, b) && (img[a] == img[b] || !g.adjacent(img[a], img[b]))) ok = false;
        else if (kind == Kind::induced && !f.adjacent(a, b) && g.adjacent(img[a], img[b])) ok = false;
      }
    }
    count += ok;
    int pos = v - 1;
    while (pos >= 0 && ++img[pos] == n) img[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

// Injective homomorphisms with u -> i and v -> j.
inline std::uint64_t two_point(const SmallGraph& f, int u, int v, Vertex i, Vertex j, const HostGraph& g) {
  const int order = f.order();
  const std::size_t n = g.size();
  std::vector<std::size_t> img(static_cast<std::size_t>(order), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = img[u] == i && img[v] == j;
    for (int a = 0; a < order && ok; ++a) {
      for (int b = a + 1; b < order && ok; ++b) {
        if (img[a] == img[b]) ok = false;
        else if (f.adjacent(a, b) && !g.adjacent(img[a], img[b])) ok = false;
      }
    }
    count += ok;
    int pos = order - 1;
    while (pos >= 0 && ++img[pos] == n) img[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

struct Moments {
  double mean = 0;
  double variance = 0;
};

// Mean and variance of T over all c^n colourings, counting monochromatic
// copies from the full list of injective maps.
inline Moments all_colorings(const SmallGraph& f, std::uint64_t aut, const HostGraph& g, int c) {
  const int v = f.order();
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> images;
  std::vector<std::size_t> img(static_cast<std::size_t>(v), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < v && ok; ++a) {
      for (int b = a + 1; b < v && ok; ++b) {
        if (img[a] == img[b] || (f.adjacent(a, b) && !g.adjacent(img[a], img[b]))) ok = false;
      }
    }
    if (ok) images.push_back(img);
    int pos = v - 1;
    while (pos >= 0 && ++img[pos] == n) img[pos--] = 0;
    if (pos < 0) break;
  }
  std::vector<int> colour(n, 0);
  long double sum = 0;
  long double sq = 0;
  long double total = 0;
  while (true) {
    std::uint64_t mono = 0;
    for (const auto& m : images) {
      bool same = true;
      for (int a = 1; a < v && same; ++a) same = colour[m[a]] == colour[m[0]];
      mono += same;
    }
    const long double t = static_cast<long double>(mono / aut);
    sum += t;
    sq += t * t;
    total += 1;
    std::size_t pos = 0;
    while (pos < n && ++colour[pos] == c) colour[pos++] = 0;
    if (pos == n) break;
  }
  const long double mean = sum / total;
  return {static_cast<double>(mean), static_cast<double>(sq / total - mean * mean)};
}

// t(F,W) or t_ind(F,W) by visiting all k^v block assignments.
inline double graphon_density(const SmallGraph& f, const mono::StepGraphon& w, bool induced) {
  const int v = f.order();
  const int k = w.blocks();
  std::vector<int> blk(static_cast<std::size_t>(v), 0);
  double total = 0;
  while (true) {
    double term = 1;
    for (int a = 0; a < v; ++a) term *= w.sizes()[blk[a]];
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        const double x = w.values()(blk[a], blk[b]);
        if (f.adjacent(a, b)) term *= x;
        else if (induced) term *= 1 - x;
      }
    }
    total += term;
    int pos = v - 1;
    while (pos >= 0 && ++blk[pos] == k) blk[pos--] = 0;
    if (pos < 0) break;
  }
  return total;
}

// Closed form of the step-kernel spectrum for equal blocks with constant
// diagonal value d and off-diagonal value o: k blocks of measure 1/k.
inline std::vector<double> equal_block_spectrum(int k, double d, double o) {
  std::vector<double> out{(d + (k - 1) * o) / k};
  for (int r = 1; r < k; ++r) out.push_back((d - o) / k);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracle
