#include "monochrome/counting.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "monochrome/errors.hpp"

namespace mono {

namespace {

int root_vertex(const SmallGraph& pattern) {
  int best = 0;
  for (int x = 1; x < pattern.order(); ++x) {
    if (pattern.degree(x) > pattern.degree(best)) best = x;
  }
  return best;
}

void check_range(const SmallGraph& pattern, const HostGraph& g, MapKind kind) {
  double log_maps = 0;
  for (int k = 0; k < pattern.order(); ++k) {
    double choices = kind == MapKind::homomorphism ? static_cast<double>(g.size())
                                                   : static_cast<double>(g.size()) - k;
    if (choices <= 0) return;
    log_maps += std::log2(choices);
  }
  if (log_maps >= 63.5) {
    throw std::overflow_error("embedding count of a " + std::to_string(pattern.order()) +
                              "-vertex graph into " + std::to_string(g.size()) +
                              " vertices may exceed 64 bits");
  }
}

}  // namespace

double falling_factorial(std::size_t n, std::size_t k) {
  double out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n < i + 1) return 0;
    out *= static_cast<double>(n - i);
  }
  return out;
}

std::uint64_t count_embeddings(const SmallGraph& pattern, const HostGraph& g, MapKind kind,
                               std::span<const Word> allowed) {
  if (pattern.order() == 0) return 1;
  check_range(pattern, g, kind);
  const int root = root_vertex(pattern);
  const long n = static_cast<long>(g.size());
  std::uint64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    const int pins[] = {root};
    EmbeddingCounter counter(pattern, kind, pins);
#pragma omp for schedule(dynamic, 8)
    for (long x = 0; x < n; ++x) {
      const Vertex image = static_cast<Vertex>(x);
      total += counter.count(g, std::span<const Vertex>(&image, 1), allowed);
    }
  }
  return total;
}

std::uint64_t count_injective_homs(const SmallGraph& pattern, const HostGraph& g) {
  return count_embeddings(pattern, g, MapKind::injective);
}

std::uint64_t count_homomorphisms(const SmallGraph& pattern, const HostGraph& g) {
  return count_embeddings(pattern, g, MapKind::homomorphism);
}

std::uint64_t count_induced_maps(const SmallGraph& pattern, const HostGraph& g) {
  return count_embeddings(pattern, g, MapKind::induced);
}

std::uint64_t count_copies(const Pattern& pattern, const HostGraph& g) {
  const std::uint64_t homs = count_injective_homs(pattern.graph(), g);
  if (homs % pattern.automorphisms() != 0) {
    throw std::logic_error("injective homomorphism count " + std::to_string(homs) +
                           " is not divisible by |Aut| = " + std::to_string(pattern.automorphisms()));
  }
  return homs / pattern.automorphisms();
}

double homomorphism_density(const SmallGraph& pattern, const HostGraph& g) {
  return static_cast<double>(count_homomorphisms(pattern, g)) /
         std::pow(static_cast<double>(g.size()), pattern.order());
}

double injective_density(const SmallGraph& pattern, const HostGraph& g) {
  const double tuples = falling_factorial(g.size(), static_cast<std::size_t>(pattern.order()));
  if (tuples == 0) return 0;
  return static_cast<double>(count_injective_homs(pattern, g)) / tuples;
}

double induced_density(const SmallGraph& pattern, const HostGraph& g) {
  const double tuples = falling_factorial(g.size(), static_cast<std::size_t>(pattern.order()));
  if (tuples == 0) return 0;
  return static_cast<double>(count_induced_maps(pattern, g)) / tuples;
}

std::uint64_t two_point_count(const Pattern& pattern, int u, int v, Vertex i, Vertex j, const HostGraph& g) {
  if (u == v) throw InputError("two-point count needs distinct pattern vertices");
  if (i == j) return 0;
  const int pins[] = {u, v};
  const Vertex images[] = {i, j};
  EmbeddingCounter counter(pattern.graph(), MapKind::injective, pins);
  return counter.count(g, images);
}

namespace serial {

std::uint64_t count_embeddings(const SmallGraph& pattern, const HostGraph& g, MapKind kind,
                               std::span<const Word> allowed) {
  if (pattern.order() == 0) return 1;
  check_range(pattern, g, kind);
  const int pins[] = {root_vertex(pattern)};
  EmbeddingCounter counter(pattern, kind, pins);
  std::uint64_t total = 0;
  for (Vertex x = 0; x < g.size(); ++x) total += counter.count(g, std::span<const Vertex>(&x, 1), allowed);
  return total;
}

std::uint64_t count_injective_homs(const SmallGraph& pattern, const HostGraph& g) {
  return serial::count_embeddings(pattern, g, MapKind::injective);
}

}  // namespace serial

}  // namespace mono
