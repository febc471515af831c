#pragma once

#include <cstdint>
#include <span>

#include "monochrome/embedding.hpp"
#include "monochrome/graph.hpp"

namespace mono {

// OpenMP kernels: the search is split over the image of the first pattern
// vertex and summed, so totals do not depend on the thread count.
std::uint64_t count_embeddings(const SmallGraph& pattern, const HostGraph& g, MapKind kind,
                               std::span<const Word> allowed = {});
std::uint64_t count_injective_homs(const SmallGraph& pattern, const HostGraph& g);
std::uint64_t count_homomorphisms(const SmallGraph& pattern, const HostGraph& g);
std::uint64_t count_induced_maps(const SmallGraph& pattern, const HostGraph& g);

/// N(H,G) = hom_inj(H,G) / |Aut(H)|. Throws std::logic_error if the division
/// is not exact, which can only mean a counting defect.
std::uint64_t count_copies(const Pattern& pattern, const HostGraph& g);

// t(F,G), t_inj(F,G), t_ind(F,G). F need not be connected.
double homomorphism_density(const SmallGraph& pattern, const HostGraph& g);
double injective_density(const SmallGraph& pattern, const HostGraph& g);
double induced_density(const SmallGraph& pattern, const HostGraph& g);

/// M_{u,v}(i,j,H,G): injective homomorphisms with u -> i and v -> j. The
/// adjacency factor a_ij only applies when (u,v) is an edge of H.
std::uint64_t two_point_count(const Pattern& pattern, int u, int v, Vertex i, Vertex j, const HostGraph& g);

// n (n-1) ... (n-k+1) as a double.
double falling_factorial(std::size_t n, std::size_t k);

namespace serial {

// Single-stream reference versions of the kernels above.
std::uint64_t count_embeddings(const SmallGraph& pattern, const HostGraph& g, MapKind kind,
                               std::span<const Word> allowed = {});
std::uint64_t count_injective_homs(const SmallGraph& pattern, const HostGraph& g);

}  // namespace serial

}  // namespace mono
