#pragma once

#include <cstdint>
#include <string>

#include "monochrome/graph.hpp"

namespace mono {

HostGraph complete_graph(std::size_t n);
HostGraph complete_bipartite(std::size_t a, std::size_t b);
HostGraph complete_tripartite(std::size_t a, std::size_t b, std::size_t c);
/// G(n,p) with each pair decided by its own draw from a generator seeded
/// with `seed`, in lexicographic pair order.
HostGraph gnp(std::size_t n, double p, std::uint64_t seed);
/// The n-pyramid (apex pair 0,1 joined to each other and to n base vertices)
/// followed by a disjoint K_{n,n}.
HostGraph pyramid_plus_bipartite(std::size_t n);
HostGraph k1nn(std::size_t n);

/// Parses "complete:n", "bipartite:a,b", "tripartite:a,b,c",
/// "gnp:n,p,seed", "pyramid:n" or "k1nn:n".
HostGraph generate(const std::string& spec);

}  // namespace mono
