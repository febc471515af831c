#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "monochrome/graph.hpp"

namespace mono {

/// Visits every vertex subset of size k whose induced subgraph is connected,
/// exactly once (ESU enumeration rooted at the subset's smallest vertex).
/// The span passed to `visit` is sorted ascending.
void for_each_connected_subset(const HostGraph& g, int k,
                               const std::function<void(std::span<const Vertex>)>& visit);

/// The v-subsets S that carry at least one copy of H, with m(S) = N(H, G[S]).
/// Each subset is stored sorted; subsets are grouped by smallest vertex in
/// ascending order, so the layout does not depend on the thread count.
struct SubsetProfile {
  int subset_size = 0;
  std::vector<Vertex> vertices;       // subset_size entries per subset
  std::vector<std::uint64_t> copies;  // m(S)

  std::size_t size() const { return copies.size(); }
  std::span<const Vertex> subset(std::size_t s) const {
    return {vertices.data() + s * static_cast<std::size_t>(subset_size), static_cast<std::size_t>(subset_size)};
  }
  std::uint64_t total_copies() const;
};

/// Builds the profile for pattern H. Throws BudgetExceeded when more than
/// `max_subsets` connected subsets would have to be stored.
SubsetProfile subset_profile(const Pattern& pattern, const HostGraph& g, std::size_t max_subsets = 50'000'000);

}  // namespace mono
