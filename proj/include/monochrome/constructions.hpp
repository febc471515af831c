#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monochrome/graph.hpp"

namespace mono {

/// |Aut(F)| by backtracking over vertex permutations, pruned by degree and by
/// adjacency consistency with the already-mapped prefix.
std::uint64_t automorphism_count(const SmallGraph& g);

/// Canonical adjacency code: the lexicographically smallest upper-triangle
/// bit string over all relabelings that respect a colour-refinement partition
/// (which is itself isomorphism invariant). Two graphs of equal order are
/// isomorphic iff their codes agree. Requires order <= 11.
std::uint64_t canonical_code(const SmallGraph& g);

struct SupergraphClass {
  SmallGraph graph;              // representative on the pattern's vertex set, containing E(H)
  std::uint64_t pattern_copies;  // N(H,F)
  std::uint64_t automorphisms;   // |Aut(F)|
  std::uint64_t code;            // canonical_code(graph)
};

/// Every isomorphism class of graphs F on V(H) with E(F) ⊇ E(H), ordered by
/// edge count then canonical code.
std::vector<SupergraphClass> supergraph_family(const Pattern& pattern);

/// H²_(a,b): two copies of H glued along the vertex pair {a,b}. Vertices
/// 0..v-1 are the first copy; the second copy's remaining vertices follow in
/// label order.
SmallGraph join_graph(const Pattern& pattern, int a, int b);

/// Pivots (u_a, v_a) for a g-cycle of H; g = pivots.size() >= 2.
struct PivotList {
  std::vector<std::pair<int, int>> pivots;
  std::size_t length() const { return pivots.size(); }
};

/// All (v(v-1))^g pivot lists of length g for a pattern of order v.
std::vector<PivotList> all_pivot_lists(int order, int g);

/// The g-cycle of H with pivots J: copies H_1..H_g where v_a in copy a is
/// identified with u_{a+1} in copy a+1 (cyclically). Returned as the raw edge
/// list on g(v-1) vertices; edges created twice by the identification appear
/// twice.
struct MultiEdgeGraph {
  int order = 0;
  std::vector<Edge> edges;
};
MultiEdgeGraph cycle_multigraph(const Pattern& pattern, const PivotList& pivots);

/// Simple-graph version of cycle_multigraph (parallel edges collapsed).
SmallGraph cycle_of_pattern(const Pattern& pattern, const PivotList& pivots);

}  // namespace mono
