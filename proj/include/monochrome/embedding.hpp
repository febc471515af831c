#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "monochrome/graph.hpp"

namespace mono {

enum class MapKind {
  homomorphism,  // any edge-preserving map
  injective,     // edge-preserving and injective
  induced,       // injective, edges to edges and non-edges to non-edges
};

/// Backtracking embedding counter for a small graph F into a HostGraph.
///
/// Pattern vertices are visited in an order where each vertex (after any
/// pinned ones) has as many already-placed neighbours as possible; candidate
/// images are the intersection of the placed neighbours' bit rows, so the
/// search only ever extends along adjacency-consistent choices. The deepest
/// level is counted with a popcount instead of being enumerated.
///
/// An instance owns scratch buffers and is not safe to share between
/// threads; construct one per execution stream.
class EmbeddingCounter {
 public:
  /// `pinned` lists pattern vertices whose images are supplied per query;
  /// they occupy the first search depths in the given order.
  EmbeddingCounter(const SmallGraph& pattern, MapKind kind, std::span<const int> pinned = {});

  /// Number of maps with pattern vertex pinned[k] sent to images[k].
  /// `allowed`, when non-empty, restricts every image to its set bits.
  std::uint64_t count(const HostGraph& g, std::span<const Vertex> images,
                      std::span<const Word> allowed = {});

  /// Same as count(), invoking `visit` with the full map (indexed by pattern
  /// vertex) for each embedding.
  void enumerate(const HostGraph& g, std::span<const Vertex> images,
                 const std::function<void(std::span<const Vertex>)>& visit,
                 std::span<const Word> allowed = {});

  int order() const { return order_; }
  int pinned() const { return pinned_; }
  // Pattern vertex placed at search depth d.
  int vertex_at(int depth) const { return sequence_[depth]; }

 private:
  bool place_pins(const HostGraph& g, std::span<const Vertex> images, std::span<const Word> allowed);
  void fill_candidates(const HostGraph& g, int depth, std::span<const Word> allowed);
  std::uint64_t count_from(const HostGraph& g, int depth, std::span<const Word> allowed);
  void enumerate_from(const HostGraph& g, int depth, std::span<const Word> allowed,
                      const std::function<void(std::span<const Vertex>)>& visit);
  void reserve(const HostGraph& g);

  int order_ = 0;
  int pinned_ = 0;
  MapKind kind_;
  std::vector<int> sequence_;
  std::vector<std::uint64_t> back_adjacent_;     // per depth: mask of earlier depths adjacent
  std::vector<std::uint64_t> back_nonadjacent_;  // per depth: mask of earlier depths not adjacent

  std::size_t words_ = 0;
  std::vector<Word> candidates_;  // depth-major scratch rows
  std::vector<Word> used_;
  std::vector<Vertex> image_by_depth_;
  std::vector<Vertex> image_by_vertex_;
};

}  // namespace mono
