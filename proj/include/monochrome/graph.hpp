#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mono {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Dense undirected simple graph with one adjacency bit row per vertex.
///
/// Rows are padded to a whole number of 64-bit words; padding bits are always
/// zero, so row intersections can be popcounted directly.
class HostGraph {
 public:
  HostGraph() = default;

  /// Builds the graph from an edge list. Duplicate pairs (in either
  /// orientation) collapse to one edge. Throws InputError on a self-loop or an
  /// out-of-range index, naming the offending pair.
  static HostGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex i, Vertex j) const {
    return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1U;
  }
  std::size_t degree(Vertex i) const { return degree_[i]; }
  std::span<const Word> row(Vertex i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_, words_};
  }
  // All n vertex bits set, padding clear.
  std::span<const Word> all() const { return all_; }

  std::vector<Edge> edges() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Word> bits_;
  std::vector<Word> all_;
  std::vector<std::size_t> degree_;
};

/// Small labeled simple graph (at most 64 vertices), adjacency as bit masks.
/// Used for patterns and for the composite graphs built from them.
class SmallGraph {
 public:
  static constexpr int kMaxOrder = 64;

  SmallGraph() = default;
  explicit SmallGraph(int order);
  static SmallGraph from_edges(int order, std::span<const Edge> edges);

  int order() const { return order_; }
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1U; }
  std::uint64_t neighbors(int a) const { return adj_[a]; }
  int degree(int a) const { return std::popcount(adj_[a]); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
  bool connected() const;

  void add_edge(int a, int b);

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int order_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// The pattern H: a connected simple graph on 2..8 vertices with its
/// automorphism count cached at construction.
class Pattern {
 public:
  static constexpr int kMinOrder = 2;
  static constexpr int kMaxOrder = 8;

  explicit Pattern(SmallGraph graph, std::string name = {});

  const SmallGraph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  std::uint64_t automorphisms() const { return aut_; }
  const std::string& name() const { return name_; }

 private:
  SmallGraph graph_;
  std::uint64_t aut_ = 1;
  std::string name_;
};

HostGraph to_host(const SmallGraph& g);
SmallGraph induced_small(const HostGraph& g, std::span<const Vertex> vertices);

}  // namespace mono
