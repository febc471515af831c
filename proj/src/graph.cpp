#include "monochrome/graph.hpp"

#include <algorithm>
#include <string>

#include "monochrome/constructions.hpp"
#include "monochrome/errors.hpp"

namespace mono {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

HostGraph HostGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InputError("host graph needs at least one vertex");
  HostGraph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.bits_.assign(n * g.words_, 0);
  g.degree_.assign(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge " + pair_text(e) + " references a vertex >= " + std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop " + pair_text(e) + " is not allowed");
    if (g.adjacent(e.u, e.v)) continue;
    g.bits_[e.u * g.words_ + (e.v >> 6)] |= Word{1} << (e.v & 63);
    g.bits_[e.v * g.words_ + (e.u >> 6)] |= Word{1} << (e.u & 63);
    ++g.degree_[e.u];
    ++g.degree_[e.v];
    ++g.edge_count_;
  }
  g.all_.assign(g.words_, ~Word{0});
  if (n % 64 != 0) g.all_.back() = (Word{1} << (n % 64)) - 1;
  return g;
}

std::vector<Edge> HostGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex i = 0; i < n_; ++i) {
    auto r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = r[w];
      while (bits) {
        Vertex j = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (j > i) out.push_back({i, j});
      }
    }
  }
  return out;
}

SmallGraph::SmallGraph(int order) : order_(order), adj_(static_cast<std::size_t>(order), 0) {
  if (order < 0 || order > kMaxOrder) {
    throw InputError("small graph order " + std::to_string(order) + " outside [0, 64]");
  }
}

SmallGraph SmallGraph::from_edges(int order, std::span<const Edge> edges) {
  SmallGraph g(order);
  for (const Edge& e : edges) g.add_edge(static_cast<int>(e.u), static_cast<int>(e.v));
  return g;
}

void SmallGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= order_ || b >= order_) {
    throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                     ") outside vertex range of a " + std::to_string(order_) + "-vertex graph");
  }
  if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
  adj_[a] |= std::uint64_t{1} << b;
  adj_[b] |= std::uint64_t{1} << a;
}

std::size_t SmallGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::vector<Edge> SmallGraph::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (adjacent(a, b)) out.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  return out;
}

bool SmallGraph::connected() const {
  if (order_ == 0) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == order_;
}

Pattern::Pattern(SmallGraph graph, std::string name) : graph_(std::move(graph)), name_(std::move(name)) {
  if (graph_.order() < kMinOrder || graph_.order() > kMaxOrder) {
    throw InputError("pattern must have between 2 and 8 vertices, got " +
                     std::to_string(graph_.order()));
  }
  if (!graph_.connected()) throw InputError("pattern must be connected");
  aut_ = automorphism_count(graph_);
}

HostGraph to_host(const SmallGraph& g) {
  auto edges = g.edges();
  return HostGraph::from_edges(static_cast<std::size_t>(std::max(g.order(), 1)), edges);
}

SmallGraph induced_small(const HostGraph& g, std::span<const Vertex> vertices) {
  SmallGraph out(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.adjacent(vertices[a], vertices[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return out;
}

}  // namespace mono
