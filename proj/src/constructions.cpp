#include "monochrome/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "monochrome/counting.hpp"
#include "monochrome/errors.hpp"

namespace mono {

namespace {

std::uint64_t count_automorphisms_from(const SmallGraph& g, int k, std::vector<int>& image, std::uint64_t used) {
  const int v = g.order();
  if (k == v) return 1;
  std::uint64_t total = 0;
  for (int y = 0; y < v; ++y) {
    if ((used >> y) & 1U) continue;
    if (g.degree(y) != g.degree(k)) continue;
    bool ok = true;
    for (int e = 0; e < k && ok; ++e) ok = g.adjacent(k, e) == g.adjacent(y, image[e]);
    if (!ok) continue;
    image[k] = y;
    total += count_automorphisms_from(g, k + 1, image, used | (std::uint64_t{1} << y));
  }
  return total;
}

// Stable colour refinement; returns a colour per vertex whose numbering is
// derived only from isomorphism-invariant signatures.
std::vector<int> refine_colours(const SmallGraph& g) {
  const int v = g.order();
  std::vector<int> colour(v);
  for (int x = 0; x < v; ++x) colour[x] = g.degree(x);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(v);
    for (int x = 0; x < v; ++x) {
      signature[x].push_back(colour[x]);
      std::vector<int> around;
      for (std::uint64_t m = g.neighbors(x); m; m &= m - 1) around.push_back(colour[std::countr_zero(m)]);
      std::sort(around.begin(), around.end());
      signature[x].insert(signature[x].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> index;
    for (const auto& s : signature) index.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : index) id = next++;
    for (int x = 0; x < v; ++x) colour[x] = index[signature[x]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

struct CanonicalSearch {
  const SmallGraph& g;
  int v;
  int bits;
  std::vector<int> cell_of_position;  // colour required at each position
  std::vector<int> colour;
  std::vector<int> placed;            // vertex at each position
  std::uint64_t best = ~std::uint64_t{0};

  void search(int pos, std::uint64_t used, std::uint64_t prefix) {
    if (pos == v) {
      best = std::min(best, prefix);
      return;
    }
    for (int x = 0; x < v; ++x) {
      if ((used >> x) & 1U || colour[x] != cell_of_position[pos]) continue;
      std::uint64_t code = prefix;
      for (int i = 0; i < pos; ++i) {
        if (g.adjacent(placed[i], x)) {
          const int idx = pos * (pos - 1) / 2 + i;
          code |= std::uint64_t{1} << (bits - 1 - idx);
        }
      }
      const int known = (pos + 1) * pos / 2;
      const int shift = bits - known;
      if (best != ~std::uint64_t{0} && (code >> shift) > (best >> shift)) continue;
      placed[pos] = x;
      search(pos + 1, used | (std::uint64_t{1} << x), code);
    }
  }
};

}  // namespace

std::uint64_t automorphism_count(const SmallGraph& g) {
  std::vector<int> image(static_cast<std::size_t>(g.order()), 0);
  return count_automorphisms_from(g, 0, image, 0);
}

std::uint64_t canonical_code(const SmallGraph& g) {
  const int v = g.order();
  if (v > 11) throw InputError("canonical_code supports at most 11 vertices");
  if (v <= 1) return 0;
  CanonicalSearch s{g, v, v * (v - 1) / 2, {}, refine_colours(g), std::vector<int>(v, 0)};
  std::vector<int> sorted = s.colour;
  std::sort(sorted.begin(), sorted.end());
  s.cell_of_position = sorted;
  s.search(0, 0, 0);
  return s.best;
}

std::vector<SupergraphClass> supergraph_family(const Pattern& pattern) {
  const SmallGraph& h = pattern.graph();
  const int v = h.order();
  std::vector<Edge> missing;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (!h.adjacent(a, b)) missing.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  std::vector<SupergraphClass> classes;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  const std::uint64_t subsets = std::uint64_t{1} << missing.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    SmallGraph f = h;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const Edge& e = missing[std::countr_zero(m)];
      f.add_edge(static_cast<int>(e.u), static_cast<int>(e.v));
    }
    const std::uint64_t code = canonical_code(f);
    if (seen.contains(code)) continue;
    seen.emplace(code, classes.size());
    const std::uint64_t homs = serial::count_injective_homs(h, to_host(f));
    classes.push_back({f, homs / pattern.automorphisms(), automorphism_count(f), code});
  }
  std::sort(classes.begin(), classes.end(), [](const SupergraphClass& x, const SupergraphClass& y) {
    if (x.graph.edge_count() != y.graph.edge_count()) return x.graph.edge_count() < y.graph.edge_count();
    return x.code < y.code;
  });
  return classes;
}

SmallGraph join_graph(const Pattern& pattern, int a, int b) {
  const int v = pattern.order();
  if (a == b) throw InputError("join needs two distinct vertices");
  if (a < 0 || b < 0 || a >= v || b >= v) throw InputError("join vertices out of range");
  std::vector<int> second(v);
  int next = v;
  for (int s = 0; s < v; ++s) second[s] = (s == a) ? a : (s == b) ? b : next++;
  SmallGraph out(2 * v - 2);
  for (const Edge& e : pattern.graph().edges()) {
    out.add_edge(static_cast<int>(e.u), static_cast<int>(e.v));
    out.add_edge(second[e.u], second[e.v]);
  }
  return out;
}

std::vector<PivotList> all_pivot_lists(int order, int g) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < order; ++u) {
    for (int v = 0; v < order; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  std::vector<PivotList> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(g), 0);
  while (true) {
    PivotList j;
    for (auto d : digit) j.pivots.push_back(pairs[d]);
    out.push_back(std::move(j));
    int pos = g - 1;
    while (pos >= 0 && ++digit[pos] == pairs.size()) digit[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

MultiEdgeGraph cycle_multigraph(const Pattern& pattern, const PivotList& pivots) {
  const int v = pattern.order();
  const int g = static_cast<int>(pivots.length());
  if (g < 2) throw InputError("a cycle of H needs at least two pivots");
  for (auto [u, w] : pivots.pivots) {
    if (u == w || u < 0 || w < 0 || u >= v || w >= v) throw InputError("invalid pivot pair");
  }
  if (g * (v - 1) > SmallGraph::kMaxOrder) throw InputError("cycle of H too large");
  std::vector<int> parent(static_cast<std::size_t>(g * v));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < g; ++a) {
    const int next = (a + 1) % g;
    const int x = find(a * v + pivots.pivots[a].second);
    const int y = find(next * v + pivots.pivots[next].first);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<int> label(static_cast<std::size_t>(g * v), -1);
  int count = 0;
  for (int node = 0; node < g * v; ++node) {
    const int r = find(node);
    if (label[r] < 0) label[r] = count++;
  }
  MultiEdgeGraph out;
  out.order = count;
  for (int a = 0; a < g; ++a) {
    for (const Edge& e : pattern.graph().edges()) {
      out.edges.push_back({static_cast<Vertex>(label[find(a * v + static_cast<int>(e.u))]),
                           static_cast<Vertex>(label[find(a * v + static_cast<int>(e.v))])});
    }
  }
  return out;
}

SmallGraph cycle_of_pattern(const Pattern& pattern, const PivotList& pivots) {
  const MultiEdgeGraph m = cycle_multigraph(pattern, pivots);
  return SmallGraph::from_edges(m.order, m.edges);
}

}  // namespace mono
