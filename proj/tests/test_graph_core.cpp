#include <doctest.h>

#include <random>
#include <set>

#include "monochrome/constructions.hpp"
#include "monochrome/counting.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/io.hpp"
#include "monochrome/subsets.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

HostGraph make(std::size_t n, std::vector<Edge> edges) { return HostGraph::from_edges(n, edges); }

SmallGraph random_small(int v, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SmallGraph g(v);
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

Pattern random_pattern(int v, std::mt19937_64& rng) {
  while (true) {
    SmallGraph g = random_small(v, 0.5, rng);
    if (g.connected()) return Pattern(g, "random");
  }
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& p) {
  SmallGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(p[e.u], p[e.v]);
  return out;
}

}  // namespace

TEST_CASE("host graph construction") {
  const HostGraph tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.edge_count() == 3);
  for (Vertex i = 0; i < 3; ++i) CHECK(tri.degree(i) == 2);

  const HostGraph dup = make(4, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.degree(0) == 1);
  CHECK(dup.degree(1) == 1);
  CHECK(dup.degree(2) == 0);
  CHECK(dup.degree(3) == 0);

  CHECK_THROWS_AS(make(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(make(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(make(0, {}), InputError);
}

TEST_CASE("host graph adjacency is symmetric with an empty diagonal") {
  const HostGraph g = gnp(70, 0.4, 3);
  for (Vertex i = 0; i < g.size(); ++i) {
    CHECK_FALSE(g.adjacent(i, i));
    std::size_t deg = 0;
    for (Vertex j = 0; j < g.size(); ++j) {
      CHECK(g.adjacent(i, j) == g.adjacent(j, i));
      deg += g.adjacent(i, j);
    }
    CHECK(deg == g.degree(i));
  }
}

TEST_CASE("automorphism counts") {
  CHECK(parse_pattern("K3").automorphisms() == 6);
  CHECK(parse_pattern("K1,2").automorphisms() == 2);
  CHECK(parse_pattern("C4").automorphisms() == 8);
  CHECK(automorphism_count(parse_pattern("C4").graph()) == oracle::automorphisms(parse_pattern("C4").graph()));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Pattern h = random_pattern(2 + trial % 6, rng);
    CHECK(h.automorphisms() == oracle::automorphisms(h.graph()));
  }
}

TEST_CASE("pattern validation") {
  CHECK_THROWS_AS(Pattern(SmallGraph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}})), InputError);
  CHECK_THROWS_AS(Pattern(SmallGraph(1)), InputError);
  CHECK_THROWS_AS(parse_pattern("K9"), InputError);
}

TEST_CASE("injective homomorphism and copy counts") {
  const Pattern k2 = parse_pattern("K2");
  const Pattern k3 = parse_pattern("K3");
  const Pattern star = parse_pattern("K1,2");
  CHECK(count_injective_homs(k2.graph(), complete_graph(3)) == 6);
  CHECK(count_injective_homs(k3.graph(), complete_graph(4)) == oracle::maps(k3.graph(), complete_graph(4), oracle::Kind::injective));
  CHECK(count_injective_homs(k3.graph(), complete_graph(4)) == 24);
  CHECK(count_injective_homs(star.graph(), make(3, {{0, 1}, {1, 2}})) == 2);

  CHECK(count_copies(k3, complete_graph(4)) == 4);
  CHECK(count_copies(k2, complete_graph(3)) == 3);
  CHECK(count_copies(k3, complete_bipartite(2, 2)) == 0);
  CHECK(count_injective_homs(parse_pattern("K4").graph(), complete_graph(3)) == 0);
}

TEST_CASE("counts agree with exhaustive enumeration of tuples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 6;
    const HostGraph g = gnp(n, 0.55, 100 + trial);
    const Pattern h = random_pattern(2 + trial % 3, rng);
    CHECK(count_injective_homs(h.graph(), g) == oracle::maps(h.graph(), g, oracle::Kind::injective));
    CHECK(count_homomorphisms(h.graph(), g) == oracle::maps(h.graph(), g, oracle::Kind::hom));
    CHECK(count_induced_maps(h.graph(), g) == oracle::maps(h.graph(), g, oracle::Kind::induced));
    CHECK(serial::count_injective_homs(h.graph(), g) == count_injective_homs(h.graph(), g));
  }
}

TEST_CASE("copy counts are integral") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const HostGraph g = gnp(6 + trial % 7, 0.5, 300 + trial);
    const Pattern h = random_pattern(2 + trial % 4, rng);
    CHECK(count_injective_homs(h.graph(), g) % h.automorphisms() == 0);
  }
}

TEST_CASE("restricting images to a vertex set counts inside the induced subgraph") {
  const HostGraph g = gnp(40, 0.5, 8);
  std::vector<Word> allowed(g.words(), 0);
  std::vector<Vertex> members;
  for (Vertex x = 0; x < g.size(); x += 3) {
    allowed[x >> 6] |= Word{1} << (x & 63);
    members.push_back(x);
  }
  const HostGraph sub = to_host(induced_small(g, members));
  for (const char* spec : {"K2", "K3", "K1,2", "C4"}) {
    const Pattern h = parse_pattern(spec);
    CHECK(count_embeddings(h.graph(), g, MapKind::injective, allowed) == count_injective_homs(h.graph(), sub));
  }
}

TEST_CASE("induced and homomorphism densities") {
  const Pattern k2 = parse_pattern("K2");
  CHECK(induced_density(k2.graph(), complete_graph(7)) == doctest::Approx(1.0));
  CHECK(induced_density(SmallGraph(2), complete_graph(7)) == 0.0);
  const HostGraph c4 = to_host(parse_pattern("C4").graph());
  CHECK(induced_density(parse_pattern("K1,2").graph(), c4) == doctest::Approx(1.0 / 3).epsilon(1e-14));

  CHECK(homomorphism_density(k2.graph(), complete_graph(2)) == doctest::Approx(0.5));
  CHECK(homomorphism_density(k2.graph(), complete_graph(9)) == doctest::Approx(8.0 / 9));
  CHECK(homomorphism_density(parse_pattern("K3").graph(), complete_bipartite(2, 2)) == 0.0);
}

TEST_CASE("induced densities over all classes on v vertices sum to one") {
  for (int v = 2; v <= 4; ++v) {
    std::set<std::uint64_t> seen;
    std::vector<SmallGraph> classes;
    const int pairs = v * (v - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      SmallGraph f(v);
      int bit = 0;
      for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b, ++bit) {
          if ((mask >> bit) & 1) f.add_edge(a, b);
        }
      }
      if (seen.insert(oracle::canonical(f)).second) classes.push_back(f);
    }
    for (std::uint64_t seed : {1, 2, 3}) {
      const HostGraph g = gnp(9, 0.3 + 0.2 * seed, seed);
      double total = 0;
      for (const SmallGraph& f : classes) {
        total += std::tgamma(v + 1.0) / static_cast<double>(oracle::automorphisms(f)) * induced_density(f, g);
      }
      CHECK(std::abs(total - 1) < 1e-12);
    }
  }
}

TEST_CASE("canonical codes separate exactly the isomorphism classes") {
  std::mt19937_64 rng(21);
  std::vector<SmallGraph> graphs;
  for (int trial = 0; trial < 80; ++trial) graphs.push_back(random_small(5 + trial % 3, 0.5, rng));
  for (const SmallGraph& g : graphs) {
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(canonical_code(relabel(g, p)) == canonical_code(g));
  }
  for (std::size_t a = 0; a < graphs.size(); ++a) {
    for (std::size_t b = a + 1; b < graphs.size(); ++b) {
      if (graphs[a].order() != graphs[b].order()) continue;
      CHECK((canonical_code(graphs[a]) == canonical_code(graphs[b])) ==
            (oracle::canonical(graphs[a]) == oracle::canonical(graphs[b])));
    }
  }
}

TEST_CASE("supergraph families") {
  const auto k3 = supergraph_family(parse_pattern("K3"));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].pattern_copies == 1);

  const auto star = supergraph_family(parse_pattern("K1,2"));
  REQUIRE(star.size() == 2);
  CHECK(star[0].graph.edge_count() == 2);
  CHECK(star[0].pattern_copies == 1);
  CHECK(star[1].graph.edge_count() == 3);
  CHECK(star[1].pattern_copies == 3);
  CHECK(star[1].pattern_copies == count_copies(parse_pattern("K1,2"), complete_graph(3)));

  const auto k2 = supergraph_family(parse_pattern("K2"));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].pattern_copies == 1);

  // Every graph containing P4 on 4 vertices, checked class by class.
  const Pattern p4 = parse_pattern("P4");
  std::set<std::uint64_t> expected;
  const std::vector<Edge> extra{{0, 2}, {0, 3}, {1, 3}};
  for (int mask = 0; mask < 8; ++mask) {
    SmallGraph f = p4.graph();
    for (int e = 0; e < 3; ++e) {
      if ((mask >> e) & 1) f.add_edge(static_cast<int>(extra[e].u), static_cast<int>(extra[e].v));
    }
    expected.insert(oracle::canonical(f));
  }
  const auto family = supergraph_family(p4);
  CHECK(family.size() == expected.size());
  for (const auto& f : family) {
    CHECK(f.pattern_copies * p4.automorphisms() == oracle::maps(p4.graph(), to_host(f.graph), oracle::Kind::injective));
    CHECK(f.automorphisms == oracle::automorphisms(f.graph));
  }
}

TEST_CASE("joins") {
  const SmallGraph j2 = join_graph(parse_pattern("K2"), 0, 1);
  CHECK(j2.order() == 2);
  CHECK(j2.edge_count() == 1);

  const SmallGraph j3 = join_graph(parse_pattern("K3"), 0, 1);
  CHECK(j3.order() == 4);
  CHECK(j3.edge_count() == 5);

  const SmallGraph js = join_graph(parse_pattern("K1,2"), 1, 2);
  CHECK(js.order() == 4);
  CHECK(js.edge_count() == 4);
  CHECK(canonical_code(js) == canonical_code(parse_pattern("C4").graph()));

  CHECK_THROWS_AS(join_graph(parse_pattern("K3"), 1, 1), InputError);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Pattern h = random_pattern(3 + trial % 3, rng);
    for (int a = 0; a < h.order(); ++a) {
      for (int b = 0; b < h.order(); ++b) {
        if (a == b) continue;
        const SmallGraph j = join_graph(h, a, b);
        CHECK(j.order() == 2 * h.order() - 2);
        CHECK(j.edge_count() == 2 * h.edge_count() - (h.graph().adjacent(a, b) ? 1 : 0));
        const PivotList pivots{{{a, b}, {b, a}}};
        CHECK(canonical_code(cycle_of_pattern(h, pivots)) == canonical_code(j));
      }
    }
  }
}

TEST_CASE("cycles of a pattern") {
  const SmallGraph k2 = cycle_of_pattern(parse_pattern("K2"), PivotList{{{0, 1}, {1, 0}}});
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(cycle_multigraph(parse_pattern("K2"), PivotList{{{0, 1}, {1, 0}}}).edges.size() == 2);

  const Pattern k3 = parse_pattern("K3");
  CHECK(canonical_code(cycle_of_pattern(k3, PivotList{{{0, 1}, {1, 0}}})) == canonical_code(join_graph(k3, 0, 1)));

  // Five copies of a 2-star chained leaf to leaf form a 10-cycle.
  const Pattern star = parse_pattern("K1,2");
  PivotList leaves;
  for (int a = 0; a < 5; ++a) leaves.pivots.emplace_back(1, 2);
  const SmallGraph ring = cycle_of_pattern(star, leaves);
  CHECK(ring.order() == 10);
  CHECK(ring.edge_count() == 10);
  for (int x = 0; x < 10; ++x) CHECK(ring.degree(x) == 2);
  CHECK(ring.connected());

  CHECK(all_pivot_lists(3, 2).size() == 36);
  CHECK_THROWS_AS(cycle_multigraph(star, PivotList{{{0, 0}, {1, 2}}}), InputError);
}

TEST_CASE("two-point counts") {
  const HostGraph g = gnp(9, 0.5, 17);
  const Pattern star = parse_pattern("K1,2");
  for (Vertex i = 0; i < g.size(); ++i) {
    for (Vertex j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      std::uint64_t common = 0;
      for (Vertex z = 0; z < g.size(); ++z) common += g.adjacent(i, z) && g.adjacent(j, z);
      CHECK(two_point_count(star, 1, 2, i, j, g) == common);
      CHECK(two_point_count(parse_pattern("K2"), 0, 1, i, j, g) == (g.adjacent(i, j) ? 1U : 0U));
    }
  }
  CHECK(two_point_count(parse_pattern("K3"), 0, 1, 0, 1, complete_graph(4)) == 2);
  CHECK_THROWS_AS(two_point_count(star, 1, 1, 0, 1, g), InputError);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    const Pattern h = random_pattern(3 + trial % 2, rng);
    const HostGraph host = gnp(7, 0.6, 40 + trial);
    for (int u = 0; u < h.order(); ++u) {
      for (int v = 0; v < h.order(); ++v) {
        if (u == v) continue;
        for (Vertex i = 0; i < host.size(); ++i) {
          for (Vertex j = 0; j < host.size(); ++j) {
            if (i == j) continue;
            const auto m = two_point_count(h, u, v, i, j, host);
            CHECK(m == oracle::two_point(h.graph(), u, v, i, j, host));
            CHECK(two_point_count(h, v, u, j, i, host) == m);
          }
        }
      }
    }
  }
}

TEST_CASE("connected subsets") {
  const HostGraph g = gnp(11, 0.35, 6);
  for (int k = 1; k <= 4; ++k) {
    std::set<std::vector<Vertex>> seen;
    std::size_t visits = 0;
    for_each_connected_subset(g, k, [&](std::span<const Vertex> s) {
      ++visits;
      CHECK(std::is_sorted(s.begin(), s.end()));
      seen.emplace(s.begin(), s.end());
    });
    CHECK(visits == seen.size());
    std::size_t expected = 0;
    for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<Vertex> s;
      for (Vertex x = 0; x < g.size(); ++x) {
        if ((mask >> x) & 1U) s.push_back(x);
      }
      expected += induced_small(g, s).connected();
    }
    CHECK(seen.size() == expected);
  }

  const Pattern k3 = parse_pattern("K3");
  const auto profile = subset_profile(k3, complete_graph(8));
  CHECK(profile.size() == 56);
  CHECK(profile.total_copies() == 56);
  CHECK_THROWS_AS(subset_profile(k3, complete_graph(8), 10), BudgetExceeded);
}

TEST_CASE("pattern mini-language") {
  CHECK(parse_pattern("K4").edge_count() == 6);
  CHECK(parse_pattern("C5").edge_count() == 5);
  CHECK(parse_pattern("P3").edge_count() == 2);
  CHECK(parse_pattern("K2,3").order() == 5);
  CHECK(parse_pattern("K2,3").edge_count() == 6);
  CHECK(parse_pattern("star3").automorphisms() == 6);
  CHECK(parse_pattern("0-1,1-2,2-0").automorphisms() == 6);
  CHECK_THROWS_AS(parse_pattern("0-1,2-3"), InputError);
  CHECK_THROWS_AS(parse_pattern("Q7"), InputError);
  CHECK_THROWS_AS(parse_pattern("C2"), InputError);
}
