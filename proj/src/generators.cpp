#include "monochrome/generators.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "monochrome/errors.hpp"

namespace mono {

namespace {

void add_biclique(std::vector<Edge>& edges, std::size_t a0, std::size_t a, std::size_t b0, std::size_t b) {
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({static_cast<Vertex>(a0 + i), static_cast<Vertex>(b0 + j)});
  }
}

void check_positive(std::size_t x, const char* what) {
  if (x == 0) throw InputError(std::string(what) + " must be positive");
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("expected a positive integer, got '" + s + "'");
  }
  if (pos != s.size() || value <= 0) throw InputError("expected a positive integer, got '" + s + "'");
  return static_cast<std::size_t>(value);
}

}  // namespace

HostGraph complete_graph(std::size_t n) {
  check_positive(n, "vertex count");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return HostGraph::from_edges(n, edges);
}

HostGraph complete_bipartite(std::size_t a, std::size_t b) {
  check_positive(a, "part size");
  check_positive(b, "part size");
  std::vector<Edge> edges;
  add_biclique(edges, 0, a, a, b);
  return HostGraph::from_edges(a + b, edges);
}

HostGraph complete_tripartite(std::size_t a, std::size_t b, std::size_t c) {
  check_positive(a, "part size");
  check_positive(b, "part size");
  check_positive(c, "part size");
  std::vector<Edge> edges;
  add_biclique(edges, 0, a, a, b);
  add_biclique(edges, 0, a, a + b, c);
  add_biclique(edges, a, b, a + b, c);
  return HostGraph::from_edges(a + b + c, edges);
}

HostGraph gnp(std::size_t n, double p, std::uint64_t seed) {
  check_positive(n, "vertex count");
  if (!(p >= 0 && p <= 1)) throw InputError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return HostGraph::from_edges(n, edges);
}

HostGraph pyramid_plus_bipartite(std::size_t n) {
  check_positive(n, "pyramid size");
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t k = 0; k < n; ++k) {
    edges.push_back({0, static_cast<Vertex>(2 + k)});
    edges.push_back({1, static_cast<Vertex>(2 + k)});
  }
  add_biclique(edges, n + 2, n, 2 * n + 2, n);
  return HostGraph::from_edges(3 * n + 2, edges);
}

HostGraph k1nn(std::size_t n) { return complete_tripartite(1, n, n); }

HostGraph generate(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("generator spec must look like name:args, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const auto args = split_args(spec.substr(colon + 1));
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw InputError("generator '" + name + "' takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (name == "complete") {
    expect(1);
    return complete_graph(parse_count(args[0]));
  }
  if (name == "bipartite") {
    expect(2);
    return complete_bipartite(parse_count(args[0]), parse_count(args[1]));
  }
  if (name == "tripartite") {
    expect(3);
    return complete_tripartite(parse_count(args[0]), parse_count(args[1]), parse_count(args[2]));
  }
  if (name == "gnp") {
    expect(3);
    double p = 0;
    try {
      p = std::stod(args[1]);
    } catch (const std::exception&) {
      throw InputError("bad edge probability '" + args[1] + "'");
    }
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(args[2]);
    } catch (const std::exception&) {
      throw InputError("bad seed '" + args[2] + "'");
    }
    return gnp(parse_count(args[0]), p, seed);
  }
  if (name == "pyramid") {
    expect(1);
    return pyramid_plus_bipartite(parse_count(args[0]));
  }
  if (name == "k1nn") {
    expect(1);
    return k1nn(parse_count(args[0]));
  }
  throw InputError("unknown generator '" + name + "'");
}

}  // namespace mono
