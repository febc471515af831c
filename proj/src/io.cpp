#include "monochrome/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "monochrome/errors.hpp"

namespace mono {

namespace {

int parse_small(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(s, &pos);
    if (pos == s.size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError("bad number '" + s + "' in pattern '" + spec + "'");
}

}  // namespace

HostGraph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw InputError("line " + std::to_string(line_no) + ": expected two non-negative vertex indices");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (n == 0) throw InputError("edge list contains no edges");
  return HostGraph::from_edges(n, edges);
}

HostGraph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read graph file '" + path.string() + "'");
  return read_edge_list(in);
}

std::string edge_list_text(const HostGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  return out;
}

Pattern parse_pattern(const std::string& spec) {
  static const std::regex clique(R"(K(\d+))");
  static const std::regex cycle(R"(C(\d+))");
  static const std::regex path(R"(P(\d+))");
  static const std::regex biclique(R"(K(\d+),(\d+))");
  static const std::regex star(R"(star(\d+))");
  static const std::regex inline_edges(R"(\d+-\d+(,\d+-\d+)*)");
  std::smatch m;
  std::vector<Edge> edges;
  int order = 0;
  auto edge = [&](int a, int b) { edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)}); };
  auto check_order = [&](int v) {
    if (v < Pattern::kMinOrder || v > Pattern::kMaxOrder) {
      throw InputError("pattern '" + spec + "' must have between 2 and 8 vertices");
    }
  };
  if (std::regex_match(spec, m, biclique)) {
    const int a = parse_small(m[1], spec);
    const int b = parse_small(m[2], spec);
    if (a < 1 || b < 1) throw InputError("bipartite pattern needs positive sides");
    order = a + b;
    check_order(order);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) edge(i, a + j);
    }
  } else if (std::regex_match(spec, m, clique)) {
    order = parse_small(m[1], spec);
    check_order(order);
    for (int i = 0; i < order; ++i) {
      for (int j = i + 1; j < order; ++j) edge(i, j);
    }
  } else if (std::regex_match(spec, m, cycle)) {
    order = parse_small(m[1], spec);
    if (order < 3) throw InputError("a cycle needs at least 3 vertices");
    check_order(order);
    for (int i = 0; i < order; ++i) edge(i, (i + 1) % order);
  } else if (std::regex_match(spec, m, path)) {
    order = parse_small(m[1], spec);
    check_order(order);
    for (int i = 0; i + 1 < order; ++i) edge(i, i + 1);
  } else if (std::regex_match(spec, m, star)) {
    order = parse_small(m[1], spec) + 1;
    check_order(order);
    for (int i = 1; i < order; ++i) edge(0, i);
  } else if (std::regex_match(spec, inline_edges)) {
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto dash = item.find('-');
      const int a = parse_small(item.substr(0, dash), spec);
      const int b = parse_small(item.substr(dash + 1), spec);
      edge(a, b);
      order = std::max({order, a + 1, b + 1});
    }
    check_order(order);
  } else {
    throw InputError("unrecognised pattern '" + spec + "'");
  }
  SmallGraph g = SmallGraph::from_edges(order, edges);
  if (!g.connected()) throw InputError("pattern '" + spec + "' is not connected");
  return Pattern(std::move(g), spec);
}

StepGraphon graphon_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graphon document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("sizes") || !doc.contains("values")) {
    throw InputError("graphon document needs \"sizes\" and \"values\"");
  }
  try {
    const auto sizes = doc.at("sizes").get<std::vector<double>>();
    const auto values = doc.at("values").get<std::vector<std::vector<double>>>();
    const auto k = static_cast<Eigen::Index>(sizes.size());
    Eigen::VectorXd s(k);
    Eigen::MatrixXd w(k, k);
    if (static_cast<Eigen::Index>(values.size()) != k) throw InputError("graphon values must have one row per block");
    for (Eigen::Index a = 0; a < k; ++a) {
      s[a] = sizes[a];
      if (static_cast<Eigen::Index>(values[a].size()) != k) {
        throw InputError("graphon values row " + std::to_string(a) + " has the wrong length");
      }
      for (Eigen::Index b = 0; b < k; ++b) w(a, b) = values[a][b];
    }
    return StepGraphon(s, w);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graphon document has the wrong shape: ") + e.what());
  }
}

StepGraphon load_graphon(const std::filesystem::path& path) { return graphon_from_json(read_file(path)); }

std::string graphon_to_json(const StepGraphon& w) {
  nlohmann::json doc;
  doc["sizes"] = std::vector<double>(w.sizes().data(), w.sizes().data() + w.sizes().size());
  std::vector<std::vector<double>> rows;
  for (int a = 0; a < w.blocks(); ++a) {
    std::vector<double> row;
    for (int b = 0; b < w.blocks(); ++b) row.push_back(w.values()(a, b));
    rows.push_back(std::move(row));
  }
  doc["values"] = rows;
  return doc.dump(2) + '\n';
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t graph_hash(const HostGraph& g) {
  return fnv1a(std::to_string(g.size()) + '\n' + edge_list_text(g));
}

std::string hex64(std::uint64_t x) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << x;
  return out.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw InputError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot move output into '" + path.string() + "'");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string sample_csv(const SampleSet& samples) {
  std::ostringstream out;
  out << "rep,value\n" << std::setprecision(17);
  for (std::size_t r = 0; r < samples.values.size(); ++r) out << r << ',' << samples.values[r] << '\n';
  return out.str();
}

std::string sample_metadata_json(const SampleSet& samples, std::uint64_t graph_digest) {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["seed"] = samples.seed;
  doc["c"] = samples.c;
  doc["reps"] = samples.reps;
  doc["pattern"] = samples.pattern;
  doc["graph"] = samples.graph;
  doc["graph_hash"] = hex64(graph_digest);
  return doc.dump(2) + '\n';
}

void write_samples(const std::filesystem::path& path, const SampleSet& samples, std::uint64_t graph_digest) {
  atomic_write(path, sample_csv(samples));
  std::filesystem::path meta = path;
  meta += ".json";
  atomic_write(meta, sample_metadata_json(samples, graph_digest));
}

}  // namespace mono
