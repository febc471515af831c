#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "monochrome/coloring.hpp"
#include "monochrome/graph.hpp"
#include "monochrome/graphon.hpp"

namespace mono {

inline constexpr int kReportSchemaVersion = 1;

/// "u v" per line, 0-based; '#' lines and blank lines are skipped. The vertex
/// count is one more than the largest index.
HostGraph read_edge_list(std::istream& in);
HostGraph read_edge_list_file(const std::filesystem::path& path);
std::string edge_list_text(const HostGraph& g);

/// K<s>, C<k>, P<k>, K<a>,<b>, star<k> (k leaves), or an inline edge list
/// such as "0-1,1-2".
Pattern parse_pattern(const std::string& spec);

/// {"sizes": [...], "values": [[...], ...]}, validated on load.
StepGraphon graphon_from_json(const std::string& text);
StepGraphon load_graphon(const std::filesystem::path& path);
std::string graphon_to_json(const StepGraphon& w);

std::uint64_t fnv1a(const std::string& bytes);
/// FNV-1a of the canonical edge-list text.
std::uint64_t graph_hash(const HostGraph& g);
std::string hex64(std::uint64_t x);

/// Writes to a sibling temporary file and renames it into place.
void atomic_write(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

/// "rep,value" CSV.
std::string sample_csv(const SampleSet& samples);
/// Sidecar metadata: seed, c, reps, pattern, graph descriptor and hash.
std::string sample_metadata_json(const SampleSet& samples, std::uint64_t graph_digest);
/// Writes `path` and `path` + ".json".
void write_samples(const std::filesystem::path& path, const SampleSet& samples, std::uint64_t graph_digest);

}  // namespace mono
