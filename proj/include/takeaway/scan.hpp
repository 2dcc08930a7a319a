#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <tuple>
#include <vector>

#include "takeaway/canon.hpp"
#include "takeaway/engine.hpp"
#include "takeaway/formulas.hpp"
#include "takeaway/report.hpp"

namespace takeaway {

struct SubgraphClass {
  CanonKey key;
  Graph graph;
};

// Every subgraph of g (any vertex subset, any subset of the edges among it),
// one representative per isomorphism class, sorted by key. Built as the
// closure of g under game moves, one size level at a time with each level
// expanded in parallel.
std::vector<SubgraphClass> subgraph_classes(const Graph& g);
// Serial reference: enumerate vertex masks and edge masks directly.
std::vector<SubgraphClass> subgraph_classes_reference(const Graph& g);

// True iff deleting some edge instance of h leaves a position of value 0.
bool has_zero_edge_move(const Graph& h, GrundyTable& table, const EngineOptions& options = {});

struct Phi2Scan {
  std::size_t classes = 0;       // subgraph classes enumerated
  std::size_t phi2 = 0;          // of which phi = 2
  std::vector<Graph> counterexamples;
};
Phi2Scan scan_phi2(const Graph& host, GrundyTable& table, const EngineOptions& options = {});
VerificationReport scan_phi2_subgraphs(std::uint32_t n, GrundyTable& table, const EngineOptions& options = {});

struct OptionTable {
  std::string family;
  NimValue value = 0;
  std::vector<NimValue> vertex;                            // by vertex index
  std::vector<std::tuple<Vertex, Vertex, NimValue>> edge;  // sorted by (u, v)
};

OptionTable option_table(const Graph& g, GrundyTable& table, const EngineOptions& options = {});
std::string format_option_table(const OptionTable& t);
OptionTable parse_option_table(const std::string& text);
OptionTable read_option_table(const std::filesystem::path& path);
// Human-readable differences, empty when equal.
std::vector<std::string> diff_option_tables(const OptionTable& expected, const OptionTable& observed);

std::filesystem::path default_data_dir();
std::filesystem::path fan_golden_path(const std::filesystem::path& data_dir, std::uint32_t n, FanVariant v);

struct FanTableResult {
  OptionTable observed;
  VerificationReport report;
};
FanTableResult fan_option_table(std::uint32_t n, FanVariant variant, GrundyTable& table,
                                const EngineOptions& options, const std::filesystem::path& data_dir);

VerificationReport check_fstar_minus_spokes(std::uint32_t n, GrundyTable& table, const EngineOptions& options = {});

}  // namespace takeaway
