#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "takeaway/cache.hpp"
#include "takeaway/canon.hpp"
#include "takeaway/engine.hpp"
#include "takeaway/families.hpp"
#include "takeaway/graph_io.hpp"
#include "takeaway/reducer.hpp"
#include "takeaway/scan.hpp"
#include "takeaway/verify.hpp"

namespace {

using namespace takeaway;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudget = 3 };

struct Globals {
  std::string format = "text";
  std::string cache_path;
  std::uint64_t budget = EngineOptions{}.node_budget;
  bool no_timestamp = false;
  bool serial = false;
  std::string data_dir;

  bool json() const { return format == "json"; }
  EngineOptions engine() const {
    EngineOptions o;
    o.node_budget = budget;
    return o;
  }
  std::filesystem::path data() const { return data_dir.empty() ? default_data_dir() : std::filesystem::path(data_dir); }
};

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Graph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return read_graph_file(path);
}

void emit(const Globals& g, ordered_json record) {
  if (!g.no_timestamp) record["timestamp"] = utc_now();
  std::cout << record.dump(2) << '\n';
}

ordered_json stats_json(const GrundyTable& table) {
  const auto s = table.stats();
  return {{"hits", s.hits}, {"misses", s.misses}, {"inserts", s.inserts}, {"table_size", table.size()}};
}

// Loads the cache before the command and writes it back after.
class CacheScope {
 public:
  CacheScope(const Globals& g, GrundyTable& table) : g_(g), table_(table) {
    if (!g_.cache_path.empty() && std::filesystem::exists(g_.cache_path)) cache_load(table_, g_.cache_path);
    table_.reset_stats();
  }
  void save() const {
    if (!g_.cache_path.empty()) cache_save(table_, g_.cache_path);
  }

 private:
  const Globals& g_;
  GrundyTable& table_;
};

int cmd_grundy(const Globals& g, const std::string& input, bool all_moves) {
  GrundyTable table;
  CacheScope cache(g, table);
  const Graph graph = load_graph(input);
  const auto opts = g.engine();
  const auto moves = g.serial ? move_values(graph, table, opts) : move_values_parallel(graph, table, opts);
  std::vector<NimValue> values;
  for (const auto& m : moves) values.push_back(m.value);
  const NimValue value = mex(values);
  cache.save();
  if (g.json()) {
    ordered_json rec;
    rec["input"] = input;
    rec["value"] = value;
    rec["phi"] = phi(graph);
    rec["moves"] = ordered_json::array();
    rec["winning_moves"] = ordered_json::array();
    for (const auto& m : moves) {
      rec["moves"].push_back({{"move", to_string(m.move)}, {"value", m.value}});
      if (m.value == 0) rec["winning_moves"].push_back(to_string(m.move));
    }
    rec["stats"] = stats_json(table);
    emit(g, rec);
    return kOk;
  }
  std::cout << "input " << input << "\nvalue " << value << "\nphi " << phi(graph) << '\n';
  for (const auto& m : moves) {
    if (all_moves) std::cout << "move " << to_string(m.move) << " -> " << m.value << '\n';
  }
  for (const auto& m : moves) {
    if (m.value == 0) std::cout << "winning " << to_string(m.move) << '\n';
  }
  return kOk;
}

int cmd_reduce(const Globals& g, const std::string& input, const std::vector<std::string>& involutions,
               const std::string& output) {
  Graph graph = load_graph(input);
  std::vector<Involution> taus;
  for (const auto& path : involutions) taus.push_back(read_involution_file(path));
  if (!taus.empty()) graph = apply_involutions(graph, taus);
  const auto result = reduce_logged(graph);
  std::ostringstream comment;
  comment << "reduced from " << input;
  const std::string text = format_graph(result.graph, comment.str());
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write " + output);
    out << text;
  }
  if (g.json()) {
    ordered_json rec;
    rec["input"] = input;
    rec["vertices"] = result.graph.vertex_count();
    rec["edges"] = result.graph.edge_count();
    rec["key"] = canonical_key(result.graph).hex();
    rec["kept"] = result.kept;
    rec["log"] = ordered_json::array();
    for (const auto& c : result.log) rec["log"].push_back({{"anchor", c.anchor}, {"piece_size", c.piece_size}});
    rec["graph"] = text;
    emit(g, rec);
    return kOk;
  }
  for (const auto& c : result.log) std::cout << "# cancel at " << c.anchor << ", piece size " << c.piece_size << '\n';
  if (output.empty()) std::cout << text;
  return kOk;
}

int cmd_family(const Globals& g, const std::string& spec_text, const std::string& output) {
  const auto spec = parse_family_spec(spec_text);
  const Graph graph = generate(spec);
  const std::string text = format_graph(graph, format_family_spec(spec));
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write " + output);
    out << text;
  }
  if (g.json()) {
    ordered_json rec;
    rec["input"] = spec_text;
    rec["vertices"] = graph.vertex_count();
    rec["edges"] = graph.edge_count();
    rec["phi"] = phi(graph);
    rec["graph"] = text;
    emit(g, rec);
  } else if (output.empty()) {
    std::cout << text;
  }
  return kOk;
}

ordered_json report_json(const VerificationReport& r, bool timing) {
  ordered_json rec = {{"claim", r.claim_id},    {"statement", r.statement}, {"status", to_string(r.status)},
                      {"expected", r.expected}, {"observed", r.observed},   {"reason", r.reason},
                      {"instances", r.instances}};
  if (timing) rec["runtime_seconds"] = r.runtime_seconds;
  rec["details"] = r.details;
  return rec;
}

void print_report(const VerificationReport& r, bool timing) {
  std::cout << to_string(r.status) << ' ' << r.claim_id << ": " << r.statement << '\n';
  std::cout << "  expected: " << r.expected << "\n  observed: " << r.observed << '\n';
  std::cout << "  instances: " << r.instances;
  if (timing) std::cout << ", runtime " << r.runtime_seconds << " s";
  std::cout << '\n';
  if (!r.reason.empty()) std::cout << "  reason: " << r.reason << '\n';
  for (const auto& d : r.details) std::cout << "  - " << d << '\n';
}

int finish_reports(const Globals& g, const std::vector<VerificationReport>& reports, const std::string& input) {
  bool failed = false;
  for (const auto& r : reports) failed |= r.status == ClaimStatus::Fail;
  if (g.json()) {
    ordered_json rec;
    rec["input"] = input;
    rec["reports"] = ordered_json::array();
    for (const auto& r : reports) rec["reports"].push_back(report_json(r, !g.no_timestamp));
    emit(g, rec);
  } else {
    for (const auto& r : reports) print_report(r, !g.no_timestamp);
  }
  return failed ? kVerifyFailed : kOk;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& ids, bool list, double time_limit) {
  if (list) {
    for (const auto& c : claims()) {
      std::cout << c.id << (c.acceptance ? "" : " (extra)") << ": " << c.statement << '\n';
    }
    return kOk;
  }
  GrundyTable table;
  CacheScope cache(g, table);
  VerifyOptions opts;
  opts.engine = g.engine();
  opts.data_dir = g.data();
  opts.time_limit_seconds = time_limit;
  const auto reports = verify_suite(ids, table, opts);
  cache.save();
  return finish_reports(g, reports, "verify");
}

int cmd_scan(const Globals& g, std::optional<std::uint32_t> n, const std::string& host) {
  GrundyTable table;
  CacheScope cache(g, table);
  VerificationReport r;
  if (!host.empty()) {
    const auto scan = scan_phi2(load_graph(host), table, g.engine());
    r.claim_id = "phi2-edge-scan";
    r.statement = "every phi = 2 subgraph of " + host + " has an edge move to value 0";
    r.expected = "no counterexample";
    r.instances = scan.phi2;
    r.observed = std::to_string(scan.classes) + " classes, " + std::to_string(scan.phi2) + " with phi 2, " +
                 std::to_string(scan.counterexamples.size()) + " counterexamples";
    for (const auto& c : scan.counterexamples) r.details.push_back(format_graph(c));
    r.status = scan.counterexamples.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  } else {
    if (!n || *n < 3) throw InputError("scan needs n >= 3 or --graph");
    r = scan_phi2_subgraphs(*n, table, g.engine());
  }
  cache.save();
  if (r.status == ClaimStatus::Skipped && r.reason.find("budget") != std::string::npos) {
    finish_reports(g, {r}, "scan");
    return kBudget;
  }
  return finish_reports(g, {r}, "scan");
}

int cmd_fan_table(const Globals& g, std::uint32_t n, bool handle) {
  GrundyTable table;
  CacheScope cache(g, table);
  const auto variant = handle ? FanVariant::FanHandle : FanVariant::Fan;
  const auto result = fan_option_table(n, variant, table, g.engine(), g.data());
  cache.save();
  if (g.json()) {
    ordered_json rec;
    rec["input"] = result.observed.family;
    rec["value"] = result.observed.value;
    rec["vertex"] = result.observed.vertex;
    rec["edge"] = ordered_json::array();
    for (const auto& [u, v, x] : result.observed.edge) rec["edge"].push_back({u, v, x});
    rec["report"] = report_json(result.report, !g.no_timestamp);
    emit(g, rec);
  } else {
    std::cout << format_option_table(result.observed);
    print_report(result.report, !g.no_timestamp);
  }
  if (result.report.status == ClaimStatus::Skipped && result.report.reason.find("budget") != std::string::npos) {
    return kBudget;
  }
  return result.report.status == ClaimStatus::Fail ? kVerifyFailed : kOk;
}

int cmd_fstar(const Globals& g, std::uint32_t n) {
  GrundyTable table;
  CacheScope cache(g, table);
  const auto r = check_fstar_minus_spokes(n, table, g.engine());
  cache.save();
  const int code = finish_reports(g, {r}, "fstar-check");
  if (r.status == ClaimStatus::Skipped) return kBudget;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gta: nim-values of the graph take-away game"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache", g.cache_path, "Table cache file, loaded if present and saved afterwards");
  app.add_option("--budget", g.budget, "Table lookups allowed per evaluation");
  app.add_flag("--no-timestamp", g.no_timestamp, "Leave out timestamps and timings");
  app.add_flag("--serial", g.serial, "Use the serial engine");
  app.add_option("--data-dir", g.data_dir, "Directory holding golden/");

  std::string input, output, spec, host;
  std::vector<std::string> involutions, ids;
  bool list = false, handle = false;
  double time_limit = 600;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> scan_n;
  std::function<int()> run;

  auto* grundy_cmd = app.add_subcommand("grundy", "Value, phi and winning moves of a graph file");
  grundy_cmd->add_option("input", input, "Graph file, or - for stdin")->required();
  grundy_cmd->callback([&] { run = [&] { return cmd_grundy(g, input, false); }; });

  auto* moves_cmd = app.add_subcommand("moves", "Value of every move of a graph file");
  moves_cmd->add_option("input", input, "Graph file, or - for stdin")->required();
  moves_cmd->callback([&] { run = [&] { return cmd_grundy(g, input, true); }; });

  auto* reduce_cmd = app.add_subcommand("reduce", "Cancel twin pendant pieces until none remain");
  reduce_cmd->add_option("input", input, "Graph file, or - for stdin")->required();
  reduce_cmd->add_option("--involution", involutions, "Involution file in the input's labels, applied before reducing (repeatable)");
  reduce_cmd->add_option("-o,--output", output, "Write the reduced graph here");
  reduce_cmd->callback([&] { run = [&] { return cmd_reduce(g, input, involutions, output); }; });

  auto* family_cmd = app.add_subcommand("family", "Generate a family member, e.g. wheel:7 or r:3:7,6,5,3");
  family_cmd->add_option("spec", spec, "Family spec")->required();
  family_cmd->add_option("-o,--output", output, "Write the graph here");
  family_cmd->callback([&] { run = [&] { return cmd_family(g, spec, output); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Run verification claims");
  verify_cmd->add_option("claims", ids, "Claim ids; default is every acceptance claim");
  verify_cmd->add_flag("--list", list, "List the claims");
  verify_cmd->add_option("--time-limit", time_limit, "Seconds allowed for the open-ended sequence claims");
  verify_cmd->callback([&] { run = [&] { return cmd_verify(g, ids, list, time_limit); }; });

  auto* scan_cmd = app.add_subcommand("scan", "Check phi = 2 subgraphs of W_n for an edge move to 0");
  scan_cmd->add_option("n", scan_n, "Wheel size");
  scan_cmd->add_option("--graph", host, "Scan the subgraphs of this graph file instead");
  scan_cmd->callback([&] { run = [&] { return cmd_scan(g, scan_n, host); }; });

  auto* fan_cmd = app.add_subcommand("fan-table", "Option table of F_n or F*_n against the golden table");
  fan_cmd->add_option("n", n, "Fan size")->required();
  fan_cmd->add_flag("--handle", handle, "Use F*_n");
  fan_cmd->callback([&] { run = [&] { return cmd_fan_table(g, n, handle); }; });

  auto* fstar_cmd = app.add_subcommand("fstar-check", "F*_n minus any two spokes has value 1");
  fstar_cmd->add_option("n", n, "Even n >= 4")->required();
  fstar_cmd->callback([&] { run = [&] { return cmd_fstar(g, n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return run();
  } catch (const BudgetExhausted& e) {
    std::cerr << "gta: " << e.what() << '\n';
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "gta: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "gta: " << e.what() << '\n';
    return kInputError;
  }
}
