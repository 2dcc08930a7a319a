#include "takeaway/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "takeaway/families.hpp"
#include "takeaway/graph_io.hpp"

namespace takeaway {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

std::size_t size_of(const Graph& g) { return g.vertex_count() + g.edge_count(); }

std::vector<SubgraphClass> sorted_classes(std::unordered_map<CanonKey, Graph, CanonKeyHash>&& seen) {
  std::vector<SubgraphClass> out;
  out.reserve(seen.size());
  for (auto& [key, graph] : seen) out.push_back({key, std::move(graph)});
  std::sort(out.begin(), out.end(), [](const SubgraphClass& a, const SubgraphClass& b) { return a.key < b.key; });
  return out;
}

template <typename Body>
void parallel_for(std::size_t count, Body body) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<SubgraphClass> subgraph_classes(const Graph& g) {
  std::unordered_map<CanonKey, Graph, CanonKeyHash> seen;
  std::vector<std::vector<std::pair<CanonKey, Graph>>> buckets(size_of(g) + 1);
  {
    CanonKey key = canonical_key(g);
    seen.emplace(key, g);
    buckets[size_of(g)].emplace_back(std::move(key), g);
  }
  for (std::size_t s = buckets.size(); s-- > 0;) {
    auto& level = buckets[s];
    std::vector<std::vector<std::pair<CanonKey, Graph>>> found(level.size());
    parallel_for(level.size(), [&](std::size_t i) {
      const Graph& h = level[i].second;
      for (const auto& m : legal_moves(h)) {
        Graph option = apply_move(h, m);
        found[i].emplace_back(canonical_key(option), std::move(option));
      }
    });
    for (auto& list : found) {
      for (auto& [key, option] : list) {
        if (seen.count(key)) continue;
        buckets[size_of(option)].emplace_back(key, option);
        seen.emplace(std::move(key), std::move(option));
      }
    }
    level.clear();
    level.shrink_to_fit();
  }
  return sorted_classes(std::move(seen));
}

std::vector<SubgraphClass> subgraph_classes_reference(const Graph& g) {
  const auto n = g.vertex_count();
  if (n > 20) throw InputError("reference subgraph enumeration is limited to 20 vertices");
  std::unordered_map<CanonKey, Graph, CanonKeyHash> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) keep.push_back(v);
    }
    const Graph induced = induced_subgraph(g, keep);
    // Edge classes of the induced graph: loops first, then pairs.
    struct Slot {
      Vertex u, v;
      std::uint32_t mult;
    };
    std::vector<Slot> slots;
    for (Vertex v = 0; v < induced.vertex_count(); ++v) {
      if (induced.loops(v)) slots.push_back({v, v, induced.loops(v)});
    }
    for (const auto& e : induced.edges()) slots.push_back({e.u, e.v, e.multiplicity});
    std::vector<std::uint32_t> count(slots.size(), 0);
    for (;;) {
      Graph h(induced.vertex_count());
      for (std::size_t i = 0; i < slots.size(); ++i) h.set_multiplicity(slots[i].u, slots[i].v, count[i]);
      seen.emplace(canonical_key(h), std::move(h));
      std::size_t i = 0;
      while (i < slots.size() && count[i] == slots[i].mult) count[i++] = 0;
      if (i == slots.size()) break;
      ++count[i];
    }
  }
  return sorted_classes(std::move(seen));
}

bool has_zero_edge_move(const Graph& h, GrundyTable& table, const EngineOptions& options) {
  for (const auto& m : legal_moves(h)) {
    if (m.is_vertex_move()) continue;
    if (grundy(apply_move(h, m), table, options) == 0) return true;
  }
  return false;
}

Phi2Scan scan_phi2(const Graph& host, GrundyTable& table, const EngineOptions& options) {
  Phi2Scan result;
  const auto classes = subgraph_classes(host);
  result.classes = classes.size();
  std::vector<const Graph*> candidates;
  for (const auto& c : classes) {
    if (phi(c.graph) == 2) candidates.push_back(&c.graph);
  }
  result.phi2 = candidates.size();
  std::vector<char> ok(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t i) { ok[i] = has_zero_edge_move(*candidates[i], table, options); });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!ok[i]) result.counterexamples.push_back(*candidates[i]);
  }
  return result;
}

VerificationReport scan_phi2_subgraphs(std::uint32_t n, GrundyTable& table, const EngineOptions& options) {
  if (n < 3) throw InputError("scan needs n >= 3");
  VerificationReport r;
  r.claim_id = "phi2-edge-scan";
  r.statement = "every subgraph H of W_" + std::to_string(n) +
                " with phi(H) = 2 has an edge whose removal leaves value 0";
  r.expected = "no counterexample";
  const auto start = std::chrono::steady_clock::now();
  try {
    auto scan = scan_phi2(generate(family::Wheel{n}), table, options);
    r.instances = scan.phi2;
    r.observed = std::to_string(scan.classes) + " subgraph classes, " + std::to_string(scan.phi2) +
                 " with phi = 2, " + std::to_string(scan.counterexamples.size()) + " counterexamples";
    r.status = scan.counterexamples.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
    for (const auto& g : scan.counterexamples) r.details.push_back(format_graph(g));
    if (r.status == ClaimStatus::Fail) r.reason = "counterexample found";
  } catch (const BudgetExhausted& e) {
    r.status = ClaimStatus::Skipped;
    r.reason = e.what();
    r.observed = "table holds " + std::to_string(table.size()) + " positions";
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

OptionTable option_table(const Graph& g, GrundyTable& table, const EngineOptions& options) {
  OptionTable t;
  t.vertex.assign(g.vertex_count(), 0);
  const auto values = move_values_parallel(g, table, options);
  std::vector<NimValue> just_values;
  for (const auto& mv : values) {
    just_values.push_back(mv.value);
    if (mv.move.is_vertex_move()) {
      t.vertex[mv.move.u] = mv.value;
    } else {
      t.edge.emplace_back(mv.move.u, mv.move.v, mv.value);
    }
  }
  std::sort(t.edge.begin(), t.edge.end());
  t.value = mex(just_values);
  return t;
}

std::string format_option_table(const OptionTable& t) {
  std::ostringstream out;
  if (!t.family.empty()) out << "family " << t.family << '\n';
  out << "value " << t.value << '\n';
  for (std::size_t v = 0; v < t.vertex.size(); ++v) out << "vertex " << v << ' ' << t.vertex[v] << '\n';
  for (const auto& [u, v, x] : t.edge) out << "edge " << u << ' ' << v << ' ' << x << '\n';
  return out.str();
}

OptionTable parse_option_table(const std::string& text) {
  OptionTable t;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::map<Vertex, NimValue> vertices;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string tag;
    if (!(words >> tag)) continue;
    bool ok = true;
    if (tag == "family") {
      ok = static_cast<bool>(words >> t.family);
    } else if (tag == "value") {
      ok = static_cast<bool>(words >> t.value);
    } else if (tag == "vertex") {
      Vertex v;
      NimValue x;
      ok = static_cast<bool>(words >> v >> x);
      if (ok && !vertices.emplace(v, x).second) throw ParseError(line_no, "duplicate vertex entry");
    } else if (tag == "edge") {
      Vertex u, v;
      NimValue x;
      ok = static_cast<bool>(words >> u >> v >> x);
      if (ok) {
        if (u > v) std::swap(u, v);
        t.edge.emplace_back(u, v, x);
      }
    } else {
      throw ParseError(line_no, "unknown entry '" + tag + "'");
    }
    std::string extra;
    if (!ok || (words >> extra)) throw ParseError(line_no, "malformed '" + tag + "' line");
  }
  for (const auto& [v, x] : vertices) {
    if (v != t.vertex.size()) throw ParseError(line_no, "vertex entries must cover 0..n-1");
    t.vertex.push_back(x);
  }
  std::sort(t.edge.begin(), t.edge.end());
  return t;
}

OptionTable read_option_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_option_table(buf.str());
}

std::vector<std::string> diff_option_tables(const OptionTable& expected, const OptionTable& observed) {
  std::vector<std::string> out;
  auto mismatch = [&](const std::string& what, NimValue e, NimValue o) {
    out.push_back(what + ": expected " + std::to_string(e) + ", observed " + std::to_string(o));
  };
  if (expected.value != observed.value) mismatch("value", expected.value, observed.value);
  if (expected.vertex.size() != observed.vertex.size()) {
    out.push_back("vertex count: expected " + std::to_string(expected.vertex.size()) + ", observed " +
                  std::to_string(observed.vertex.size()));
  } else {
    for (std::size_t v = 0; v < expected.vertex.size(); ++v) {
      if (expected.vertex[v] != observed.vertex[v]) {
        mismatch("vertex " + std::to_string(v), expected.vertex[v], observed.vertex[v]);
      }
    }
  }
  std::map<std::pair<Vertex, Vertex>, NimValue> e_map, o_map;
  for (const auto& [u, v, x] : expected.edge) e_map[{u, v}] = x;
  for (const auto& [u, v, x] : observed.edge) o_map[{u, v}] = x;
  for (const auto& [uv, x] : e_map) {
    const std::string name = "edge " + std::to_string(uv.first) + "-" + std::to_string(uv.second);
    auto it = o_map.find(uv);
    if (it == o_map.end()) {
      out.push_back(name + ": missing from observed table");
    } else if (it->second != x) {
      mismatch(name, x, it->second);
    }
  }
  for (const auto& [uv, x] : o_map) {
    if (!e_map.count(uv)) {
      out.push_back("edge " + std::to_string(uv.first) + "-" + std::to_string(uv.second) +
                    ": not in expected table");
    }
  }
  return out;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("TAKEAWAY_DATA_DIR"); env && *env) return env;
  return TAKEAWAY_DATA_DIR;
}

std::filesystem::path fan_golden_path(const std::filesystem::path& data_dir, std::uint32_t n, FanVariant v) {
  const std::string stem = v == FanVariant::Fan ? "fan_" : "fan_handle_";
  return data_dir / "golden" / (stem + std::to_string(n) + ".table");
}

FanTableResult fan_option_table(std::uint32_t n, FanVariant variant, GrundyTable& table,
                                const EngineOptions& options, const std::filesystem::path& data_dir) {
  FanTableResult out;
  auto& r = out.report;
  const std::string spec = (variant == FanVariant::Fan ? "fan:" : "fan-handle:") + std::to_string(n);
  r.claim_id = "fan-table-" + spec;
  r.statement = "option values of " + spec + " match the golden table";
  const auto start = std::chrono::steady_clock::now();
  try {
    out.observed = option_table(generate(parse_family_spec(spec)), table, options);
    out.observed.family = spec;
    r.observed = "value " + std::to_string(out.observed.value);
    const auto path = fan_golden_path(data_dir, n, variant);
    if (!std::filesystem::exists(path)) {
      r.status = ClaimStatus::Skipped;
      r.reason = "no golden table at " + path.string();
    } else {
      const auto golden = read_option_table(path);
      r.expected = "value " + std::to_string(golden.value) + ", table " + path.filename().string();
      r.details = diff_option_tables(golden, out.observed);
      r.instances = golden.vertex.size() + golden.edge.size();
      r.status = r.details.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
      if (!r.details.empty()) r.reason = std::to_string(r.details.size()) + " entries differ";
    }
  } catch (const BudgetExhausted& e) {
    r.status = ClaimStatus::Skipped;
    r.reason = e.what();
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

VerificationReport check_fstar_minus_spokes(std::uint32_t n, GrundyTable& table, const EngineOptions& options) {
  if (n < 4 || n % 2 == 1) throw InputError("fstar-check needs even n >= 4");
  VerificationReport r;
  r.claim_id = "fstar-minus-spokes";
  r.statement = "F*_" + std::to_string(n) + " with any two spokes removed has value 1";
  r.expected = "1 for every spoke pair";
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 1; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<NimValue> values(pairs.size(), 0);
  try {
    parallel_for(pairs.size(), [&](std::size_t i) {
      values[i] = grundy(generate(family::FanHandleMinusSpokes{n, pairs[i].first, pairs[i].second}), table, options);
    });
    r.instances = pairs.size();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (values[i] != 1) {
        ++bad;
        r.details.push_back("spokes 0-" + std::to_string(pairs[i].first) + " and 0-" +
                            std::to_string(pairs[i].second) + ": value " + std::to_string(values[i]));
      }
    }
    r.observed = std::to_string(pairs.size() - bad) + " of " + std::to_string(pairs.size()) + " pairs give 1";
    r.status = bad == 0 ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (bad) r.reason = "some spoke pair does not give 1";
  } catch (const BudgetExhausted& e) {
    r.status = ClaimStatus::Skipped;
    r.reason = e.what();
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace takeaway
