#include "takeaway/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "takeaway/canon.hpp"
#include "takeaway/corpus.hpp"
#include "takeaway/enumerate.hpp"
#include "takeaway/families.hpp"
#include "takeaway/formulas.hpp"
#include "takeaway/graph_io.hpp"
#include "takeaway/reducer.hpp"
#include "takeaway/scan.hpp"
#include "takeaway/structure.hpp"

namespace takeaway {

namespace {

constexpr std::size_t kMaxDetails = 20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t i = 0; i < g.loops(v); ++i) out << "; e " << v << ' ' << v;
  }
  for (const auto& e : g.edges()) {
    for (std::uint32_t i = 0; i < e.multiplicity; ++i) out << "; e " << e.u << ' ' << e.v;
  }
  return out.str();
}

std::string join(const std::vector<NimValue>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

struct Context {
  GrundyTable& table;
  const VerifyOptions& options;
  // No shortcuts: every value comes from the game tree.
  EngineOptions exact;
  // Bipartite shortcut and position reduction on.
  EngineOptions fast;
  std::filesystem::path data_dir;
};

// Counts instances and keeps the first few mismatches.
class Tally {
 public:
  explicit Tally(VerificationReport& r) : r_(r) {}

  bool expect(bool ok, const std::function<std::string()>& what) {
    ++r_.instances;
    if (!ok) {
      ++failures_;
      if (r_.details.size() < kMaxDetails) r_.details.push_back(what());
    }
    return ok;
  }
  std::size_t failures() const { return failures_; }

  void finish(const std::string& failure_reason) {
    r_.status = failures_ == 0 ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (r_.observed.empty()) {
      r_.observed = std::to_string(r_.instances - failures_) + " of " + std::to_string(r_.instances) + " agree";
    }
    if (failures_) r_.reason = std::to_string(failures_) + " " + failure_reason;
  }

 private:
  VerificationReport& r_;
  std::size_t failures_ = 0;
};

std::string mismatch(const std::string& what, const Graph& g, const std::string& expected, NimValue observed) {
  return what + " [" + describe(g) + "]: expected " + expected + ", engine " + std::to_string(observed);
}

// Folds sub-reports into one; the worst status wins.
void absorb(VerificationReport& into, const VerificationReport& part) {
  into.instances += part.instances;
  if (part.status == ClaimStatus::Fail) {
    into.status = ClaimStatus::Fail;
  } else if (part.status == ClaimStatus::Skipped && into.status == ClaimStatus::Pass) {
    into.status = ClaimStatus::Skipped;
  }
  if (!part.reason.empty()) into.reason += (into.reason.empty() ? "" : "; ") + part.claim_id + ": " + part.reason;
  into.observed += (into.observed.empty() ? "" : "; ") + part.claim_id + " " + part.observed;
  for (const auto& d : part.details) into.details.push_back(part.claim_id + ": " + d);
}

Graph loop_vertex() {
  Graph g(1);
  g.add_edge(0, 0);
  return g;
}

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// ---- claims ----

void triangle_zero(VerificationReport& r, Context& c) {
  r.expected = "triangle 0 without winning moves; triangle with pendant edge 4 with options {0,1,2,3}";
  Tally t(r);
  const Graph tri = triangle();
  const NimValue g0 = grundy(tri, c.table, c.exact);
  t.expect(g0 == 0, [&] { return mismatch("triangle", tri, "0", g0); });
  const auto wins = winning_moves(tri, c.table, c.exact);
  t.expect(wins.empty(), [&] { return "triangle has " + std::to_string(wins.size()) + " winning moves"; });
  const Graph fig = build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  const NimValue g1 = grundy(fig, c.table, c.exact);
  t.expect(g1 == 4, [&] { return mismatch("triangle with pendant", fig, "4", g1); });
  std::set<NimValue> options;
  for (const auto& mv : move_values(fig, c.table, c.exact)) options.insert(mv.value);
  const std::set<NimValue> want{0, 1, 2, 3};
  t.expect(options == want, [&] {
    return "triangle with pendant options {" + join(std::vector<NimValue>(options.begin(), options.end())) + "}";
  });
  r.observed = "triangle " + std::to_string(g0) + ", with pendant " + std::to_string(g1);
  t.finish("checks failed");
}

void bipartite_law(VerificationReport& r, Context& c) {
  r.expected = "g = phi on 1000 random bipartite graphs with at most 9 vertices";
  Corpus corpus(c.options.seed);
  Tally t(r);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = corpus.bipartite(9);
    const NimValue v = grundy(g, c.table, c.exact);
    t.expect(v == static_cast<NimValue>(phi(g)), [&] { return mismatch("bipartite", g, std::to_string(phi(g)), v); });
  }
  t.finish("bipartite graphs violate g = phi");
}

void disjoint_union_law(VerificationReport& r, Context& c) {
  r.expected = "g(G1 + G2) = g(G1) xor g(G2) on 300 random pairs, the union searched as one position";
  Corpus corpus(c.options.seed + 1);
  EngineOptions whole = c.exact;
  whole.split_components = false;
  Tally t(r);
  for (int i = 0; i < 300; ++i) {
    const Graph a = corpus.small_graph(5, 6);
    const Graph b = corpus.small_graph(5, 6);
    const Graph u = disjoint_union(a, b);
    const NimValue ga = grundy(a, c.table, whole);
    const NimValue gb = grundy(b, c.table, whole);
    const NimValue gu = grundy(u, c.table, whole);
    t.expect(gu == (ga ^ gb), [&] { return mismatch("union", u, std::to_string(ga ^ gb), gu); });
  }
  t.finish("unions violate the nim-sum law");
}

// Random graph with a few twin pendant pieces glued on, at most 9 vertices.
Graph graph_with_twins(Corpus& corpus) {
  const auto piece_size = static_cast<std::uint32_t>(corpus.between(1, 3));
  const bool twins = corpus.below(3) != 0;
  const std::uint32_t room = twins ? 9 - 2 * piece_size : 9;
  Graph g = corpus.small_graph(room, room + 2);
  if (!twins) return g;
  const Graph piece = corpus.tree(piece_size);
  const auto gate = static_cast<Vertex>(corpus.below(piece_size));
  const auto anchor = static_cast<Vertex>(corpus.below(g.vertex_count()));
  for (int copy = 0; copy < 2; ++copy) {
    const auto offset = static_cast<Vertex>(g.vertex_count());
    for (std::uint32_t i = 0; i < piece_size; ++i) g.add_vertex();
    for (const auto& e : piece.edges()) g.add_edge(e.u + offset, e.v + offset, e.multiplicity);
    g.add_edge(anchor, gate + offset);
  }
  return g;
}

void reduce_preserves(VerificationReport& r, Context& c) {
  r.expected = "g(reduce(G)) = g(G) on 1000 random graphs with at most 9 vertices; "
               "reduce confluent up to isomorphism on 200 of them";
  Corpus corpus(c.options.seed + 2);
  Tally t(r);
  std::size_t cancelled = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = graph_with_twins(corpus);
    const Graph red = reduce(g);
    if (red.vertex_count() != g.vertex_count()) ++cancelled;
    const NimValue gg = grundy(g, c.table, c.exact);
    const NimValue gr = grundy(red, c.table, c.exact);
    t.expect(gg == gr, [&] { return mismatch("reduced form of", g, std::to_string(gg), gr); });
    if (i < 200) {
      const auto key = canonical_key(red);
      const auto perm = corpus.permutation(static_cast<std::uint32_t>(g.vertex_count()));
      const bool same = canonical_key(reduce(g, PieceOrder::LargestFirst)) == key &&
                        canonical_key(reduce(relabel(g, perm))) == key;
      t.expect(same, [&] { return "reduce not confluent on [" + describe(g) + "]"; });
    }
  }
  r.details.insert(r.details.begin(), std::to_string(cancelled) + " of 1000 graphs had a cancellation");
  t.finish("checks failed");
}

void kn_mod3(VerificationReport& r, Context& c) {
  r.expected = "g(K_n) = n mod 3 for n = 1..6";
  Tally t(r);
  std::vector<NimValue> seen;
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const Graph g = generate(family::Complete{n});
    const NimValue v = grundy(g, c.table, c.exact);
    seen.push_back(v);
    t.expect(predict_complete(n).admits(v), [&] { return mismatch("K_" + std::to_string(n), g, std::to_string(n % 3), v); });
  }
  r.observed = "values " + join(seen);
  t.finish("complete graphs disagree");
}

void kn_loops(VerificationReport& r, Context& c) {
  r.expected = "g(K_n(m)) = (m + n) mod 3 for n = 1..5, m = 0..n";
  Tally t(r);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t m = 0; m <= n; ++m) {
      const Graph g = generate(family::CompleteLoops{n, m});
      const NimValue v = grundy(g, c.table, c.exact);
      t.expect(predict_complete_loops(n, m).admits(v), [&] {
        return mismatch("K_" + std::to_string(n) + "(" + std::to_string(m) + ")", g, std::to_string((m + n) % 3), v);
      });
    }
  }
  t.finish("looped complete graphs disagree");
}

void cycles_loop(VerificationReport& r, Context& c) {
  r.expected = "g(C_n) = 0 for n = 2..8; a single vertex with a loop has value 2";
  Tally t(r);
  for (std::uint32_t n = 2; n <= 8; ++n) {
    const Graph g = generate(family::Cycle{n});
    const NimValue v = grundy(g, c.table, c.exact);
    t.expect(v == 0, [&] { return mismatch("C_" + std::to_string(n), g, "0", v); });
  }
  const Graph l = loop_vertex();
  const NimValue v = grundy(l, c.table, c.exact);
  t.expect(v == 2, [&] { return mismatch("loop vertex", l, "2", v); });
  t.finish("checks failed");
}

void g1_g2(VerificationReport& r, Context& c) {
  r.expected = "G1(n) = 2 lambda(n-3) for n = 4..12; G2(n) = 2 lambda(n) for n = 1..12";
  Tally t(r);
  for (std::uint32_t n = 4; n <= 12; ++n) {
    const Graph g = generate(family::G1{n});
    const NimValue v = grundy(g, c.table, c.exact);
    const auto p = predict_G1(n);
    t.expect(p.admits(v), [&] { return mismatch("G1(" + std::to_string(n) + ")", g, p.to_string(), v); });
  }
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const Graph g = generate(family::G2{n});
    const NimValue v = grundy(g, c.table, c.exact);
    const auto p = predict_G2(n);
    t.expect(p.admits(v), [&] { return mismatch("G2(" + std::to_string(n) + ")", g, p.to_string(), v); });
  }
  t.finish("instances disagree");
}

void r_graphs(VerificationReport& r, Context& c) {
  r.expected = "R-graph predictor equals the engine for every path multiset with sum at most 8";
  Tally t(r);
  std::size_t plus_four = 0;
  for (const auto& xs : bounded_multisets(8)) {
    const Graph g = generate(family::R{3, xs});
    const NimValue v = grundy(g, c.table, c.exact);
    const auto p = predict_R(PathMultiset(xs));
    if (xs.size() % 2 == 0) ++plus_four;
    t.expect(p.admits(v), [&] { return mismatch("r:3:" + join(xs), g, p.to_string(), v); });
  }
  r.details.insert(r.details.begin(), std::to_string(plus_four) + " instances with an even number of paths");
  t.finish("instances disagree");
}

void odd_cycle_bouquet(VerificationReport& r, Context& c) {
  r.expected = "bouquet predictor equals the engine for 1..3 triangles and path multisets with sum at most 6";
  Tally t(r);
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (const auto& xs : bounded_multisets(6)) {
      const Graph g = generate(family::ROdd{std::vector<std::uint32_t>(k, 3), xs});
      const NimValue v = grundy(g, c.table, c.exact);
      const auto p = predict_rodd(k, PathMultiset(xs));
      t.expect(p.admits(v), [&] {
        return mismatch(std::to_string(k) + " triangles, paths " + join(xs), g, p.to_string(), v);
      });
    }
  }
  t.finish("instances disagree");
}

void linked_hubs(VerificationReport& r, Context& c) {
  r.expected = "linked-hub predictor equals the engine for k <= 4 links, sum z <= 6, sum x + sum y <= 4";
  Tally t(r);
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> sides;
  for (const auto& xs : bounded_multisets(4)) {
    std::uint32_t used = 0;
    for (auto x : xs) used += x;
    for (const auto& ys : bounded_multisets(4 - used)) sides.emplace_back(xs, ys);
  }
  std::vector<Graph> graphs;
  std::vector<Predicted> predicted;
  std::vector<std::string> names;
  for (std::uint32_t k = 0; k <= 4; ++k) {
    for (const auto& zs : bounded_multisets_of_size(k, 6)) {
      for (const auto& [xs, ys] : sides) {
        graphs.push_back(generate(family::XYZ{xs, ys, zs}));
        predicted.push_back(predict_xyz(PathMultiset(xs), PathMultiset(ys), zs));
        names.push_back("xyz:" + join(xs) + ":" + join(ys) + ":" + join(zs));
      }
    }
  }
  const auto values = grundy_batch(graphs, c.table, c.exact);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    t.expect(predicted[i].admits(values[i]),
             [&] { return mismatch(names[i], graphs[i], predicted[i].to_string(), values[i]); });
  }
  t.finish("instances disagree");
}

// Local conditions at a telescoping vertex v of the single attachment
// vertex a. Returns the failed condition, or empty.
std::string telescoping_conditions(const Graph& g, Vertex a, Vertex v) {
  const auto d = tree_distance(g, a, v);
  if (!d || *d == 0) return "telescoping vertex not in the tree";
  const auto layers = distance_layers(g, a);
  const auto deg_a = g.degree(a);
  if (deg_a > 4) return "deg A = " + std::to_string(deg_a) + " > 4";
  if ((deg_a == 3) != (*d == 1)) return "deg A = " + std::to_string(deg_a) + " at distance " + std::to_string(*d);
  for (std::size_t i = 0; i + 1 < *d; ++i) {
    if (layers.sizes[i] % 2 != 0) return "layer " + std::to_string(i + 1) + " has odd size";
  }
  if (layers.sizes[*d - 1] % 2 != 1) return "layer " + std::to_string(*d) + " has even size";
  if ((layers.total_degrees[*d - 1] - g.degree(v)) % 2 != 0) return "odd total degree in the last layer without v";
  return {};
}

void one_attachment(VerificationReport& r, Context& c) {
  r.expected = "one-attachment case split equals the engine on every reduced triangle-plus-tree graph with at "
               "most 7 tree vertices; at most one telescoping vertex, meeting the layer conditions";
  Tally t(r);
  const auto graphs = one_attachment_graphs(7);
  const auto values = grundy_batch(graphs, c.table, c.exact);
  std::size_t bare = 0, at_least = 0, parity = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const NimValue v = values[i];
    std::optional<Vertex> tele;
    try {
      tele = find_telescoping(g);
    } catch (const ConsistencyError& e) {
      t.expect(false, [&] { return std::string("[") + describe(g) + "]: " + e.what(); });
      continue;
    }
    const auto p = predict_one_attachment(g);
    if (g.vertex_count() == 3) {
      ++bare;
    } else if (!p.is_exact()) {
      ++at_least;
    } else {
      ++parity;
    }
    t.expect(p.admits(v), [&] { return mismatch("one attachment", g, p.to_string(), v); });
    if (tele) {
      const auto why = telescoping_conditions(g, 0, *tele);
      t.expect(why.empty(), [&] { return "[" + describe(g) + "] vertex " + std::to_string(*tele) + ": " + why; });
    }
  }
  r.observed = std::to_string(graphs.size()) + " graphs: " + std::to_string(bare) + " bare cycle, " +
               std::to_string(at_least) + " at least 4, " + std::to_string(parity) + " phi; " +
               std::to_string(r.instances - t.failures()) + " of " + std::to_string(r.instances) + " checks pass";
  t.finish("checks failed");
}

void multi_attachment(VerificationReport& r, Context& c) {
  r.expected = "g = phi on every reduced triangle with two or more attached trees and at most 6 tree vertices";
  Tally t(r);
  const auto graphs = multi_attachment_graphs(6);
  const auto values = grundy_batch(graphs, c.table, c.exact);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto p = predict_multi_attachment(graphs[i]);
    t.expect(p.admits(values[i]), [&] { return mismatch("multi attachment", graphs[i], p.to_string(), values[i]); });
  }
  t.finish("graphs disagree");
}

void ell_mex(VerificationReport& r, Context&) {
  r.expected = "ell(k) = mex E(k) for k = 1..50";
  Tally t(r);
  for (std::uint64_t k = 1; k <= 50; ++k) {
    const auto e = e_set(k);
    const std::vector<NimValue> values(e.begin(), e.end());
    const NimValue m = mex(values);
    t.expect(m == ell_val(k), [&] {
      return "k = " + std::to_string(k) + ": ell " + std::to_string(ell_val(k)) + ", mex " + std::to_string(m);
    });
  }
  t.finish("values disagree");
}

void wheel_small(VerificationReport& r, Context& c) {
  r.expected = "g(W_n) = 1 for n = 3..8";
  Tally t(r);
  std::vector<NimValue> seen;
  for (std::uint32_t n = 3; n <= 8; ++n) {
    const Graph g = generate(family::Wheel{n});
    const NimValue v = grundy_parallel(g, c.table, c.exact);
    seen.push_back(v);
    const auto p = predict_wheel(n).prediction;
    t.expect(p.admits(v), [&] { return mismatch("W_" + std::to_string(n), g, p.to_string(), v); });
  }
  r.observed = "values " + join(seen);
  t.finish("wheels disagree");
}

void q_odd(VerificationReport& r, Context& c) {
  r.expected = "g(Q_n) = 0 for n = 3, 5, 7";
  Tally t(r);
  std::vector<NimValue> seen;
  for (std::uint32_t n : {3u, 5u, 7u}) {
    const Graph g = generate(family::Q{n});
    const NimValue v = grundy_parallel(g, c.table, c.exact);
    seen.push_back(v);
    t.expect(v == 0, [&] { return mismatch("Q_" + std::to_string(n), g, "0", v); });
  }
  r.observed = "values " + join(seen);
  t.finish("graphs disagree");
}

void fan_group(VerificationReport& r, Context& c, std::initializer_list<std::pair<std::uint32_t, FanVariant>> list) {
  r.expected = "per-move option tables equal the golden tables";
  for (const auto& [n, variant] : list) absorb(r, fan_option_table(n, variant, c.table, c.exact, c.data_dir).report);
}

void fan_tables(VerificationReport& r, Context& c) {
  fan_group(r, c, {{7, FanVariant::Fan}, {6, FanVariant::Fan}, {8, FanVariant::FanHandle}});
}

void fan_tables_extra(VerificationReport& r, Context& c) {
  fan_group(r, c, {{9, FanVariant::Fan}, {8, FanVariant::Fan}, {9, FanVariant::FanHandle}, {10, FanVariant::FanHandle}});
}

void exceptional_graphs(VerificationReport& r, Context& c) {
  r.expected = "K_6, K_5 with a pendant edge, K_4 and K_3 sharing a vertex: phi 2, values 0, 1, 0, no edge move to 0";
  Tally t(r);
  const std::pair<family::Exceptional, NimValue> cases[] = {{{6, 1}, 0}, {{5, 2}, 1}, {{4, 3}, 0}};
  std::vector<NimValue> seen;
  for (const auto& [spec, want] : cases) {
    const Graph g = generate(spec);
    const std::string name = format_family_spec(spec);
    t.expect(phi(g) == 2, [&] { return name + ": phi " + std::to_string(phi(g)); });
    const NimValue v = grundy_parallel(g, c.table, c.exact);
    seen.push_back(v);
    t.expect(v == want, [&] { return mismatch(name, g, std::to_string(want), v); });
    t.expect(!has_zero_edge_move(g, c.table, c.exact), [&] { return name + ": some edge move reaches 0"; });
  }
  r.observed = "values " + join(seen);
  t.finish("checks failed");
}

void phi2_scan(VerificationReport& r, Context& c) {
  r.expected = "every phi = 2 subgraph of W_n, n = 3, 4, 5, has an edge move to value 0";
  for (std::uint32_t n = 3; n <= 5; ++n) absorb(r, scan_phi2_subgraphs(n, c.table, c.exact));
}

void fstar_minus_spokes(VerificationReport& r, Context& c) {
  r.expected = "F*_n with any two spokes removed has value 1, n = 4, 6, 8";
  for (std::uint32_t n : {4u, 6u, 8u}) absorb(r, check_fstar_minus_spokes(n, c.table, c.exact));
}

struct GoldenSequence {
  std::uint32_t first_k = 0;
  std::vector<NimValue> values;
};

std::map<std::uint32_t, GoldenSequence> read_sequences(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::map<std::uint32_t, GoldenSequence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::uint32_t i = 0;
    GoldenSequence s;
    if (!(words >> i >> s.first_k)) continue;
    NimValue v;
    while (words >> v) s.values.push_back(v);
    out[i] = s;
  }
  return out;
}

// Expected H_{i,k} value beyond the printed prefix, from the sequence type.
NimValue h_extended(std::uint32_t i, std::uint32_t k) {
  switch (i) {
    case 1: return k % 2 == 0 ? 18 : 17;
    case 2: return (ell_val(k) ^ 3) + 4;
    default: return k % 2 == 1 ? 0 : 3;
  }
}

void h_sequence(VerificationReport& r, Context& c, std::uint32_t i, std::uint32_t extra) {
  const auto golden = read_sequences(c.data_dir / "golden" / "sequences.txt").at(i);
  r.expected = "H_" + std::to_string(i) + ",k for k >= " + std::to_string(golden.first_k) + ": " + join(golden.values) +
               ", ...";
  // A private table: these values come from the shortcut engine.
  GrundyTable local;
  Tally t(r);
  const auto start = Clock::now();
  const std::uint32_t last = golden.first_k + static_cast<std::uint32_t>(golden.values.size()) + extra - 1;
  std::vector<NimValue> seen;
  std::uint32_t k = golden.first_k;
  for (; k <= last; ++k) {
    if (c.options.time_limit_seconds > 0 && seconds_since(start) > c.options.time_limit_seconds) break;
    const std::size_t idx = k - golden.first_k;
    const NimValue want = idx < golden.values.size() ? golden.values[idx] : h_extended(i, k);
    const Graph g = generate(family::H{i, k});
    const NimValue v = grundy_parallel(g, local, c.fast);
    seen.push_back(v);
    t.expect(v == want, [&] { return "k = " + std::to_string(k) + ": expected " + std::to_string(want) + ", engine " + std::to_string(v); });
  }
  r.observed = seen.empty() ? "no k evaluated" : "k = " + std::to_string(golden.first_k) + ".." + std::to_string(k - 1) + ": " + join(seen);
  if (seen.size() < 2 && t.failures() == 0) {
    r.status = ClaimStatus::Skipped;
    r.reason = "time limit reached before two consecutive k were evaluated";
    return;
  }
  t.finish("values differ from the sequence");
}

void h_family(VerificationReport& r, Context& c) { h_sequence(r, c, 1, 6); }
void h_family_2(VerificationReport& r, Context& c) { h_sequence(r, c, 2, 3); }
void h_family_3(VerificationReport& r, Context& c) { h_sequence(r, c, 3, 4); }

void telescoping_figures(VerificationReport& r, Context& c) {
  r.expected = "figure graphs have their marked telescoping vertex, layer sizes and values";
  Tally t(r);
  const auto dir = c.data_dir / "golden";
  const Graph fig3 = read_graph_file(dir / "fig3.graph");
  const auto tele3 = find_telescoping(fig3);
  t.expect(tele3 == Vertex{12}, [&] { return "fig3 telescoping vertex " + (tele3 ? std::to_string(*tele3) : "none"); });
  const auto layers = distance_layers(fig3, 0).sizes;
  const std::vector<std::size_t> want{2, 4, 4, 1, 2, 1};
  t.expect(layers == want, [&] { return "fig3 layer sizes differ"; });
  t.expect(telescoping_conditions(fig3, 0, 12).empty(), [&] { return "fig3: " + telescoping_conditions(fig3, 0, 12); });
  for (const char* name : {"fig5_q2.graph", "fig5_q2_leaf.graph"}) {
    const Graph g = read_graph_file(dir / name);
    const auto tele = find_telescoping(g);
    t.expect(tele == Vertex{7}, [&] { return std::string(name) + " telescoping vertex " + (tele ? std::to_string(*tele) : "none"); });
  }
  for (const Graph& g : {fig3, read_graph_file(dir / "fig5_q2.graph"), read_graph_file(dir / "fig5_q2_leaf.graph")}) {
    const NimValue v = grundy(g, c.table, c.fast);
    const auto p = predict_one_attachment(g);
    t.expect(p.admits(v), [&] { return mismatch("figure graph", g, p.to_string(), v); });
  }
  t.finish("checks failed");
}

void cancellation_localization(VerificationReport& r, Context&) {
  r.expected = "deleting a telescoping vertex v, every cancellation in A's component is anchored on the tree path A..v";
  Tally t(r);
  for (const auto& g : one_attachment_graphs(7)) {
    const auto tele = find_telescoping(g);
    if (!tele) continue;
    const auto path = tree_path(g, 0, *tele);
    // Work on g - v with vertex ids mapped back to g.
    std::vector<Vertex> ids;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (x != *tele) ids.push_back(x);
    }
    Graph cur = delete_vertex(g, *tele);
    bool ok = true;
    std::string bad;
    while (auto step = cancel_once_logged(cur)) {
      const Vertex anchor = step->what.anchor;
      const auto sets = component_vertex_sets(cur);
      const Vertex a_now = static_cast<Vertex>(std::find(ids.begin(), ids.end(), Vertex{0}) - ids.begin());
      const bool in_a = std::any_of(sets.begin(), sets.end(), [&](const auto& s) {
        return std::binary_search(s.begin(), s.end(), a_now) && std::binary_search(s.begin(), s.end(), anchor);
      });
      if (in_a && std::find(path.begin(), path.end(), ids[anchor]) == path.end()) {
        ok = false;
        bad = "anchor " + std::to_string(ids[anchor]);
      }
      std::vector<Vertex> next;
      for (Vertex x : step->kept) next.push_back(ids[x]);
      ids = std::move(next);
      cur = std::move(step->graph);
    }
    t.expect(ok, [&] { return "[" + describe(g) + "] v = " + std::to_string(*tele) + ": " + bad + " off the path"; });
  }
  t.finish("graphs have an off-path cancellation");
}

void involution_figure(VerificationReport& r, Context& c) {
  r.expected = "applying both marked involutions to the left figure graph gives the right one, with equal values";
  Tally t(r);
  const auto dir = c.data_dir / "golden";
  const Graph left = read_graph_file(dir / "fig6_left.graph");
  const Graph right = read_graph_file(dir / "fig6_right.graph");
  const Involution taus[] = {read_involution_file(dir / "fig6_tau1.inv"), read_involution_file(dir / "fig6_tau2.inv")};
  const Graph done = apply_involutions(left, taus);
  t.expect(canonical_key(done) == canonical_key(right), [&] { return "result [" + describe(done) + "]"; });
  const NimValue gl = grundy(left, c.table, c.exact);
  const NimValue gr = grundy(right, c.table, c.exact);
  t.expect(gl == gr, [&] { return "left " + std::to_string(gl) + ", right " + std::to_string(gr); });
  r.observed = "left " + std::to_string(gl) + ", right " + std::to_string(gr);
  t.finish("checks failed");
}

struct Claim {
  ClaimInfo info;
  void (*run)(VerificationReport&, Context&);
};

const std::vector<Claim>& registry() {
  static const std::vector<Claim> list = {
      {{"triangle-zero", "the triangle has value 0 and the triangle with a pendant edge has value 4", true}, triangle_zero},
      {{"bipartite-law", "a bipartite graph has value phi", true}, bipartite_law},
      {{"disjoint-union", "the value of a disjoint union is the nim-sum of the values", true}, disjoint_union_law},
      {{"reduce-preserves", "cancelling twin pendant pieces keeps the value; the reduced form is unique", true},
       reduce_preserves},
      {{"kn-mod3", "K_n has value n mod 3", true}, kn_mod3},
      {{"kn-loops", "K_n with m looped vertices has value (m + n) mod 3", true}, kn_loops},
      {{"cycles-loop", "cycles have value 0 and a looped vertex has value 2", true}, cycles_loop},
      {{"g1-g2", "the tailed diamond and the looped path follow the lambda staircase", true}, g1_g2},
      {{"r-graphs", "an edge joining a triangle to a bundle of paths follows the ell formula", true}, r_graphs},
      {{"odd-cycle-bouquet", "triangles and paths at one vertex follow the alternating-sum case table", true},
       odd_cycle_bouquet},
      {{"linked-hubs", "two hubs joined by paths, with paths at each, follow the alternating-sum case table", true},
       linked_hubs},
      {{"one-attachment", "an odd cycle with one tree: bare cycle 0, odd telescoping vertex at least 4, else phi", true},
       one_attachment},
      {{"multi-attachment", "an odd cycle with trees at two or more vertices has value phi", true}, multi_attachment},
      {{"ell-mex", "ell(k) is the mex of E(k)", true}, ell_mex},
      {{"wheel-small", "small wheels have value 1", true}, wheel_small},
      {{"q-odd", "Q_n has value 0 for small odd n", true}, q_odd},
      {{"fan-tables", "fan and fan-with-handle option tables match the figures", true}, fan_tables},
      {{"exceptional-graphs", "three phi = 2 graphs have no edge move to 0", true}, exceptional_graphs},
      {{"phi2-edge-scan", "every phi = 2 subgraph of a small wheel has an edge move to 0", true}, phi2_scan},
      {{"h-family", "H_1,k alternates 18, 17 for k >= 8", true}, h_family},
      {{"h-family-2", "H_2,k equals (ell(k) xor 3) + 4 for k >= 13", false}, h_family_2},
      {{"h-family-3", "H_3,k alternates 0, 3 for k >= 1", false}, h_family_3},
      {{"fan-tables-extra", "larger fan option tables match the figures", false}, fan_tables_extra},
      {{"fstar-minus-spokes", "F*_n minus two spokes has value 1 for even n", false}, fstar_minus_spokes},
      {{"telescoping-figures", "figure graphs carry their marked telescoping vertices", false}, telescoping_figures},
      {{"cancellation-localization", "cancellations after deleting a telescoping vertex stay on its path to A", false},
       cancellation_localization},
      {{"involution-figure", "the involution figure reduces as drawn", false}, involution_figure},
  };
  return list;
}

}  // namespace

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> list = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
  }();
  return list;
}

VerificationReport run_claim(std::string_view id, GrundyTable& table, const VerifyOptions& options) {
  const auto& list = registry();
  auto it = std::find_if(list.begin(), list.end(), [&](const Claim& c) { return c.info.id == id; });
  if (it == list.end()) throw InputError("unknown claim '" + std::string(id) + "'");
  Context ctx{table, options, options.engine, options.engine,
              options.data_dir.empty() ? default_data_dir() : options.data_dir};
  ctx.exact.bipartite_shortcut = false;
  ctx.exact.reduce_positions = false;
  ctx.exact.split_components = true;
  ctx.fast.bipartite_shortcut = true;
  ctx.fast.reduce_positions = true;
  ctx.fast.split_components = true;

  VerificationReport r;
  r.claim_id = it->info.id;
  r.statement = it->info.statement;
  const auto start = Clock::now();
  try {
    it->run(r, ctx);
  } catch (const BudgetExhausted& e) {
    r.status = ClaimStatus::Skipped;
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.status = ClaimStatus::Fail;
    r.reason = std::string("error: ") + e.what();
  }
  r.runtime_seconds = seconds_since(start);
  return r;
}

std::vector<VerificationReport> verify_suite(std::span<const std::string> ids, GrundyTable& table,
                                             const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  if (ids.empty()) {
    for (const auto& c : claims()) {
      if (c.acceptance) out.push_back(run_claim(c.id, table, options));
    }
  } else {
    for (const auto& id : ids) out.push_back(run_claim(id, table, options));
  }
  return out;
}

}  // namespace takeaway
