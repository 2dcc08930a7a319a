#include <doctest.h>

#include "../oracle.hpp"
#include "takeaway/families.hpp"
#include "takeaway/graph_io.hpp"
#include "takeaway/scan.hpp"

using namespace takeaway;

namespace {

std::filesystem::path data() { return TAKEAWAY_DATA_DIR; }

}  // namespace

TEST_CASE("closure matches the mask enumeration") {
  for (const Graph& g : {generate(family::Wheel{3}), generate(family::Wheel{5}), generate(family::Fan{5}),
                         build_graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}})}) {
    const auto fast = subgraph_classes(g);
    const auto slow = subgraph_classes_reference(g);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].key == slow[i].key);
      CHECK(oracle::isomorphic(fast[i].graph, slow[i].graph));
    }
  }
}

TEST_CASE("subgraphs of K4") {
  // Graphs on at most 4 vertices: 1 + 1 + 2 + 4 + 11.
  CHECK(subgraph_classes(generate(family::Complete{4})).size() == 19);
}

TEST_CASE("phi = 2 scan") {
  GrundyTable t;
  for (std::uint32_t n = 3; n <= 5; ++n) {
    const auto r = scan_phi2_subgraphs(n, t);
    CHECK(r.status == ClaimStatus::Pass);
    CHECK(r.instances > 0);
  }
  CHECK(scan_phi2_subgraphs(5, t, {.node_budget = 1}).status == ClaimStatus::Skipped);
  CHECK_THROWS_AS(scan_phi2_subgraphs(2, t), InputError);
}

TEST_CASE("the exceptional graphs fail the edge predicate") {
  GrundyTable t;
  for (const char* name : {"fig23_k6.graph", "fig23_k5_pendant.graph", "fig23_k4_k3.graph"}) {
    const Graph g = read_graph_file(data() / "golden" / name);
    CHECK(phi(g) == 2);
    CHECK_FALSE(has_zero_edge_move(g, t));
  }
  const auto scan = scan_phi2(read_graph_file(data() / "golden" / "fig23_k6.graph"), t);
  CHECK(scan.counterexamples.size() >= 1);
}

TEST_CASE("option tables") {
  GrundyTable t;
  const Graph fig4 = build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  auto table = option_table(fig4, t);
  CHECK(table.value == 4);
  CHECK(table.vertex == std::vector<NimValue>{3, 1, 1, 0});
  const auto text = format_option_table(table);
  const auto back = parse_option_table(text);
  CHECK(diff_option_tables(table, back).empty());
  auto changed = back;
  changed.vertex[2] = 7;
  std::get<2>(changed.edge[0]) = 9;
  CHECK(diff_option_tables(table, changed).size() == 2);
  CHECK_THROWS_AS(parse_option_table("value 1\nvertex 0\n"), InputError);
  CHECK_THROWS_AS(parse_option_table("bogus 1\n"), InputError);
}

TEST_CASE("fan tables against golden data") {
  GrundyTable t;
  for (const auto& [n, v] : {std::pair{7u, FanVariant::Fan}, std::pair{6u, FanVariant::Fan},
                             std::pair{8u, FanVariant::FanHandle}}) {
    const auto r = fan_option_table(n, v, t, {}, data());
    CHECK(r.report.status == ClaimStatus::Pass);
  }
  const auto missing = fan_option_table(5, FanVariant::Fan, t, {}, data());
  CHECK(missing.report.status == ClaimStatus::Skipped);
  CHECK(missing.observed.value == 2);
}

TEST_CASE("fan with handle minus two spokes") {
  GrundyTable t;
  CHECK(check_fstar_minus_spokes(4, t).status == ClaimStatus::Pass);
  CHECK(check_fstar_minus_spokes(6, t).status == ClaimStatus::Pass);
  CHECK_THROWS_AS(check_fstar_minus_spokes(5, t), InputError);
  oracle::Solver solver;
  CHECK(solver.value(generate(family::FanHandleMinusSpokes{4, 1, 3})) == 1);
  CHECK(solver.value(generate(family::FanHandleMinusSpokes{6, 2, 4})) == 1);
}
