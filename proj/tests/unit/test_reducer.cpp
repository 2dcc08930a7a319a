#include <doctest.h>

#include "../oracle.hpp"
#include "takeaway/corpus.hpp"
#include "takeaway/graph_io.hpp"
#include "takeaway/reducer.hpp"

using namespace takeaway;

namespace {

std::filesystem::path golden(const char* name) { return std::filesystem::path(TAKEAWAY_DATA_DIR) / "golden" / name; }

}  // namespace

TEST_CASE("simplify parallel edges and loops by parity") {
  Graph g = build_graph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}});
  g.add_edge(2, 2, 2);
  g.add_edge(0, 0, 3);
  const Graph s = simplify_multiedges(g);
  CHECK(s.multiplicity(0, 1) == 1);
  CHECK(s.multiplicity(1, 2) == 0);
  CHECK(s.loops(2) == 0);
  CHECK(s.loops(0) == 1);
}

TEST_CASE("centred path reduces to a vertex") {
  const auto r = reduce_logged(build_graph(3, {{0, 1}, {1, 2}}));
  CHECK(r.graph.vertex_count() == 1);
  CHECK(r.kept == std::vector<Vertex>{1});
  REQUIRE(r.log.size() == 1);
  CHECK(r.log[0].anchor == 1);
  CHECK(r.log[0].piece_size == 1);
}

TEST_CASE("reduced input is unchanged") {
  const Graph tri = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  const auto r = reduce_logged(tri);
  CHECK(r.graph == tri);
  CHECK(r.log.empty());
  CHECK(is_reduced(tri));
}

TEST_CASE("pendant pieces") {
  // Star with three leaves and a path tail: pieces at the centre.
  const Graph g = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}});
  const auto pieces = pendant_pieces(g, 0);
  CHECK(pieces.size() == 4);
  for (const auto& p : pieces) CHECK(p.anchor == 0);
  const Graph r = reduce(g);
  // Two leaves cancel; one leaf and the tail remain.
  CHECK(r.vertex_count() == 4);
  CHECK(is_reduced(r));
}

TEST_CASE("even multiplicities vanish before cancelling") {
  const Graph g = build_graph(3, {{0, 1}, {0, 1}, {0, 2}, {0, 2}});
  CHECK_FALSE(is_reduced(g));
  const auto r = reduce_logged(g);
  CHECK(r.graph == Graph(3));
  CHECK(r.log.empty());
  const Graph odd = build_graph(4, {{0, 1}, {0, 1}, {0, 1}, {0, 2}, {2, 3}});
  CHECK(reduce(odd) == build_graph(4, {{0, 1}, {0, 2}, {2, 3}}));
}

TEST_CASE("reduction is confluent and keeps the value") {
  Corpus corpus(21);
  oracle::Solver solver;
  for (int i = 0; i < 200; ++i) {
    Graph g = corpus.small_graph(5, 6);
    // Glue two copies of a random tree onto one vertex.
    const auto size = static_cast<std::uint32_t>(corpus.between(1, 2));
    const Graph piece = corpus.tree(size);
    const auto at = static_cast<Vertex>(corpus.below(g.vertex_count()));
    for (int copy = 0; copy < 2; ++copy) {
      const auto base = static_cast<Vertex>(g.vertex_count());
      for (std::uint32_t j = 0; j < size; ++j) g.add_vertex();
      for (const auto& e : piece.edges()) g.add_edge(base + e.u, base + e.v);
      g.add_edge(at, base);
    }
    const Graph a = reduce(g, PieceOrder::SmallestFirst);
    const Graph b = reduce(g, PieceOrder::LargestFirst);
    CHECK(a.vertex_count() < g.vertex_count());
    CHECK(oracle::isomorphic(a, b));
    CHECK(is_reduced(a));
    CHECK(solver.value(a) == solver.value(g));
  }
}

TEST_CASE("involution validation") {
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_NOTHROW(validate_involution(c4, {{0, 3, 2, 1}}));
  CHECK(apply_involution(c4, {{0, 3, 2, 1}}).vertex_count() == 2);
  CHECK_THROWS_AS(validate_involution(c4, {{0, 1, 2}}), ValidationError);
  CHECK_THROWS_AS(validate_involution(c4, {{1, 2, 3, 0}}), ValidationError);  // not an involution
  CHECK_THROWS_AS(validate_involution(c4, {{1, 0, 2, 3}}), ValidationError);  // swaps adjacent vertices
  CHECK_THROWS_AS(validate_involution(c4, {{0, 2, 1, 3}}), ValidationError);  // not an automorphism
  CHECK_THROWS_AS(validate_involution(c4, {{0, 1, 2, 7}}), ValidationError);
}

TEST_CASE("involution figure") {
  const Graph left = read_graph_file(golden("fig6_left.graph"));
  const Graph right = read_graph_file(golden("fig6_right.graph"));
  const Graph once = apply_involution(left, {{2, 3, 0, 1, 4, 5, 6, 7, 8, 9, 10, 11, 12}});
  CHECK(once.vertex_count() == 9);
  // In the 9-vertex graph the old vertices 4..12 are 0..8.
  const Graph twice = apply_involution(once, {{4, 3, 2, 1, 0, 5, 6, 7, 8}});
  CHECK(canonical_key(reduce(twice)) == canonical_key(right));
  CHECK(oracle::isomorphic(twice, right));
  oracle::Solver solver;
  CHECK(solver.value(twice) == solver.value(once));
}

TEST_CASE("involutions in the input's labels") {
  const Graph left = read_graph_file(golden("fig6_left.graph"));
  const Involution taus[] = {read_involution_file(golden("fig6_tau1.inv")),
                             read_involution_file(golden("fig6_tau2.inv"))};
  CHECK(oracle::isomorphic(apply_involutions(left, taus), read_graph_file(golden("fig6_right.graph"))));
  // tau1 removes vertices 0..3; a later mapping may not send 4 there.
  const Involution bad[] = {taus[0], {{4, 1, 2, 3, 0, 5, 6, 7, 8, 9, 10, 11, 12}}};
  CHECK_THROWS_AS(apply_involutions(left, bad), ValidationError);
}

TEST_CASE("involution text") {
  CHECK(parse_involution("# swap\n1 0\n2\n").mapping == std::vector<Vertex>{1, 0, 2});
  CHECK_THROWS_WITH_AS(parse_involution("0 1\n2 x\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(read_involution_file("/nonexistent/tau"), InputError);
}
