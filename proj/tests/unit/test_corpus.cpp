#include <doctest.h>

#include "takeaway/corpus.hpp"

using namespace takeaway;

TEST_CASE("seeded corpora repeat") {
  Corpus a(99), b(99);
  for (int i = 0; i < 50; ++i) CHECK(a.small_graph(8, 10) == b.small_graph(8, 10));
}

TEST_CASE("generators respect their shapes") {
  Corpus c(1);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::uint32_t>(c.between(1, 9));
    const Graph t = c.tree(n);
    CHECK(t.vertex_count() == n);
    CHECK(is_forest(t));
    CHECK(is_connected(t));
    CHECK(is_forest(c.forest(n)));
    const Graph b = c.bipartite(9);
    CHECK(b.vertex_count() <= 9);
    CHECK(is_bipartite(b));
    const Graph g = c.graph(n, 6, false, false);
    CHECK_FALSE(has_loops(g));
    CHECK_FALSE(has_parallel_edges(g));
    const auto p = c.permutation(n);
    CHECK(std::is_permutation(p.begin(), p.end(), c.permutation(n).begin()));
  }
}
