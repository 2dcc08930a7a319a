#include <doctest.h>

#include "../oracle.hpp"
#include "takeaway/canon.hpp"
#include "takeaway/corpus.hpp"

using namespace takeaway;

TEST_CASE("triangle and path differ") {
  const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(canonical_key(tri) != canonical_key(p3));
  CHECK_FALSE(oracle::isomorphic(tri, p3));
}

TEST_CASE("keys are invariant under relabelling") {
  Corpus corpus(7);
  for (int i = 0; i < 300; ++i) {
    const Graph g = corpus.small_graph(9, 14);
    const auto perm = corpus.permutation(static_cast<std::uint32_t>(g.vertex_count()));
    const Graph h = relabel(g, perm);
    CHECK(canonical_key(g) == canonical_key(h));
    const Vertex root = static_cast<Vertex>(corpus.below(g.vertex_count()));
    CHECK(canonical_key(g, root) == canonical_key(h, perm[root]));
  }
}

TEST_CASE("equal keys exactly for isomorphic graphs") {
  Corpus corpus(11);
  std::size_t iso = 0;
  for (int i = 0; i < 600; ++i) {
    const auto n = static_cast<std::uint32_t>(corpus.between(1, 6));
    const auto m = static_cast<std::uint32_t>(corpus.between(0, 7));
    const bool loops = corpus.below(2) == 0;
    const Graph a = corpus.graph(n, m, loops, true);
    const Graph b = corpus.below(3) == 0 ? relabel(a, corpus.permutation(n)) : corpus.graph(n, m, loops, true);
    const bool same = oracle::isomorphic(a, b);
    iso += same;
    CHECK(same == (canonical_key(a) == canonical_key(b)));
  }
  CHECK(iso > 100);
}

TEST_CASE("regular graphs that refinement alone cannot split") {
  // C6 and two triangles: 2-regular on 6 vertices.
  const Graph c6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Graph two = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(canonical_key(c6) != canonical_key(two));
  // K_{3,3} and the prism are both 3-regular on 6 vertices.
  const Graph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const Graph prism = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(canonical_key(k33) != canonical_key(prism));
  const std::vector<Vertex> perm{5, 3, 1, 0, 4, 2};
  CHECK(canonical_key(prism) == canonical_key(relabel(prism, perm)));
}

TEST_CASE("roots distinguish vertex orbits") {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(canonical_key(p3, Vertex{0}) == canonical_key(p3, Vertex{2}));
  CHECK(canonical_key(p3, Vertex{0}) != canonical_key(p3, Vertex{1}));
  CHECK(canonical_key(p3, Vertex{0}) != canonical_key(p3));
  Graph cyc = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  cyc.add_edge(0, 0);
  CHECK(canonical_key(cyc, Vertex{1}) == canonical_key(cyc, Vertex{2}));
  CHECK(canonical_key(cyc, Vertex{0}) != canonical_key(cyc, Vertex{1}));
}

TEST_CASE("hex round trip") {
  const auto key = canonical_key(build_graph(4, {{0, 1}, {2, 3}}));
  CHECK(CanonKey::from_hex(key.hex()) == key);
  CHECK(canonical_key(Graph()).hex() == CanonKey::from_hex(canonical_key(Graph()).hex()).hex());
  CHECK_THROWS_AS(CanonKey::from_hex("zz"), InputError);
  CHECK_THROWS_AS(CanonKey::from_hex("abc"), InputError);
}
