#pragma once

#include <cstdint>
#include <random>

#include "takeaway/graph.hpp"

namespace takeaway {

// Seeded generators for the random test corpora. Draws use plain modulo
// arithmetic on mt19937_64 output so sequences match across standard
// libraries.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound);  // uniform-ish in [0, bound)
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);  // inclusive

  // Random labelled tree on n vertices (random parent among earlier vertices,
  // then shuffled labels).
  Graph tree(std::uint32_t n);
  Graph forest(std::uint32_t n);
  // Forest plus random edges that keep a fixed 2-colouring; may add parallel
  // edges between the two sides.
  Graph bipartite(std::uint32_t max_vertices);
  // n vertices, m random non-loop edges, optional loops and parallel edges.
  Graph graph(std::uint32_t n, std::uint32_t m, bool allow_loops, bool allow_parallel);
  // Sparse graph with up to max_vertices vertices and about 1.3 n edges.
  Graph small_graph(std::uint32_t max_vertices, std::uint32_t max_edges);
  std::vector<Vertex> permutation(std::uint32_t n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace takeaway
