#pragma once

#include <cstdint>
#include <vector>

#include "takeaway/graph.hpp"

namespace takeaway {

// Rooted trees with 1..max_vertices vertices, root 0, one per rooted
// isomorphism class, in order of size.
std::vector<Graph> rooted_trees(std::uint32_t max_vertices);

// Reduced graphs made of a cycle of length cycle_len (vertices 0..c-1) with a
// tree of at most max_tree_vertices non-cycle vertices attached at vertex 0.
// Includes the bare cycle. One graph per isomorphism class.
std::vector<Graph> one_attachment_graphs(std::uint32_t max_tree_vertices, std::uint32_t cycle_len = 3);

// Reduced graphs made of a triangle with trees attached at two or three of
// its vertices, at most max_tree_vertices non-cycle vertices in total.
std::vector<Graph> multi_attachment_graphs(std::uint32_t max_tree_vertices);

// Multisets of positive integers with sum <= max_total, non-increasing, the
// empty multiset first.
std::vector<std::vector<std::uint32_t>> bounded_multisets(std::uint32_t max_total);
// Multisets of exactly k positive integers with sum <= max_total.
std::vector<std::vector<std::uint32_t>> bounded_multisets_of_size(std::uint32_t k, std::uint32_t max_total);

}  // namespace takeaway
