#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "takeaway/graph.hpp"

namespace takeaway {

class StructureError : public InputError {
 public:
  using InputError::InputError;
};

// Raised when two telescoping vertices are found in one graph.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct UnicyclicInfo {
  std::vector<Vertex> cycle;        // walk order, starting at the smallest vertex
  std::vector<Vertex> attachments;  // cycle vertices of degree > 2, ascending
  // tree_parts[i]: vertices hanging from attachments[i], not including it
  std::vector<std::vector<Vertex>> tree_parts;
};

// g must be connected, loop-free and contain exactly one cycle, of odd length.
UnicyclicInfo unicyclic_info(const Graph& g);

// Vertex set of the single component carrying a cycle; every other component
// must be a tree. Throws StructureError otherwise.
std::vector<Vertex> cycle_component(const Graph& g);

struct LayerProfile {
  std::vector<std::size_t> sizes;          // |S_1|, |S_2|, ...
  std::vector<std::size_t> total_degrees;  // sum of degrees in g per layer
};

// Layers of the tree at the unique attachment vertex a of g's cycle component.
LayerProfile distance_layers(const Graph& g, Vertex a);

// Distance from a to v through the tree part, or nullopt when v is not there.
std::optional<std::size_t> tree_distance(const Graph& g, Vertex a, Vertex v);
// Vertices on the tree path from a to v inclusive.
std::vector<Vertex> tree_path(const Graph& g, Vertex a, Vertex v);

// Delete v, reduce, and test whether the cycle's component is the bare cycle.
// g must be reduced with a single attachment vertex; v must be a tree vertex.
bool is_telescoping(const Graph& g, Vertex v);
std::optional<Vertex> find_telescoping(const Graph& g);

}  // namespace takeaway
