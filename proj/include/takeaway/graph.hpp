#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace takeaway {

using Vertex = std::uint32_t;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One class of parallel non-loop edges, u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t multiplicity = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite multigraph with loops on the dense vertex set 0..n-1.
//
// Parallel edges are kept as a sorted list of (pair, multiplicity) classes and
// loops as a per-vertex count, so parity reductions work on multiplicities
// directly.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const { return loops_.size(); }
  // Every parallel edge and every loop counts once.
  std::size_t edge_count() const;
  bool empty() const { return loops_.empty(); }
  bool has_vertex(Vertex v) const { return v < loops_.size(); }

  std::uint32_t loops(Vertex v) const { return loops_.at(v); }
  // u == v answers the loop count.
  std::uint32_t multiplicity(Vertex u, Vertex v) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& loop_counts() const { return loops_; }

  // Loops contribute 2.
  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;

  Vertex add_vertex();
  void add_edge(Vertex u, Vertex v, std::uint32_t count = 1);
  void set_multiplicity(Vertex u, Vertex v, std::uint32_t count);
  // Removes one instance; throws InputError when none exists.
  void remove_edge(Vertex u, Vertex v);

  // adjacency()[v] lists (neighbour, multiplicity) for non-loop neighbours in
  // increasing neighbour order.
  using Neighbours = std::vector<std::pair<Vertex, std::uint32_t>>;
  std::vector<Neighbours> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  std::vector<Edge>::iterator find_edge(Vertex u, Vertex v);
  std::vector<Edge>::const_iterator find_edge(Vertex u, Vertex v) const;

  std::vector<std::uint32_t> loops_;
  std::vector<Edge> edges_;
};

struct Move {
  enum class Kind : std::uint8_t { DeleteVertex, DeleteEdge };

  Kind kind = Kind::DeleteVertex;
  Vertex u = 0;
  Vertex v = 0;               // equals u for vertex moves and loops
  std::uint32_t ordinal = 0;  // which parallel instance of edge uv

  static Move delete_vertex(Vertex x) { return {Kind::DeleteVertex, x, x, 0}; }
  static Move delete_edge(Vertex a, Vertex b, std::uint32_t ordinal = 0);

  bool is_vertex_move() const { return kind == Kind::DeleteVertex; }

  friend auto operator<=>(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
Graph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

// DeleteVertex compacts indices: vertices above the deleted one shift down.
Graph apply_move(const Graph& g, const Move& m);
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_vertices(const Graph& g, std::span<const Vertex> doomed);

// keep[i] becomes vertex i of the result; all edges among kept vertices stay.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph disjoint_union(const Graph& a, const Graph& b);
// perm[old] = new; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);
// Vertex sets of the connected components, each sorted, ordered by smallest
// member.
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g);
std::vector<Graph> components(const Graph& g);

// Loops are odd closed walks; parallel edges alone keep a graph bipartite.
bool is_bipartite(const Graph& g);
bool has_loops(const Graph& g);
bool has_parallel_edges(const Graph& g);
// Forest with neither loops nor parallel edges.
bool is_forest(const Graph& g);

// (|V| mod 2) + 2 (|E| mod 2)
int phi(const Graph& g);

}  // namespace takeaway
