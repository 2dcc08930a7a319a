#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "takeaway/canon.hpp"
#include "takeaway/graph.hpp"

namespace takeaway {

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// Multiplicities and loop counts taken mod 2.
Graph simplify_multiedges(const Graph& g);

struct PendantPiece {
  Vertex anchor = 0;
  Vertex gate = 0;
  CanonKey piece_key;           // the gate's side, rooted at the gate
  std::vector<Vertex> vertices;  // sorted; includes the gate
};

// Pieces hanging from s by a single bridge edge s-gate.
std::vector<PendantPiece> pendant_pieces(const Graph& g, Vertex s);

enum class PieceOrder {
  SmallestFirst,  // smallest (anchor, piece_key) pair
  LargestFirst,
};

struct Cancellation {
  Vertex anchor = 0;
  std::size_t piece_size = 0;  // vertices in one of the two pieces
};

struct CancelResult {
  Graph graph;
  std::vector<Vertex> kept;  // kept[i] is the input vertex that became vertex i
  Cancellation what;
};

std::optional<CancelResult> cancel_once_logged(const Graph& g, PieceOrder order = PieceOrder::SmallestFirst);
std::optional<Graph> cancel_once(const Graph& g, PieceOrder order = PieceOrder::SmallestFirst);

struct ReduceResult {
  Graph graph;
  std::vector<Vertex> kept;         // input vertex of each result vertex
  std::vector<Cancellation> log;    // anchors are input vertex ids
};

ReduceResult reduce_logged(const Graph& g, PieceOrder order = PieceOrder::SmallestFirst);
Graph reduce(const Graph& g, PieceOrder order = PieceOrder::SmallestFirst);
bool is_reduced(const Graph& g);

struct Involution {
  std::vector<Vertex> mapping;
};

// Throws ValidationError naming the first violated condition.
void validate_involution(const Graph& g, const Involution& tau);
// Induced subgraph on the fixed vertices; validates first.
Graph apply_involution(const Graph& g, const Involution& tau);
// Applies each involution in turn. Every mapping uses g's labels and must
// send surviving vertices to surviving vertices.
Graph apply_involutions(const Graph& g, std::span<const Involution> taus);

// Text form: the images of vertices 0..n-1 as whitespace-separated integers;
// '#' starts a comment. Throws ParseError naming the line.
Involution parse_involution(std::string_view text);
Involution read_involution_file(const std::filesystem::path& path);

}  // namespace takeaway
