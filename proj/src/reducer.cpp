#include "takeaway/reducer.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "takeaway/graph_io.hpp"

namespace takeaway {

Graph simplify_multiedges(const Graph& g) {
  Graph out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.set_multiplicity(v, v, g.loops(v) % 2);
  for (const auto& e : g.edges()) out.set_multiplicity(e.u, e.v, e.multiplicity % 2);
  return out;
}

namespace {

// Vertices reachable from start without using the edge start-blocked.
std::vector<Vertex> side_of(const std::vector<Graph::Neighbours>& adj, Vertex start, Vertex blocked,
                            bool& reached_blocked) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<Vertex> stack{start}, out;
  seen[start] = true;
  reached_blocked = false;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (const auto& [y, mult] : adj[x]) {
      if (x == start && y == blocked) continue;
      if (y == blocked) {
        reached_blocked = true;
        return {};
      }
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PendantPiece> pieces_from(const Graph& g, const std::vector<Graph::Neighbours>& adj, Vertex s) {
  std::vector<PendantPiece> pieces;
  for (const auto& [v, mult] : adj[s]) {
    if (mult != 1) continue;
    bool cyclic = false;
    auto side = side_of(adj, v, s, cyclic);
    if (cyclic) continue;
    Graph piece = induced_subgraph(g, side);
    auto gate = static_cast<Vertex>(std::lower_bound(side.begin(), side.end(), v) - side.begin());
    pieces.push_back({s, v, canonical_key(piece, gate), std::move(side)});
  }
  return pieces;
}

}  // namespace

std::vector<PendantPiece> pendant_pieces(const Graph& g, Vertex s) {
  if (!g.has_vertex(s)) throw InputError("pendant_pieces: vertex " + std::to_string(s) + " out of range");
  return pieces_from(g, g.adjacency(), s);
}

std::optional<CancelResult> cancel_once_logged(const Graph& g, PieceOrder order) {
  const auto adj = g.adjacency();
  struct Candidate {
    Vertex anchor;
    CanonKey key;
    const PendantPiece* first;
    const PendantPiece* second;
  };
  std::vector<std::vector<PendantPiece>> all(g.vertex_count());
  std::optional<Candidate> best;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    all[s] = pieces_from(g, adj, s);
    std::map<CanonKey, std::vector<const PendantPiece*>> by_key;
    for (const auto& p : all[s]) by_key[p.piece_key].push_back(&p);
    for (const auto& [key, list] : by_key) {
      if (list.size() < 2) continue;
      bool better = !best;
      if (best) {
        auto mine = std::tie(s, key);
        auto theirs = std::tie(best->anchor, best->key);
        better = order == PieceOrder::SmallestFirst ? mine < theirs : mine > theirs;
      }
      if (better) best = Candidate{s, key, list[0], list[1]};
    }
  }
  if (!best) return std::nullopt;
  std::vector<bool> drop(g.vertex_count(), false);
  for (Vertex v : best->first->vertices) drop[v] = true;
  for (Vertex v : best->second->vertices) drop[v] = true;
  CancelResult result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!drop[v]) result.kept.push_back(v);
  }
  result.graph = induced_subgraph(g, result.kept);
  result.what = {best->anchor, best->first->vertices.size()};
  return result;
}

std::optional<Graph> cancel_once(const Graph& g, PieceOrder order) {
  auto r = cancel_once_logged(g, order);
  if (!r) return std::nullopt;
  return std::move(r->graph);
}

ReduceResult reduce_logged(const Graph& g, PieceOrder order) {
  ReduceResult result{simplify_multiedges(g), {}, {}};
  result.kept.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) result.kept[v] = v;
  while (auto step = cancel_once_logged(result.graph, order)) {
    result.log.push_back({result.kept[step->what.anchor], step->what.piece_size});
    std::vector<Vertex> kept;
    kept.reserve(step->kept.size());
    for (Vertex v : step->kept) kept.push_back(result.kept[v]);
    result.kept = std::move(kept);
    result.graph = std::move(step->graph);
  }
  return result;
}

Graph reduce(const Graph& g, PieceOrder order) { return reduce_logged(g, order).graph; }

bool is_reduced(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.loops(v) > 1) return false;
  }
  for (const auto& e : g.edges()) {
    if (e.multiplicity > 1) return false;
  }
  return !cancel_once_logged(g).has_value();
}

void validate_involution(const Graph& g, const Involution& tau) {
  const auto& t = tau.mapping;
  const auto n = g.vertex_count();
  if (t.size() != n) {
    throw ValidationError("involution maps " + std::to_string(t.size()) + " vertices but the graph has " +
                          std::to_string(n));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (t[v] >= n) throw ValidationError("involution sends " + std::to_string(v) + " outside the graph");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (t[t[v]] != v) {
      throw ValidationError("not an involution: tau(tau(" + std::to_string(v) + ")) != " + std::to_string(v));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.loops(v) != g.loops(t[v])) {
      throw ValidationError("not an automorphism: loop counts differ at " + std::to_string(v));
    }
  }
  for (const auto& e : g.edges()) {
    if (g.multiplicity(t[e.u], t[e.v]) != e.multiplicity) {
      throw ValidationError("not an automorphism: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " has no image of equal multiplicity");
    }
  }
  // Bijective, so matching every edge class means equal edge multisets.
  for (Vertex v = 0; v < n; ++v) {
    if (t[v] != v && g.multiplicity(v, t[v]) > 0) {
      throw ValidationError("vertex " + std::to_string(v) + " is adjacent to its image " + std::to_string(t[v]));
    }
  }
}

Graph apply_involution(const Graph& g, const Involution& tau) {
  validate_involution(g, tau);
  std::vector<Vertex> fixed;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (tau.mapping[v] == v) fixed.push_back(v);
  }
  return induced_subgraph(g, fixed);
}

Graph apply_involutions(const Graph& g, std::span<const Involution> taus) {
  constexpr Vertex kGone = ~Vertex{0};
  Graph cur = g;
  std::vector<Vertex> now(g.vertex_count());  // g label -> current label
  for (Vertex v = 0; v < g.vertex_count(); ++v) now[v] = v;
  for (const auto& tau : taus) {
    if (tau.mapping.size() != g.vertex_count()) {
      throw ValidationError("involution has " + std::to_string(tau.mapping.size()) + " entries, graph has " +
                            std::to_string(g.vertex_count()) + " vertices");
    }
    Involution local;
    local.mapping.assign(cur.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (now[v] == kGone) continue;
      const Vertex image = tau.mapping[v];
      if (image >= g.vertex_count() || now[image] == kGone) {
        throw ValidationError("involution maps vertex " + std::to_string(v) + " to a removed vertex");
      }
      local.mapping[now[v]] = now[image];
    }
    cur = apply_involution(cur, local);
    Vertex next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (now[v] == kGone) continue;
      now[v] = local.mapping[now[v]] == now[v] ? next++ : kGone;
    }
  }
  return cur;
}

Involution parse_involution(std::string_view text) {
  Involution tau;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      Vertex v = 0;
      auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
      if (ec != std::errc() || end != word.data() + word.size()) {
        throw ParseError(line_no, "expected a vertex index, got '" + word + "'");
      }
      tau.mapping.push_back(v);
    }
  }
  return tau;
}

Involution read_involution_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_involution(buf.str());
}

}  // namespace takeaway
