#include "takeaway/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace takeaway {

Graph::Graph(std::size_t vertex_count) : loops_(vertex_count, 0) {}

std::size_t Graph::edge_count() const {
  std::size_t total = std::accumulate(loops_.begin(), loops_.end(), std::size_t{0});
  for (const auto& e : edges_) total += e.multiplicity;
  return total;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= loops_.size()) {
    throw InputError("vertex " + std::to_string(v) + " out of range (graph has " +
                     std::to_string(loops_.size()) + " vertices)");
  }
}

namespace {

template <typename It>
It lower_bound_pair(It first, It last, Vertex u, Vertex v) {
  return std::lower_bound(first, last, Edge{u, v, 0}, [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
}

}  // namespace

std::vector<Edge>::iterator Graph::find_edge(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return lower_bound_pair(edges_.begin(), edges_.end(), u, v);
}

std::vector<Edge>::const_iterator Graph::find_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return lower_bound_pair(edges_.cbegin(), edges_.cend(), u, v);
}

std::uint32_t Graph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return loops_[u];
  if (u > v) std::swap(u, v);
  auto it = find_edge(u, v);
  if (it != edges_.end() && it->u == u && it->v == v) return it->multiplicity;
  return 0;
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 2 * std::size_t{loops_[v]};
  for (const auto& e : edges_) {
    if (e.u == v || e.v == v) d += e.multiplicity;
  }
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(loops_.size(), 0);
  for (std::size_t v = 0; v < loops_.size(); ++v) d[v] = 2 * std::size_t{loops_[v]};
  for (const auto& e : edges_) {
    d[e.u] += e.multiplicity;
    d[e.v] += e.multiplicity;
  }
  return d;
}

Vertex Graph::add_vertex() {
  loops_.push_back(0);
  return static_cast<Vertex>(loops_.size() - 1);
}

void Graph::add_edge(Vertex u, Vertex v, std::uint32_t count) {
  if (count == 0) return;
  set_multiplicity(u, v, multiplicity(u, v) + count);
}

void Graph::set_multiplicity(Vertex u, Vertex v, std::uint32_t count) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    loops_[u] = count;
    return;
  }
  if (u > v) std::swap(u, v);
  auto it = find_edge(u, v);
  bool present = it != edges_.end() && it->u == u && it->v == v;
  if (present) {
    if (count == 0) {
      edges_.erase(it);
    } else {
      it->multiplicity = count;
    }
  } else if (count > 0) {
    edges_.insert(it, Edge{u, v, count});
  }
}

void Graph::remove_edge(Vertex u, Vertex v) {
  std::uint32_t m = multiplicity(u, v);
  if (m == 0) {
    throw InputError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  }
  set_multiplicity(u, v, m - 1);
}

std::vector<Graph::Neighbours> Graph::adjacency() const {
  std::vector<Neighbours> adj(loops_.size());
  for (const auto& e : edges_) {
    adj[e.u].emplace_back(e.v, e.multiplicity);
    adj[e.v].emplace_back(e.u, e.multiplicity);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Move Move::delete_edge(Vertex a, Vertex b, std::uint32_t ordinal) {
  if (a > b) std::swap(a, b);
  return {Kind::DeleteEdge, a, b, ordinal};
}

std::string to_string(const Move& m) {
  if (m.is_vertex_move()) return "vertex " + std::to_string(m.u);
  std::string s = "edge " + std::to_string(m.u) + "-" + std::to_string(m.v);
  if (m.ordinal != 0) s += "#" + std::to_string(m.ordinal);
  return s;
}

Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex >= " + std::to_string(vertex_count));
    }
    g.add_edge(u, v);
  }
  return g;
}

Graph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build_graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph apply_move(const Graph& g, const Move& m) {
  if (m.is_vertex_move()) {
    if (!g.has_vertex(m.u)) throw InputError("cannot delete missing vertex " + std::to_string(m.u));
    return delete_vertex(g, m.u);
  }
  if (!g.has_vertex(m.u) || !g.has_vertex(m.v)) {
    throw InputError("cannot delete " + to_string(m) + ": endpoint out of range");
  }
  if (m.ordinal >= g.multiplicity(m.u, m.v)) {
    throw InputError("cannot delete " + to_string(m) + ": no such edge instance");
  }
  Graph out = g;
  out.remove_edge(m.u, m.v);
  return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  const Vertex doomed[] = {v};
  return delete_vertices(g, doomed);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> doomed) {
  std::vector<bool> drop(g.vertex_count(), false);
  for (Vertex v : doomed) {
    if (!g.has_vertex(v)) throw InputError("cannot delete missing vertex " + std::to_string(v));
    drop[v] = true;
  }
  std::vector<Vertex> keep;
  keep.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> index(g.vertex_count(), kAbsent);
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.has_vertex(keep[i])) throw InputError("induced_subgraph: vertex out of range");
    index[keep[i]] = static_cast<Vertex>(i);
    out.set_multiplicity(static_cast<Vertex>(i), static_cast<Vertex>(i), g.loops(keep[i]));
  }
  for (const auto& e : g.edges()) {
    if (index[e.u] != kAbsent && index[e.v] != kAbsent) {
      out.add_edge(index[e.u], index[e.v], e.multiplicity);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  auto offset = static_cast<Vertex>(a.vertex_count());
  for (Vertex v = 0; v < a.vertex_count(); ++v) out.set_multiplicity(v, v, a.loops(v));
  for (Vertex v = 0; v < b.vertex_count(); ++v) out.set_multiplicity(v + offset, v + offset, b.loops(v));
  for (const auto& e : a.edges()) out.add_edge(e.u, e.v, e.multiplicity);
  for (const auto& e : b.edges()) out.add_edge(e.u + offset, e.v + offset, e.multiplicity);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw InputError("relabel: permutation has wrong size");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p >= perm.size() || seen[p]) throw InputError("relabel: not a permutation");
    seen[p] = true;
  }
  Graph out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.set_multiplicity(perm[v], perm[v], g.loops(v));
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v], e.multiplicity);
  return out;
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g) {
  const auto n = g.vertex_count();
  // union-find over the edge classes
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Vertex>> sets;
  std::vector<int> slot(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(sets.size());
      sets.emplace_back();
    }
    sets[slot[r]].push_back(v);
  }
  return sets;
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& set : component_vertex_sets(g)) out.push_back(induced_subgraph(g, set));
  return out;
}

bool is_connected(const Graph& g) { return component_vertex_sets(g).size() <= 1; }

bool has_loops(const Graph& g) {
  const auto& loops = g.loop_counts();
  return std::any_of(loops.begin(), loops.end(), [](std::uint32_t c) { return c > 0; });
}

bool has_parallel_edges(const Graph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.multiplicity > 1; });
}

bool is_bipartite(const Graph& g) {
  if (has_loops(g)) return false;
  const auto adj = g.adjacency();
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& [y, mult] : adj[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_forest(const Graph& g) {
  if (has_loops(g) || has_parallel_edges(g)) return false;
  return g.edges().size() + component_vertex_sets(g).size() == g.vertex_count();
}

int phi(const Graph& g) {
  return static_cast<int>(g.vertex_count() % 2) + 2 * static_cast<int>(g.edge_count() % 2);
}

}  // namespace takeaway
