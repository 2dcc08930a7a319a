#include "takeaway/structure.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "takeaway/reducer.hpp"

namespace takeaway {

namespace {

std::vector<Vertex> peel_to_cycle(const Graph& g) {
  auto deg = g.degrees();
  const auto adj = g.adjacency();
  std::vector<bool> gone(g.vertex_count(), false);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    Vertex x = leaves.back();
    leaves.pop_back();
    if (gone[x]) continue;
    gone[x] = true;
    for (const auto& [y, mult] : adj[x]) {
      if (!gone[y] && --deg[y] == 1) leaves.push_back(y);
    }
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) rest.push_back(v);
  }
  return rest;
}

void check_simple_unicyclic(const Graph& g) {
  if (has_loops(g)) throw StructureError("graph has a loop");
  if (has_parallel_edges(g)) throw StructureError("graph has parallel edges (an even cycle of length 2)");
  if (!is_connected(g)) throw StructureError("graph is not connected");
  if (g.edges().size() < g.vertex_count()) throw StructureError("graph has no cycle");
  if (g.edges().size() > g.vertex_count()) throw StructureError("graph has more than one cycle");
}

// g restricted to its cycle component, with the index map back to g.
struct Restricted {
  Graph graph;
  std::vector<Vertex> to_outer;
  std::vector<Vertex> to_inner;  // kAbsent outside the component
};

constexpr Vertex kAbsent = ~Vertex{0};

Restricted restrict_to_cycle_component(const Graph& g) {
  Restricted r;
  r.to_outer = cycle_component(g);
  r.graph = induced_subgraph(g, r.to_outer);
  r.to_inner.assign(g.vertex_count(), kAbsent);
  for (Vertex i = 0; i < r.to_outer.size(); ++i) r.to_inner[r.to_outer[i]] = i;
  return r;
}

struct SingleAttachment {
  Restricted part;
  UnicyclicInfo info;
  Vertex a = 0;  // inner index
};

SingleAttachment single_attachment(const Graph& g) {
  SingleAttachment s{restrict_to_cycle_component(g), {}, 0};
  s.info = unicyclic_info(s.part.graph);
  if (s.info.attachments.size() != 1) {
    throw StructureError("expected exactly one attachment vertex, found " +
                         std::to_string(s.info.attachments.size()));
  }
  s.a = s.info.attachments[0];
  return s;
}

}  // namespace

UnicyclicInfo unicyclic_info(const Graph& g) {
  check_simple_unicyclic(g);
  auto on_cycle = peel_to_cycle(g);
  if (on_cycle.size() % 2 == 0) {
    throw StructureError("the cycle has even length " + std::to_string(on_cycle.size()));
  }
  const auto adj = g.adjacency();
  std::vector<bool> is_cycle(g.vertex_count(), false);
  for (Vertex v : on_cycle) is_cycle[v] = true;

  UnicyclicInfo info;
  Vertex prev = kAbsent, cur = on_cycle.front();
  do {
    info.cycle.push_back(cur);
    Vertex next = kAbsent;
    for (const auto& [y, mult] : adj[cur]) {
      if (is_cycle[y] && y != prev) {
        next = y;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != info.cycle.front());

  for (Vertex c : on_cycle) {
    if (adj[c].size() <= 2) continue;
    info.attachments.push_back(c);
    std::vector<Vertex> part;
    std::vector<Vertex> stack;
    std::vector<bool> seen(g.vertex_count(), false);
    seen[c] = true;
    for (const auto& [y, mult] : adj[c]) {
      if (!is_cycle[y]) {
        stack.push_back(y);
        seen[y] = true;
      }
    }
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      part.push_back(x);
      for (const auto& [y, mult] : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(part.begin(), part.end());
    info.tree_parts.push_back(std::move(part));
  }
  return info;
}

std::vector<Vertex> cycle_component(const Graph& g) {
  if (has_loops(g)) throw StructureError("graph has a loop");
  std::optional<std::vector<Vertex>> found;
  for (auto& set : component_vertex_sets(g)) {
    Graph c = induced_subgraph(g, set);
    if (is_forest(c)) continue;
    if (found) throw StructureError("more than one component contains a cycle");
    found = std::move(set);
  }
  if (!found) throw StructureError("graph has no cycle");
  return *found;
}

std::optional<std::size_t> tree_distance(const Graph& g, Vertex a, Vertex v) {
  const auto path = tree_path(g, a, v);
  if (path.empty()) return std::nullopt;
  return path.size() - 1;
}

std::vector<Vertex> tree_path(const Graph& g, Vertex a, Vertex v) {
  auto s = single_attachment(g);
  const auto& inner = s.part.to_inner;
  if (!g.has_vertex(a) || !g.has_vertex(v) || inner[a] != s.a || inner[v] == kAbsent) return {};
  const auto adj = s.part.graph.adjacency();
  std::vector<bool> is_cycle(s.part.graph.vertex_count(), false);
  for (Vertex c : s.info.cycle) is_cycle[c] = true;
  std::vector<Vertex> parent(s.part.graph.vertex_count(), kAbsent);
  std::deque<Vertex> queue{s.a};
  parent[s.a] = s.a;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (const auto& [y, mult] : adj[x]) {
      if (!is_cycle[y] && parent[y] == kAbsent) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  Vertex target = inner[v];
  if (parent[target] == kAbsent) return {};
  std::vector<Vertex> path;
  for (Vertex x = target; x != s.a; x = parent[x]) path.push_back(s.part.to_outer[x]);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

LayerProfile distance_layers(const Graph& g, Vertex a) {
  auto s = single_attachment(g);
  if (!g.has_vertex(a) || s.part.to_inner[a] != s.a) {
    throw StructureError("vertex " + std::to_string(a) + " is not the attachment vertex");
  }
  const auto& h = s.part.graph;
  const auto adj = h.adjacency();
  const auto deg = h.degrees();
  std::vector<bool> seen(h.vertex_count(), false);
  for (Vertex c : s.info.cycle) seen[c] = true;
  LayerProfile profile;
  std::vector<Vertex> layer{s.a};
  for (;;) {
    std::vector<Vertex> next;
    for (Vertex x : layer) {
      for (const auto& [y, mult] : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          next.push_back(y);
        }
      }
    }
    if (next.empty()) break;
    std::size_t total = 0;
    for (Vertex y : next) total += deg[y];
    profile.sizes.push_back(next.size());
    profile.total_degrees.push_back(total);
    layer = std::move(next);
  }
  return profile;
}

bool is_telescoping(const Graph& g, Vertex v) {
  auto s = single_attachment(g);
  if (!is_reduced(s.part.graph)) throw StructureError("graph is not reduced");
  if (!g.has_vertex(v) || s.part.to_inner[v] == kAbsent) {
    throw StructureError("vertex " + std::to_string(v) + " is not in the cycle component");
  }
  const Vertex iv = s.part.to_inner[v];
  if (std::find(s.info.cycle.begin(), s.info.cycle.end(), iv) != s.info.cycle.end()) {
    throw StructureError("vertex " + std::to_string(v) + " lies on the cycle");
  }
  Graph without = delete_vertex(s.part.graph, iv);
  const Vertex a_after = s.a < iv ? s.a : s.a - 1;
  auto reduced = reduce_logged(without);
  auto it = std::find(reduced.kept.begin(), reduced.kept.end(), a_after);
  if (it == reduced.kept.end()) throw ConsistencyError("reduction removed the attachment vertex");
  const auto a_final = static_cast<Vertex>(it - reduced.kept.begin());
  for (const auto& set : component_vertex_sets(reduced.graph)) {
    if (std::binary_search(set.begin(), set.end(), a_final)) return set.size() == s.info.cycle.size();
  }
  return false;
}

std::optional<Vertex> find_telescoping(const Graph& g) {
  auto part = restrict_to_cycle_component(g);
  if (unicyclic_info(part.graph).attachments.empty()) return std::nullopt;
  auto s = single_attachment(g);
  std::optional<Vertex> found;
  for (const auto& part : s.info.tree_parts) {
    for (Vertex x : part) {
      Vertex outer = s.part.to_outer[x];
      if (!is_telescoping(g, outer)) continue;
      if (found) {
        throw ConsistencyError("two telescoping vertices: " + std::to_string(*found) + " and " +
                               std::to_string(outer));
      }
      found = outer;
    }
  }
  return found;
}

}  // namespace takeaway
