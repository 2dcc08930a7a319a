#include "takeaway/enumerate.hpp"

#include <set>
#include <unordered_set>

#include "takeaway/canon.hpp"
#include "takeaway/reducer.hpp"

namespace takeaway {

std::vector<Graph> rooted_trees(std::uint32_t max_vertices) {
  std::vector<Graph> out;
  if (max_vertices == 0) return out;
  std::vector<Graph> level{Graph(1)};
  for (std::uint32_t size = 1;; ++size) {
    out.insert(out.end(), level.begin(), level.end());
    if (size == max_vertices) break;
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const auto& t : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        Graph grown = t;
        Vertex leaf = grown.add_vertex();
        grown.add_edge(v, leaf);
        if (seen.insert(canonical_key(grown, Vertex{0}).bytes).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

// Glue the rooted tree t onto g, identifying t's root with vertex at.
void attach(Graph& g, Vertex at, const Graph& t) {
  std::vector<Vertex> map(t.vertex_count());
  map[0] = at;
  for (Vertex v = 1; v < t.vertex_count(); ++v) map[v] = g.add_vertex();
  for (const auto& e : t.edges()) g.add_edge(map[e.u], map[e.v], e.multiplicity);
}

Graph cycle(std::uint32_t len) {
  Graph g(len);
  for (Vertex i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
  return g;
}

}  // namespace

std::vector<Graph> one_attachment_graphs(std::uint32_t max_tree_vertices, std::uint32_t cycle_len) {
  std::vector<Graph> out;
  for (const auto& t : rooted_trees(max_tree_vertices + 1)) {
    Graph g = cycle(cycle_len);
    attach(g, 0, t);
    if (is_reduced(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> multi_attachment_graphs(std::uint32_t max_tree_vertices) {
  const auto trees = rooted_trees(max_tree_vertices + 1);
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const auto& t0 : trees) {
    for (const auto& t1 : trees) {
      for (const auto& t2 : trees) {
        const std::size_t sizes[] = {t0.vertex_count() - 1, t1.vertex_count() - 1, t2.vertex_count() - 1};
        if (sizes[0] + sizes[1] + sizes[2] > max_tree_vertices) continue;
        int used = (sizes[0] > 0) + (sizes[1] > 0) + (sizes[2] > 0);
        if (used < 2) continue;
        Graph g = cycle(3);
        attach(g, 0, t0);
        attach(g, 1, t1);
        attach(g, 2, t2);
        if (!seen.insert(canonical_key(g).bytes).second) continue;
        if (is_reduced(g)) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

namespace {

void multisets_rec(std::uint32_t max_part, std::uint32_t remaining, std::uint32_t slots,
                   std::vector<std::uint32_t>& cur, std::vector<std::vector<std::uint32_t>>& out, bool exact) {
  if (!exact || slots == 0) out.push_back(cur);
  if (slots == 0) return;
  for (std::uint32_t p = std::min(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    multisets_rec(p, remaining - p, slots - 1, cur, out, exact);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> bounded_multisets(std::uint32_t max_total) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  multisets_rec(max_total, max_total, max_total, cur, out, false);
  return out;
}

std::vector<std::vector<std::uint32_t>> bounded_multisets_of_size(std::uint32_t k, std::uint32_t max_total) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  multisets_rec(max_total, max_total, k, cur, out, true);
  return out;
}

}  // namespace takeaway
