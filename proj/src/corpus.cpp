#include "takeaway/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace takeaway {

std::uint64_t Corpus::below(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }

std::uint64_t Corpus::between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

std::vector<Vertex> Corpus::permutation(std::uint32_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  for (std::uint32_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
  return p;
}

Graph Corpus::tree(std::uint32_t n) {
  Graph g(n);
  auto label = permutation(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(label[v], label[below(v)]);
  return g;
}

Graph Corpus::forest(std::uint32_t n) {
  Graph g(n);
  auto label = permutation(n);
  for (Vertex v = 1; v < n; ++v) {
    if (below(4) != 0) g.add_edge(label[v], label[below(v)]);
  }
  return g;
}

Graph Corpus::bipartite(std::uint32_t max_vertices) {
  const auto n = static_cast<std::uint32_t>(between(1, max_vertices));
  Graph g = forest(n);
  // Colour each component by BFS so added edges respect the sides.
  std::vector<int> side(n, -1);
  const auto adj = g.adjacency();
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = static_cast<int>(below(2));
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& [y, mult] : adj[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        }
      }
    }
  }
  const auto extra = below(3);
  for (std::uint64_t i = 0; i < extra * 2 && n >= 2; ++i) {
    Vertex u = static_cast<Vertex>(below(n)), v = static_cast<Vertex>(below(n));
    if (side[u] != side[v]) g.add_edge(u, v);
  }
  return g;
}

Graph Corpus::graph(std::uint32_t n, std::uint32_t m, bool allow_loops, bool allow_parallel) {
  Graph g(n);
  if (n == 0) return g;
  for (std::uint32_t tries = 0, added = 0; added < m && tries < 50 * (m + 1); ++tries) {
    Vertex u = static_cast<Vertex>(below(n)), v = static_cast<Vertex>(below(n));
    if (u == v) {
      if (!allow_loops || below(4) != 0) continue;
    } else if (!allow_parallel && g.multiplicity(u, v) > 0) {
      continue;
    }
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

Graph Corpus::small_graph(std::uint32_t max_vertices, std::uint32_t max_edges) {
  const auto n = static_cast<std::uint32_t>(between(1, max_vertices));
  const auto cap = std::min<std::uint64_t>(max_edges, n * 13 / 10 + 1);
  const auto m = static_cast<std::uint32_t>(below(cap + 1));
  const bool loops = below(3) == 0;
  const bool parallel = below(3) == 0;
  return graph(n, m, loops, parallel);
}

}  // namespace takeaway
