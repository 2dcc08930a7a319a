#include "takeaway/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace takeaway {

namespace {

void put_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

using Adjacency = std::vector<Graph::Neighbours>;

bool is_simple_tree(const Graph& g) {
  return !has_loops(g) && !has_parallel_edges(g) && g.edges().size() + 1 == g.vertex_count();
}

// AHU encoding: '(' children-in-sorted-order ')'.
std::string ahu(const Adjacency& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (const auto& [w, mult] : adj[v]) {
    if (w != parent) kids.push_back(ahu(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ')';
  return s;
}

std::vector<Vertex> tree_centers(const Adjacency& adj) {
  const auto n = adj.size();
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (const auto& [w, mult] : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string tree_bytes(const Graph& g, std::optional<Vertex> root) {
  const auto adj = g.adjacency();
  constexpr Vertex kNone = ~Vertex{0};
  if (root) return "t" + ahu(adj, *root, kNone);
  std::string best;
  for (Vertex c : tree_centers(adj)) {
    std::string s = ahu(adj, c, kNone);
    if (best.empty() || s < best) best = std::move(s);
  }
  return "T" + best;
}

// Color refinement with individualization. Colors are start positions of
// cells in the ordered partition, so an equitable refinement is canonical.
class Refiner {
 public:
  Refiner(const Graph& g, std::optional<Vertex> root) : g_(g), adj_(g.adjacency()) {
    const auto n = g.vertex_count();
    std::vector<std::uint64_t> init(n);
    const auto deg = g.degrees();
    for (Vertex v = 0; v < n; ++v) {
      std::uint64_t is_other = (root && *root == v) ? 0 : 1;
      init[v] = (is_other << 62) | (std::uint64_t{g.loops(v)} << 32) | deg[v];
    }
    colors_.assign(n, 0);
    assign_by_signature(colors_, [&](Vertex v) { return std::vector<std::uint64_t>{init[v]}; });
  }

  std::string run() {
    search(colors_);
    return best_;
  }

 private:
  template <typename SigFn>
  static std::size_t assign_by_signature(std::vector<std::uint32_t>& colors, SigFn sig) {
    const auto n = colors.size();
    std::vector<std::vector<std::uint64_t>> sigs(n);
    for (Vertex v = 0; v < n; ++v) sigs[v] = sig(v);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sigs[a] < sigs[b]; });
    std::size_t cells = 0;
    std::uint32_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || sigs[order[i]] != sigs[order[i - 1]]) {
        start = static_cast<std::uint32_t>(i);
        ++cells;
      }
      colors[order[i]] = start;
    }
    return cells;
  }

  static std::size_t count_cells(const std::vector<std::uint32_t>& colors) {
    std::vector<std::uint32_t> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void refine(std::vector<std::uint32_t>& colors) const {
    std::size_t cells = count_cells(colors);
    for (;;) {
      std::vector<std::uint32_t> next(colors.size());
      std::size_t after = assign_by_signature(next, [&](Vertex v) {
        std::vector<std::uint64_t> s;
        s.reserve(adj_[v].size() + 1);
        for (const auto& [w, mult] : adj_[v]) s.push_back((std::uint64_t{colors[w]} << 32) | mult);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), colors[v]);
        return s;
      });
      colors = std::move(next);
      if (after == cells) return;
      cells = after;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    if (g_.loops(a) != g_.loops(b)) return false;
    auto strip = [&](Vertex x, Vertex other) {
      Graph::Neighbours out;
      for (const auto& p : adj_[x]) {
        if (p.first != other) out.push_back(p);
      }
      return out;
    };
    return strip(a, b) == strip(b, a);
  }

  void leaf(const std::vector<std::uint32_t>& pos) {
    const auto n = g_.vertex_count();
    std::vector<std::uint32_t> loops_at(n);
    for (Vertex v = 0; v < n; ++v) loops_at[pos[v]] = g_.loops(v);
    std::vector<std::array<std::uint32_t, 3>> edges;
    edges.reserve(g_.edges().size());
    for (const auto& e : g_.edges()) {
      auto a = pos[e.u], b = pos[e.v];
      if (a > b) std::swap(a, b);
      edges.push_back({a, b, e.multiplicity});
    }
    std::sort(edges.begin(), edges.end());
    std::string s;
    put_varint(s, n);
    for (auto c : loops_at) put_varint(s, c);
    for (const auto& t : edges) {
      for (auto x : t) put_varint(s, x);
    }
    if (!have_best_ || s < best_) {
      best_ = std::move(s);
      have_best_ = true;
    }
  }

  void search(std::vector<std::uint32_t> colors) {
    refine(colors);
    const auto n = colors.size();
    std::vector<std::uint32_t> size(n, 0);
    for (auto c : colors) ++size[c];
    std::uint32_t target = 0;
    bool found = false;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (size[c] > 1) {
        target = c;
        found = true;
        break;
      }
    }
    if (!found) {
      leaf(colors);
      return;
    }
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n; ++v) {
      if (colors[v] == target) cell.push_back(v);
    }
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      bool skip = std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); });
      if (skip) continue;
      tried.push_back(v);
      auto next = colors;
      for (Vertex w : cell) next[w] = target + 1;
      next[v] = target;
      search(std::move(next));
    }
  }

  const Graph& g_;
  Adjacency adj_;
  std::vector<std::uint32_t> colors_;
  std::string best_;
  bool have_best_ = false;
};

std::string connected_bytes(const Graph& g, std::optional<Vertex> root) {
  if (is_simple_tree(g)) return tree_bytes(g, root);
  std::string s(1, root ? 'g' : 'G');
  s += Refiner(g, root).run();
  return s;
}

}  // namespace

std::string CanonKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonKey CanonKey::from_hex(std::string_view hex, bool rooted) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw InputError("hex key has odd length");
  CanonKey key;
  key.rooted = rooted;
  key.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw InputError("hex key contains a non-hex character");
    key.bytes.push_back(static_cast<char>(hi * 16 + lo));
  }
  return key;
}

CanonKey canonical_key(const Graph& g, std::optional<Vertex> root) {
  if (root && !g.has_vertex(*root)) {
    throw InputError("canonical_key: root " + std::to_string(*root) + " is not a vertex");
  }
  CanonKey key;
  key.rooted = root.has_value();
  if (g.empty()) {
    key.bytes = "E";
    return key;
  }
  const auto sets = component_vertex_sets(g);
  if (sets.size() == 1) {
    key.bytes = connected_bytes(g, root);
    return key;
  }
  std::string rooted_part;
  std::vector<std::string> parts;
  for (const auto& set : sets) {
    Graph comp = induced_subgraph(g, set);
    std::optional<Vertex> local;
    if (root) {
      auto it = std::lower_bound(set.begin(), set.end(), *root);
      if (it != set.end() && *it == *root) local = static_cast<Vertex>(it - set.begin());
    }
    if (local) {
      rooted_part = connected_bytes(comp, local);
    } else {
      parts.push_back(connected_bytes(comp, std::nullopt));
    }
  }
  std::sort(parts.begin(), parts.end());
  key.bytes = root ? "d" : "D";
  if (root) {
    put_varint(key.bytes, rooted_part.size());
    key.bytes += rooted_part;
  }
  for (const auto& p : parts) {
    put_varint(key.bytes, p.size());
    key.bytes += p;
  }
  return key;
}

}  // namespace takeaway
