#include "takeaway/families.hpp"

#include <charconv>
#include <sstream>

namespace takeaway {

namespace {

using namespace family;

// Appends a path of `length` new vertices starting at `from`.
void add_path(Graph& g, Vertex from, std::uint32_t length) {
  Vertex prev = from;
  for (std::uint32_t i = 0; i < length; ++i) {
    Vertex v = g.add_vertex();
    g.add_edge(prev, v);
    prev = v;
  }
}

// Links a and b by a path with `length` edges.
void add_link(Graph& g, Vertex a, Vertex b, std::uint32_t length) {
  Vertex prev = a;
  for (std::uint32_t i = 1; i < length; ++i) {
    Vertex v = g.add_vertex();
    g.add_edge(prev, v);
    prev = v;
  }
  g.add_edge(prev, b);
}

// Appends a cycle of `length` through existing vertex at.
void add_cycle_at(Graph& g, Vertex at, std::uint32_t length) { add_link(g, at, at, length); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

Graph wheel_minus(std::uint32_t n, int removed_rim_edges) {
  Graph g(n + 1);
  for (Vertex i = 1; i <= n; ++i) g.add_edge(0, i);
  for (Vertex i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n, 1);
  if (removed_rim_edges >= 1) g.remove_edge(n, 1);
  if (removed_rim_edges >= 2) g.remove_edge(n - 1, n);
  return g;
}

Graph complete(std::uint32_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

struct Generator {
  Graph operator()(const Path& p) const {
    Graph g(p.n);
    for (Vertex i = 0; i + 1 < p.n; ++i) g.add_edge(i, i + 1);
    return g;
  }
  Graph operator()(const Cycle& c) const {
    require(c.n >= 2, "cycle needs n >= 2");
    Graph g(c.n);
    for (Vertex i = 0; i < c.n; ++i) g.add_edge(i, (i + 1) % c.n);
    return g;
  }
  Graph operator()(const Complete& c) const { return complete(c.n); }
  Graph operator()(const Multipartite& m) const {
    std::vector<std::uint32_t> part_of;
    for (std::uint32_t p = 0; p < m.parts.size(); ++p) part_of.insert(part_of.end(), m.parts[p], p);
    Graph g(part_of.size());
    for (Vertex u = 0; u < part_of.size(); ++u) {
      for (Vertex v = u + 1; v < part_of.size(); ++v) {
        if (part_of[u] != part_of[v]) g.add_edge(u, v);
      }
    }
    return g;
  }
  Graph operator()(const CompleteLoops& c) const {
    require(c.m <= c.n, "K_n(m) needs m <= n");
    Graph g = complete(c.n);
    for (Vertex v = 0; v < c.m; ++v) g.add_edge(v, v);
    return g;
  }
  Graph operator()(const Wheel& w) const {
    require(w.n >= 3, "wheel needs n >= 3");
    return wheel_minus(w.n, 0);
  }
  Graph operator()(const Fan& f) const {
    require(f.n >= 3, "fan needs n >= 3");
    return wheel_minus(f.n, 1);
  }
  Graph operator()(const FanHandle& f) const {
    require(f.n >= 4, "fan with a handle needs n >= 4");
    return wheel_minus(f.n, 2);
  }
  Graph operator()(const FanHandleMinusSpokes& f) const {
    require(f.n >= 4, "fan with a handle needs n >= 4");
    require(f.s1 >= 1 && f.s1 < f.n && f.s2 >= 1 && f.s2 < f.n && f.s1 != f.s2,
            "removed spokes must be two distinct rim vertices in 1..n-1");
    Graph g = wheel_minus(f.n, 2);
    g.remove_edge(0, f.s1);
    g.remove_edge(0, f.s2);
    return g;
  }
  Graph operator()(const Q& q) const {
    require(q.n >= 3 && q.n % 2 == 1, "Q_n needs odd n >= 3");
    Graph g(q.n + 1);
    for (Vertex i = 1; i + 1 < q.n; ++i) g.add_edge(i, i + 1);
    for (Vertex i = 1; i < q.n; ++i) {
      if (i != (q.n + 1) / 2) g.add_edge(0, i);
    }
    return g;
  }
  Graph operator()(const R& r) const {
    require(r.cycle_len >= 3 && r.cycle_len % 2 == 1, "R-graph cycle length must be odd and >= 3");
    Graph g(r.cycle_len + 1);
    for (Vertex i = 0; i < r.cycle_len; ++i) g.add_edge(i, (i + 1) % r.cycle_len);
    const Vertex b = r.cycle_len;
    g.add_edge(0, b);
    for (auto x : r.xs) {
      require(x >= 1, "R-graph path lengths must be positive");
      add_path(g, b, x);
    }
    return g;
  }
  Graph operator()(const ROdd& r) const {
    Graph g(1);
    for (auto c : r.cycle_lens) {
      require(c >= 3 && c % 2 == 1, "cycle lengths must be odd and >= 3");
      add_cycle_at(g, 0, c);
    }
    for (auto x : r.xs) add_path(g, 0, x);
    return g;
  }
  Graph operator()(const XYZ& s) const {
    Graph g(2);
    for (auto z : s.zs) {
      require(z >= 1, "linking path lengths must be positive");
      add_link(g, 0, 1, z);
    }
    for (auto x : s.xs) add_path(g, 0, x);
    for (auto y : s.ys) add_path(g, 1, y);
    return g;
  }
  Graph operator()(const G1& f) const {
    require(f.n >= 4, "G1(n) needs n >= 4");
    Graph g = build_graph(4, {{1, 2}, {0, 1}, {0, 2}, {1, 3}, {2, 3}});
    add_path(g, 0, f.n - 4);
    return g;
  }
  Graph operator()(const G2& f) const {
    Graph g(f.n);
    for (Vertex i = 0; i + 1 < f.n; ++i) g.add_edge(i, i + 1);
    if (f.n > 0) g.add_edge(0, 0);
    return g;
  }
  Graph operator()(const H& h) const {
    require(h.i >= 1 && h.i <= 3, "H(i, k) needs i in 1..3");
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}});
    const Vertex a = 0, s1 = 3, s2 = 4, s3 = 5;
    switch (h.i) {
      case 1:
        add_path(g, s1, 1);
        add_path(g, s2, 1);
        add_path(g, s2, 3);
        add_path(g, s3, 3);
        break;
      case 2:
      case 3:
        add_path(g, a, 4);
        add_path(g, s1, 2);
        add_path(g, s1, 3);
        add_path(g, s2, h.i == 2 ? 1 : 2);
        add_path(g, s3, 4);
        break;
    }
    add_path(g, s3, h.k);
    return g;
  }
  Graph operator()(const Exceptional& e) const {
    require(e.i >= 1 && e.j >= 1 && e.i + e.j == 7, "exceptional graphs need i, j >= 1 and i + j = 7");
    Graph g = complete(e.i);
    std::vector<Vertex> second{0};
    for (std::uint32_t t = 1; t < e.j; ++t) second.push_back(g.add_vertex());
    for (std::size_t a = 0; a < second.size(); ++a) {
      for (std::size_t b = a + 1; b < second.size(); ++b) g.add_edge(second[a], second[b]);
    }
    return g;
  }
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint32_t to_uint(std::string_view s, std::string_view spec) {
  std::uint32_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("bad number '" + std::string(s) + "' in family spec '" + std::string(spec) + "'");
  }
  return x;
}

std::vector<std::uint32_t> to_list(std::string_view s, std::string_view spec) {
  std::vector<std::uint32_t> out;
  if (s.empty()) return out;
  for (auto part : split(s, ',')) out.push_back(to_uint(part, spec));
  return out;
}

std::string join(const std::vector<std::uint32_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

Graph generate(const FamilySpec& spec) { return std::visit(Generator{}, spec); }

FamilySpec parse_family_spec(std::string_view text) {
  auto fields = split(text, ':');
  const auto name = fields[0];
  auto arity = [&](std::size_t n) {
    if (fields.size() != n + 1) {
      throw InputError("family '" + std::string(name) + "' takes " + std::to_string(n) + " field(s): '" +
                       std::string(text) + "'");
    }
  };
  auto num = [&](std::size_t i) { return to_uint(fields[i], text); };
  auto list = [&](std::size_t i) { return to_list(fields[i], text); };
  auto pair = [&](std::size_t i) {
    auto xs = list(i);
    if (xs.size() != 2) throw InputError("expected two comma-separated numbers in '" + std::string(text) + "'");
    return xs;
  };

  if (name == "path") { arity(1); return Path{num(1)}; }
  if (name == "cycle") { arity(1); return Cycle{num(1)}; }
  if (name == "complete") { arity(1); return Complete{num(1)}; }
  if (name == "multipartite") { arity(1); return Multipartite{list(1)}; }
  if (name == "complete-loops") { arity(2); return CompleteLoops{num(1), num(2)}; }
  if (name == "wheel") { arity(1); return Wheel{num(1)}; }
  if (name == "fan") { arity(1); return Fan{num(1)}; }
  if (name == "fan-handle") { arity(1); return FanHandle{num(1)}; }
  if (name == "fan-handle-minus") {
    arity(2);
    auto s = pair(2);
    return FanHandleMinusSpokes{num(1), s[0], s[1]};
  }
  if (name == "q") { arity(1); return Q{num(1)}; }
  if (name == "r") { arity(2); return R{num(1), list(2)}; }
  if (name == "rodd") { arity(2); return ROdd{list(1), list(2)}; }
  if (name == "xyz") { arity(3); return XYZ{list(1), list(2), list(3)}; }
  if (name == "g1") { arity(1); return G1{num(1)}; }
  if (name == "g2") { arity(1); return G2{num(1)}; }
  if (name == "h") { arity(2); return H{num(1), num(2)}; }
  if (name == "exceptional") {
    arity(1);
    auto s = pair(1);
    return Exceptional{s[0], s[1]};
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::string format_family_spec(const FamilySpec& spec) {
  struct Formatter {
    std::string operator()(const Path& p) const { return "path:" + std::to_string(p.n); }
    std::string operator()(const Cycle& c) const { return "cycle:" + std::to_string(c.n); }
    std::string operator()(const Complete& c) const { return "complete:" + std::to_string(c.n); }
    std::string operator()(const Multipartite& m) const { return "multipartite:" + join(m.parts); }
    std::string operator()(const CompleteLoops& c) const {
      return "complete-loops:" + std::to_string(c.n) + ":" + std::to_string(c.m);
    }
    std::string operator()(const Wheel& w) const { return "wheel:" + std::to_string(w.n); }
    std::string operator()(const Fan& f) const { return "fan:" + std::to_string(f.n); }
    std::string operator()(const FanHandle& f) const { return "fan-handle:" + std::to_string(f.n); }
    std::string operator()(const FanHandleMinusSpokes& f) const {
      return "fan-handle-minus:" + std::to_string(f.n) + ":" + std::to_string(f.s1) + "," + std::to_string(f.s2);
    }
    std::string operator()(const Q& q) const { return "q:" + std::to_string(q.n); }
    std::string operator()(const R& r) const { return "r:" + std::to_string(r.cycle_len) + ":" + join(r.xs); }
    std::string operator()(const ROdd& r) const { return "rodd:" + join(r.cycle_lens) + ":" + join(r.xs); }
    std::string operator()(const XYZ& s) const { return "xyz:" + join(s.xs) + ":" + join(s.ys) + ":" + join(s.zs); }
    std::string operator()(const G1& f) const { return "g1:" + std::to_string(f.n); }
    std::string operator()(const G2& f) const { return "g2:" + std::to_string(f.n); }
    std::string operator()(const H& h) const { return "h:" + std::to_string(h.i) + ":" + std::to_string(h.k); }
    std::string operator()(const Exceptional& e) const {
      return "exceptional:" + std::to_string(e.i) + "," + std::to_string(e.j);
    }
  };
  return std::visit(Formatter{}, spec);
}

}  // namespace takeaway
