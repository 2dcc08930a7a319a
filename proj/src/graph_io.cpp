#include "takeaway/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <fstream>
#include <sstream>
#include <vector>

namespace takeaway {

ParseError::ParseError(std::size_t line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

std::uint64_t parse_index(std::string_view word, std::size_t line) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), x);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
  }
  if (x > 0xffffffffULL) throw ParseError(line, "integer too large: " + std::string(word));
  return x;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "v") {
      if (g) throw ParseError(line_no, "duplicate 'v' header");
      if (words.size() != 2) throw ParseError(line_no, "header must be 'v N'");
      g.emplace(parse_index(words[1], line_no));
    } else if (words[0] == "e") {
      if (!g) throw ParseError(line_no, "edge before 'v N' header");
      if (words.size() != 3) throw ParseError(line_no, "edge line must be 'e U V'");
      auto u = parse_index(words[1], line_no), v = parse_index(words[2], line_no);
      if (u >= g->vertex_count() || v >= g->vertex_count()) {
        throw ParseError(line_no, "edge endpoint out of range for " + std::to_string(g->vertex_count()) +
                                      " vertices");
      }
      g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      throw ParseError(line_no, "unrecognised line starting with '" + std::string(words[0]) + "'");
    }
  }
  if (!g) throw ParseError(std::max<std::size_t>(line_no, 1), "missing 'v N' header");
  return *g;
}

Graph read_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_graph(in);
}

std::string format_graph(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "v " << g.vertex_count() << '\n';
  std::size_t next = 0;
  auto flush_loops_before = [&](Vertex u) {
    for (; next < g.vertex_count() && next <= u; ++next) {
      for (std::uint32_t i = 0; i < g.loops(static_cast<Vertex>(next)); ++i) out << "e " << next << ' ' << next << '\n';
    }
  };
  for (const auto& e : g.edges()) {
    flush_loops_before(e.u);
    for (std::uint32_t i = 0; i < e.multiplicity; ++i) out << "e " << e.u << ' ' << e.v << '\n';
  }
  if (g.vertex_count() > 0) flush_loops_before(static_cast<Vertex>(g.vertex_count() - 1));
  return out.str();
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_graph(g, comment);
}

}  // namespace takeaway
