#include <doctest.h>

#include <sstream>

#include "takeaway/graph_io.hpp"

using namespace takeaway;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse a small file") {
  const Graph g = parse_graph("# triangle\nv 3\ne 0 1\n\ne 1 2 # comment\ne 2 0\ne 2 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 4);
  CHECK(g.loops(2) == 1);
}

TEST_CASE("empty graph") {
  const Graph g = parse_graph("v 0\n");
  CHECK(g.empty());
}

TEST_CASE("errors name the line") {
  CHECK(error_line("v 2\ne 0 2\n") == 2);
  CHECK(error_line("e 0 1\nv 2\n") == 1);
  CHECK(error_line("v 2\nv 2\n") == 2);
  CHECK(error_line("v 2\n\nx 1\n") == 3);
  CHECK(error_line("v 2\ne 0 -1\n") == 2);
  CHECK(error_line("v 2\ne 0\n") == 2);
  CHECK(error_line("# nothing\n") == 1);
  CHECK_THROWS_WITH_AS(parse_graph("v 1\ne 0 5\n"), doctest::Contains("line 2"), ParseError);
}

TEST_CASE("format round trip") {
  Graph g = build_graph(4, {{0, 1}, {0, 1}, {2, 3}});
  g.add_edge(1, 1, 2);
  const std::string text = format_graph(g, "demo");
  CHECK(text.rfind("# demo\nv 4\n", 0) == 0);
  CHECK(parse_graph(text) == g);
  std::istringstream in(text);
  CHECK(read_graph(in) == g);
}

TEST_CASE("missing file") { CHECK_THROWS_AS(read_graph_file("/nonexistent/graph"), InputError); }
