#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "takeaway/graph.hpp"

namespace takeaway {

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: "v N" header, then one "e U V" line per edge instance ("e U U"
// for a loop). '#' starts a comment; blank lines are ignored.
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

// Edge instances are written in sorted order, loops at their vertex position.
std::string format_graph(const Graph& g, std::string_view comment = {});
void write_graph_file(const std::filesystem::path& path, const Graph& g, std::string_view comment = {});

}  // namespace takeaway
