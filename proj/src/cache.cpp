#include "takeaway/cache.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "takeaway/graph_io.hpp"

namespace takeaway {

void cache_save(const GrundyTable& table, std::ostream& out) {
  out << "takeaway-cache " << kCacheVersion << '\n';
  for (const auto& [key, value] : table.entries()) out << key.hex() << ' ' << value << '\n';
}

void cache_save(const GrundyTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write cache " + path.string());
  cache_save(table, out);
}

std::size_t cache_load(GrundyTable& table, std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(line_no, "empty cache file");
  const std::string expected = "takeaway-cache " + std::to_string(kCacheVersion);
  if (line.rfind("takeaway-cache ", 0) != 0) throw ParseError(line_no, "not a cache file");
  if (line != expected) throw ParseError(line_no, "unsupported cache version '" + line.substr(15) + "'");
  std::size_t loaded = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto space = line.find(' ');
    if (space == std::string::npos || space == 0) throw ParseError(line_no, "expected 'HEXKEY VALUE'");
    CanonKey key;
    try {
      key = CanonKey::from_hex(std::string_view(line).substr(0, space));
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
    NimValue value = 0;
    const char* first = line.data() + space + 1;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc{} || ptr != last) throw ParseError(line_no, "bad nim-value");
    table.publish(key, value);
    ++loaded;
  }
  return loaded;
}

std::size_t cache_load(GrundyTable& table, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open cache " + path.string());
  return cache_load(table, in);
}

}  // namespace takeaway
