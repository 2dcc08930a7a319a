#pragma once

#include <filesystem>
#include <iosfwd>

#include "takeaway/engine.hpp"

namespace takeaway {

// Text file: "takeaway-cache 1", then one "HEXKEY VALUE" line per entry in
// key order.
inline constexpr int kCacheVersion = 1;

void cache_save(const GrundyTable& table, std::ostream& out);
void cache_save(const GrundyTable& table, const std::filesystem::path& path);
// Adds the entries to table; throws ParseError on a bad header or line.
std::size_t cache_load(GrundyTable& table, std::istream& in);
std::size_t cache_load(GrundyTable& table, const std::filesystem::path& path);

}  // namespace takeaway
