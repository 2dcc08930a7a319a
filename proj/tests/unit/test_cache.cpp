#include <doctest.h>

#include <sstream>

#include "takeaway/cache.hpp"
#include "takeaway/families.hpp"
#include "takeaway/graph_io.hpp"

using namespace takeaway;

namespace {

std::size_t load_error_line(const std::string& text) {
  GrundyTable t;
  std::istringstream in(text);
  try {
    cache_load(t, in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("empty table round trip") {
  GrundyTable a, b;
  std::stringstream s;
  cache_save(a, s);
  CHECK(s.str() == "takeaway-cache 1\n");
  CHECK(cache_load(b, s) == 0);
  CHECK(b.size() == 0);
}

TEST_CASE("round trip and warm replay") {
  GrundyTable a;
  const Graph w = generate(family::Wheel{5});
  const NimValue v = grundy(w, a);
  std::stringstream s;
  cache_save(a, s);
  GrundyTable b;
  CHECK(cache_load(b, s) == a.size());
  CHECK(b.entries() == a.entries());
  b.reset_stats();
  CHECK(grundy(w, b) == v);
  CHECK(b.stats().misses == 0);
  CHECK(b.stats().inserts == 0);
}

TEST_CASE("file round trip") {
  GrundyTable a;
  grundy(generate(family::Fan{5}), a);
  const auto path = std::filesystem::temp_directory_path() / "takeaway_cache_test.txt";
  cache_save(a, path);
  GrundyTable b;
  CHECK(cache_load(b, path) == a.size());
  CHECK(b.entries() == a.entries());
  std::filesystem::remove(path);
}

TEST_CASE("corrupt files name the line") {
  CHECK(load_error_line("") == 1);
  CHECK(load_error_line("something else\n") == 1);
  CHECK(load_error_line("takeaway-cache 2\n") == 1);
  CHECK(load_error_line("takeaway-cache 1\n4501 0\nxyz 1\n") == 3);
  CHECK(load_error_line("takeaway-cache 1\n4501\n") == 2);
  CHECK(load_error_line("takeaway-cache 1\n4501 q\n") == 2);
}

TEST_CASE("conflicting entries are rejected") {
  GrundyTable t;
  std::istringstream in("takeaway-cache 1\n4501 0\n4501 1\n");
  CHECK_THROWS(cache_load(t, in));
}
