#include <doctest.h>

#include "takeaway/graph_io.hpp"
#include "takeaway/structure.hpp"

using namespace takeaway;

namespace {

Graph golden(const char* name) {
  return read_graph_file(std::filesystem::path(TAKEAWAY_DATA_DIR) / "golden" / name);
}

}  // namespace

TEST_CASE("unicyclic info") {
  const Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {4, 5}});
  const auto info = unicyclic_info(g);
  CHECK(info.cycle == std::vector<Vertex>{0, 1, 2});
  CHECK(info.attachments == std::vector<Vertex>{0, 1});
  REQUIRE(info.tree_parts.size() == 2);
  CHECK(info.tree_parts[0] == std::vector<Vertex>{3});
  CHECK(info.tree_parts[1] == std::vector<Vertex>{4, 5});
}

TEST_CASE("unicyclic preconditions") {
  CHECK_THROWS_AS(unicyclic_info(build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), StructureError);
  CHECK_THROWS_AS(unicyclic_info(build_graph(3, {{0, 1}, {1, 2}})), StructureError);
  CHECK_THROWS_AS(unicyclic_info(build_graph(2, {{0, 1}, {0, 1}})), StructureError);
  CHECK_THROWS_AS(cycle_component(build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})),
                  StructureError);
  const Graph two = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  CHECK(cycle_component(two) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("layers of the figure graph") {
  const Graph g = golden("fig3.graph");
  const auto layers = distance_layers(g, 0);
  CHECK(layers.sizes == std::vector<std::size_t>{2, 4, 4, 1, 2, 1});
  CHECK(tree_distance(g, 0, 12) == std::size_t{4});
  CHECK_FALSE(tree_distance(g, 0, 1).has_value());
  CHECK(tree_path(g, 0, 12) == std::vector<Vertex>{0, 6, 10, 11, 12});
}

TEST_CASE("telescoping vertices") {
  const Graph fig3 = golden("fig3.graph");
  CHECK(is_telescoping(fig3, 12));
  CHECK_FALSE(is_telescoping(fig3, 11));
  CHECK(find_telescoping(fig3) == Vertex{12});
  CHECK(find_telescoping(golden("fig5_q2.graph")) == Vertex{7});
  CHECK(find_telescoping(golden("fig5_q2_leaf.graph")) == Vertex{7});
  // Triangle with a path of length 2: the middle vertex telescopes.
  const Graph t2 = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}});
  CHECK(find_telescoping(t2) == Vertex{3});
  const Graph bare = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(find_telescoping(bare).has_value());
  CHECK_THROWS_AS(is_telescoping(fig3, 0), StructureError);
}
