#include <doctest.h>

#include <set>

#include "takeaway/canon.hpp"
#include "takeaway/enumerate.hpp"
#include "takeaway/reducer.hpp"
#include "takeaway/structure.hpp"

using namespace takeaway;

TEST_CASE("rooted tree counts") {
  // Rooted trees on 1..8 vertices: 1, 1, 2, 4, 9, 20, 48, 115.
  const auto trees = rooted_trees(8);
  std::vector<std::size_t> counts(9, 0);
  for (const auto& t : trees) {
    CHECK(is_forest(t));
    CHECK(is_connected(t));
    ++counts[t.vertex_count()];
  }
  CHECK(counts == std::vector<std::size_t>{0, 1, 1, 2, 4, 9, 20, 48, 115});
}

TEST_CASE("multiset counts") {
  // Partitions of 0..6: 1, 1, 2, 3, 5, 7, 11.
  CHECK(bounded_multisets(6).size() == 30);
  CHECK(bounded_multisets(0).size() == 1);
  CHECK(bounded_multisets_of_size(2, 4).size() == 4);  // 11 21 31 22
  CHECK(bounded_multisets_of_size(0, 4).size() == 1);
  for (const auto& m : bounded_multisets(5)) CHECK(std::is_sorted(m.rbegin(), m.rend()));
}

TEST_CASE("one-attachment graphs are reduced, distinct and unicyclic") {
  const auto graphs = one_attachment_graphs(7);
  std::set<CanonKey> keys;
  for (const auto& g : graphs) {
    CHECK(is_reduced(g));
    const auto info = unicyclic_info(g);
    CHECK(info.cycle.size() == 3);
    CHECK(info.attachments.size() <= 1);
    keys.insert(canonical_key(g));
  }
  CHECK(keys.size() == graphs.size());
  CHECK(graphs.front().vertex_count() == 3);
  CHECK(one_attachment_graphs(3, 5).front().vertex_count() == 5);
}

TEST_CASE("multi-attachment graphs") {
  const auto graphs = multi_attachment_graphs(6);
  std::set<CanonKey> keys;
  for (const auto& g : graphs) {
    CHECK(is_reduced(g));
    CHECK(unicyclic_info(g).attachments.size() >= 2);
    keys.insert(canonical_key(g));
  }
  CHECK(keys.size() == graphs.size());
  CHECK_FALSE(graphs.empty());
}
