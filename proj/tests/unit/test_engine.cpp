#include <doctest.h>

#include <algorithm>

#include "../oracle.hpp"
#include "takeaway/corpus.hpp"
#include "takeaway/engine.hpp"
#include "takeaway/families.hpp"
#include "takeaway/reducer.hpp"

using namespace takeaway;

TEST_CASE("mex and nim-sum") {
  CHECK(mex({}) == 0);
  CHECK(mex({0, 1, 3}) == 2);
  CHECK(mex({1, 2}) == 0);
  CHECK(mex({3, 2, 1, 0, 0}) == 4);
  CHECK(nim_sum({}) == 0);
  CHECK(nim_sum({1, 2, 3}) == 0);
  CHECK(nim_sum({4, 1}) == 5);
}

TEST_CASE("small positions") {
  GrundyTable t;
  CHECK(grundy(Graph(), t) == 0);
  CHECK(grundy(Graph(1), t) == 1);
  CHECK(grundy(build_graph(3, {{0, 1}, {1, 2}, {2, 0}}), t) == 0);
  CHECK(grundy(build_graph(3, {{0, 1}, {1, 2}}), t) == 1);
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(grundy(c4, t) == 0);
  for (const auto& mv : move_values(c4, t)) CHECK(mv.value != 0);
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  const auto wins = winning_moves(p3, t);
  CHECK_FALSE(wins.empty());
  for (const auto& m : wins) CHECK(grundy(apply_move(p3, m), t) == 0);
}

TEST_CASE("engine matches the labelled oracle") {
  Corpus corpus(3);
  oracle::Solver solver;
  GrundyTable t;
  for (int i = 0; i < 250; ++i) {
    const Graph g = corpus.small_graph(6, 8);
    const auto want = solver.value(g);
    CHECK(grundy(g, t) == want);
  }
}

TEST_CASE("every option value matches the oracle") {
  Corpus corpus(4);
  oracle::Solver solver;
  GrundyTable t;
  for (int i = 0; i < 60; ++i) {
    const Graph g = corpus.small_graph(6, 8);
    for (const auto& mv : move_values(g, t, {.generation = MoveGeneration::PerInstance})) {
      CHECK(mv.value == solver.value(apply_move(g, mv.move)));
    }
  }
}

TEST_CASE("move generation") {
  Graph g = build_graph(3, {{0, 1}, {0, 1}, {1, 2}});
  g.add_edge(2, 2, 2);
  const auto dedup = legal_moves(g);
  const auto all = legal_moves(g, MoveGeneration::PerInstance);
  CHECK(dedup.size() == 3 + 3);
  CHECK(all.size() == 3 + 5);
  CHECK(dedup.front().is_vertex_move());
  CHECK(dedup.front().u == 1);  // the vertex of largest non-loop degree goes first
  CHECK(std::count_if(all.begin(), all.end(), [](const Move& m) { return !m.is_vertex_move(); }) == 5);
}

TEST_CASE("serial, parallel and batch agree") {
  Corpus corpus(5);
  std::vector<Graph> graphs;
  for (int i = 0; i < 40; ++i) graphs.push_back(corpus.small_graph(8, 11));
  GrundyTable serial, parallel, batch;
  const auto bv = grundy_batch(graphs, batch);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto s = grundy(graphs[i], serial);
    CHECK(grundy_parallel(graphs[i], parallel) == s);
    CHECK(bv[i] == s);
    CHECK(move_values_parallel(graphs[i], parallel) == move_values(graphs[i], serial));
  }
}

TEST_CASE("engine options leave values unchanged") {
  Corpus corpus(6);
  for (int i = 0; i < 150; ++i) {
    const Graph g = corpus.small_graph(7, 9);
    GrundyTable a, b, c, d;
    const auto plain = grundy(g, a);
    CHECK(grundy(g, b, {.bipartite_shortcut = true, .reduce_positions = true}) == plain);
    CHECK(grundy(g, c, {.split_components = false}) == plain);
    CHECK(grundy(g, d, {.generation = MoveGeneration::PerInstance}) == plain);
  }
}

TEST_CASE("budget exhaustion") {
  GrundyTable t;
  const Graph w = generate(family::Wheel{6});
  CHECK_THROWS_AS(grundy(w, t, {.node_budget = 10}), BudgetExhausted);
  CHECK_THROWS_AS(grundy_parallel(w, t, {.node_budget = 10}), BudgetExhausted);
  CHECK(grundy(w, t) == 1);
}

TEST_CASE("table contract") {
  GrundyTable t;
  const auto key = canonical_key(Graph(2));
  t.publish(key, 0);
  t.publish(key, 0);
  CHECK_THROWS_AS(t.publish(key, 1), std::logic_error);
  CHECK(t.find(key) == NimValue{0});
  CHECK(t.size() == 1);
  CHECK(t.entries().size() == 1);
  t.clear();
  CHECK(t.size() == 0);
  CHECK_FALSE(t.find(key).has_value());
}

TEST_CASE("memoised answers do not depend on table warmth") {
  Corpus corpus(8);
  std::vector<Graph> graphs;
  for (int i = 0; i < 50; ++i) graphs.push_back(corpus.small_graph(7, 9));
  GrundyTable warm;
  std::vector<NimValue> first;
  for (const auto& g : graphs) first.push_back(grundy(g, warm));
  std::reverse(graphs.begin(), graphs.end());
  std::reverse(first.begin(), first.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    GrundyTable cold;
    CHECK(grundy(graphs[i], cold) == first[i]);
    CHECK(grundy(graphs[i], warm) == first[i]);
  }
}
