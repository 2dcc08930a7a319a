#include "takeaway/engine.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "takeaway/reducer.hpp"

namespace takeaway {

NimValue mex(std::span<const NimValue> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (NimValue v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  NimValue m = 0;
  while (seen[m]) ++m;
  return m;
}

NimValue mex(std::initializer_list<NimValue> values) {
  return mex(std::span<const NimValue>(values.begin(), values.size()));
}

NimValue nim_sum(std::span<const NimValue> values) {
  NimValue x = 0;
  for (NimValue v : values) x ^= v;
  return x;
}

NimValue nim_sum(std::initializer_list<NimValue> values) {
  return nim_sum(std::span<const NimValue>(values.begin(), values.size()));
}

std::vector<Move> legal_moves(const Graph& g, MoveGeneration generation) {
  std::vector<Move> moves;
  const auto deg = g.degrees();
  std::vector<Vertex> order(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) order[v] = v;
  // Larger degree leaves a smaller position.
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return deg[a] - g.loops(a) > deg[b] - g.loops(b);
  });
  for (Vertex v : order) moves.push_back(Move::delete_vertex(v));

  auto emit = [&](Vertex u, Vertex v, std::uint32_t mult) {
    std::uint32_t copies = generation == MoveGeneration::PerInstance ? mult : 1;
    for (std::uint32_t i = 0; i < copies; ++i) moves.push_back(Move::delete_edge(u, v, i));
  };
  std::size_t next_loop = 0;
  auto loops_up_to = [&](Vertex u) {
    for (; next_loop < g.vertex_count() && next_loop <= u; ++next_loop) {
      auto x = static_cast<Vertex>(next_loop);
      if (g.loops(x) > 0) emit(x, x, g.loops(x));
    }
  };
  for (const auto& e : g.edges()) {
    loops_up_to(e.u);
    emit(e.u, e.v, e.multiplicity);
  }
  if (g.vertex_count() > 0) loops_up_to(static_cast<Vertex>(g.vertex_count() - 1));
  return moves;
}

BudgetExhausted::BudgetExhausted(std::uint64_t budget)
    : std::runtime_error("node budget of " + std::to_string(budget) + " table lookups exhausted"),
      budget_(budget) {}

GrundyTable::GrundyTable() : shards_(std::make_unique<Shard[]>(kShards)) {}

GrundyTable::Shard& GrundyTable::shard_for(const CanonKey& key) const {
  return shards_[CanonKeyHash{}(key) % kShards];
}

std::optional<NimValue> GrundyTable::find(const CanonKey& key) const {
  Shard& s = shard_for(key);
  std::shared_lock lock(s.mutex);
  auto it = s.map.find(key);
  if (it == s.map.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void GrundyTable::publish(const CanonKey& key, NimValue value) {
  Shard& s = shard_for(key);
  std::unique_lock lock(s.mutex);
  auto [it, inserted] = s.map.emplace(key, value);
  if (inserted) {
    inserts_.fetch_add(1, std::memory_order_relaxed);
  } else if (it->second != value) {
    throw std::logic_error("conflicting nim-values published for key " + key.hex() + ": " +
                           std::to_string(it->second) + " vs " + std::to_string(value));
  }
}

std::size_t GrundyTable::size() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < kShards; ++i) {
    std::shared_lock lock(shards_[i].mutex);
    n += shards_[i].map.size();
  }
  return n;
}

GrundyTable::Stats GrundyTable::stats() const {
  return {hits_.load(), misses_.load(), inserts_.load()};
}

void GrundyTable::reset_stats() {
  hits_ = 0;
  misses_ = 0;
  inserts_ = 0;
}

void GrundyTable::clear() {
  for (std::size_t i = 0; i < kShards; ++i) {
    std::unique_lock lock(shards_[i].mutex);
    shards_[i].map.clear();
  }
  reset_stats();
}

std::vector<std::pair<CanonKey, NimValue>> GrundyTable::entries() const {
  std::vector<std::pair<CanonKey, NimValue>> out;
  for (std::size_t i = 0; i < kShards; ++i) {
    std::shared_lock lock(shards_[i].mutex);
    out.insert(out.end(), shards_[i].map.begin(), shards_[i].map.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// One evaluation context. Several may share a table and a lookup counter.
class Search {
 public:
  Search(GrundyTable& table, const EngineOptions& options, std::atomic<std::uint64_t>& lookups)
      : table_(table), options_(options), lookups_(lookups) {}

  NimValue position(const Graph& g) {
    if (g.empty()) return 0;
    if (!options_.split_components) return component(g);
    const auto sets = component_vertex_sets(g);
    if (sets.size() == 1) return component(g);
    NimValue x = 0;
    for (const auto& set : sets) x ^= component(induced_subgraph(g, set));
    return x;
  }

  // Non-empty g; connected unless components are not being split.
  NimValue component(const Graph& g) {
    if (options_.bipartite_shortcut && is_bipartite(g)) return static_cast<NimValue>(phi(g));
    CanonKey key = canonical_key(g);
    if (auto hit = lookup(key)) return *hit;
    NimValue value;
    if (options_.reduce_positions && !is_reduced(g)) {
      value = position(reduce(g));
    } else {
      value = mex_of_options(g);
    }
    table_.publish(key, value);
    return value;
  }

  std::optional<NimValue> lookup(const CanonKey& key) {
    if (lookups_.fetch_add(1, std::memory_order_relaxed) >= options_.node_budget) {
      throw BudgetExhausted(options_.node_budget);
    }
    return table_.find(key);
  }

  NimValue mex_of_options(const Graph& g) {
    const auto moves = legal_moves(g, options_.generation);
    std::vector<NimValue> values;
    values.reserve(moves.size());
    for (const auto& m : moves) values.push_back(position(apply_move(g, m)));
    return mex(values);
  }

 private:
  GrundyTable& table_;
  const EngineOptions& options_;
  std::atomic<std::uint64_t>& lookups_;
};

std::vector<NimValue> parallel_option_values(const Graph& g, const std::vector<Move>& moves,
                                             GrundyTable& table, const EngineOptions& options,
                                             std::atomic<std::uint64_t>& lookups) {
  std::vector<NimValue> values(moves.size(), 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<std::int64_t>(moves.size());
#pragma omp parallel
  {
    Search local(table, options, lookups);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        values[i] = local.position(apply_move(g, moves[i]));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return values;
}

}  // namespace

NimValue grundy(const Graph& g, GrundyTable& table, const EngineOptions& options) {
  std::atomic<std::uint64_t> lookups{0};
  return Search(table, options, lookups).position(g);
}

std::vector<MoveValuation> move_values(const Graph& g, GrundyTable& table, const EngineOptions& options) {
  std::atomic<std::uint64_t> lookups{0};
  Search search(table, options, lookups);
  std::vector<MoveValuation> out;
  for (const auto& m : legal_moves(g, options.generation)) out.push_back({m, search.position(apply_move(g, m))});
  return out;
}

std::vector<Move> winning_moves(const Graph& g, GrundyTable& table, const EngineOptions& options) {
  std::vector<Move> out;
  for (const auto& mv : move_values(g, table, options)) {
    if (mv.value == 0) out.push_back(mv.move);
  }
  return out;
}

NimValue grundy_parallel(const Graph& g, GrundyTable& table, const EngineOptions& options) {
  std::atomic<std::uint64_t> lookups{0};
  Search serial(table, options, lookups);
  NimValue x = 0;
  for (const auto& set : component_vertex_sets(g)) {
    Graph c = induced_subgraph(g, set);
    if (options.bipartite_shortcut && is_bipartite(c)) {
      x ^= static_cast<NimValue>(phi(c));
      continue;
    }
    CanonKey key = canonical_key(c);
    if (auto hit = serial.lookup(key)) {
      x ^= *hit;
      continue;
    }
    NimValue value;
    if (options.reduce_positions && !is_reduced(c)) {
      value = grundy_parallel(reduce(c), table, options);
    } else {
      const auto moves = legal_moves(c, options.generation);
      value = mex(parallel_option_values(c, moves, table, options, lookups));
    }
    table.publish(key, value);
    x ^= value;
  }
  return x;
}

std::vector<MoveValuation> move_values_parallel(const Graph& g, GrundyTable& table,
                                                const EngineOptions& options) {
  std::atomic<std::uint64_t> lookups{0};
  const auto moves = legal_moves(g, options.generation);
  const auto values = parallel_option_values(g, moves, table, options, lookups);
  std::vector<MoveValuation> out;
  out.reserve(moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) out.push_back({moves[i], values[i]});
  return out;
}

std::vector<NimValue> grundy_batch(std::span<const Graph> graphs, GrundyTable& table,
                                   const EngineOptions& options) {
  std::vector<NimValue> values(graphs.size(), 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      values[i] = grundy(graphs[i], table, options);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return values;
}

}  // namespace takeaway
