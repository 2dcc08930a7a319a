#pragma once

#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "takeaway/canon.hpp"
#include "takeaway/graph.hpp"

namespace takeaway {

using NimValue = std::uint32_t;

NimValue mex(std::span<const NimValue> values);
NimValue mex(std::initializer_list<NimValue> values);
NimValue nim_sum(std::span<const NimValue> values);
NimValue nim_sum(std::initializer_list<NimValue> values);

enum class MoveGeneration {
  Deduplicated,  // one move per parallel class and per looped vertex
  PerInstance,   // one move per edge instance
};

// Vertex moves first, then edge moves, each ascending by resulting size.
std::vector<Move> legal_moves(const Graph& g, MoveGeneration generation = MoveGeneration::Deduplicated);

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

// Concurrent CanonKey -> nim-value store. Each key is published at most once;
// a second publication with a different value throws std::logic_error.
class GrundyTable {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t inserts = 0;
  };

  GrundyTable();
  GrundyTable(const GrundyTable&) = delete;
  GrundyTable& operator=(const GrundyTable&) = delete;

  std::optional<NimValue> find(const CanonKey& key) const;
  void publish(const CanonKey& key, NimValue value);

  std::size_t size() const;
  Stats stats() const;
  void reset_stats();
  void clear();
  // Sorted by key bytes.
  std::vector<std::pair<CanonKey, NimValue>> entries() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<CanonKey, NimValue, CanonKeyHash> map;
  };
  Shard& shard_for(const CanonKey& key) const;

  std::unique_ptr<Shard[]> shards_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
  std::atomic<std::uint64_t> inserts_{0};
};

struct EngineOptions {
  // Table lookups allowed per top-level call.
  std::uint64_t node_budget = 100'000'000;
  MoveGeneration generation = MoveGeneration::Deduplicated;
  // Evaluate bipartite components as phi instead of searching them.
  bool bipartite_shortcut = false;
  // Replace each component by its reduced form before searching it.
  bool reduce_positions = false;
  // Evaluate components separately and combine them by nim-sum. When false a
  // disconnected position is searched as a whole.
  bool split_components = true;
};

struct MoveValuation {
  Move move;
  NimValue value = 0;

  friend bool operator==(const MoveValuation&, const MoveValuation&) = default;
};

NimValue grundy(const Graph& g, GrundyTable& table, const EngineOptions& options = {});
std::vector<MoveValuation> move_values(const Graph& g, GrundyTable& table, const EngineOptions& options = {});
std::vector<Move> winning_moves(const Graph& g, GrundyTable& table, const EngineOptions& options = {});

// OpenMP variants. Same results as the serial calls; the top-level options
// (or the batch entries) are evaluated concurrently against the shared table.
NimValue grundy_parallel(const Graph& g, GrundyTable& table, const EngineOptions& options = {});
std::vector<MoveValuation> move_values_parallel(const Graph& g, GrundyTable& table,
                                                const EngineOptions& options = {});
std::vector<NimValue> grundy_batch(std::span<const Graph> graphs, GrundyTable& table,
                                   const EngineOptions& options = {});

}  // namespace takeaway
