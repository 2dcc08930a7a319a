#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "takeaway/engine.hpp"
#include "takeaway/graph.hpp"

namespace takeaway {

// Raised when a graph-driven predictor is handed a graph outside its family.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

struct Predicted {
  enum class Kind { Exact, AtLeast };

  Kind kind = Kind::Exact;
  NimValue value = 0;

  static Predicted exact(NimValue v) { return {Kind::Exact, v}; }
  static Predicted at_least_four() { return {Kind::AtLeast, 4}; }

  bool is_exact() const { return kind == Kind::Exact; }
  // Whether an engine value is consistent with the prediction.
  bool admits(NimValue observed) const { return is_exact() ? observed == value : observed >= value; }
  std::string to_string() const;

  friend bool operator==(const Predicted&, const Predicted&) = default;
};

enum class Status { Theorem, Conjecture };
std::string to_string(Status s);

struct StatusPrediction {
  Predicted prediction;
  Status status = Status::Theorem;
};

// Path lengths kept in non-increasing order.
class PathMultiset {
 public:
  PathMultiset() = default;
  explicit PathMultiset(std::vector<std::uint32_t> lengths);
  PathMultiset(std::initializer_list<std::uint32_t> lengths);

  const std::vector<std::uint32_t>& lengths() const { return lengths_; }
  std::size_t size() const { return lengths_.size(); }
  bool empty() const { return lengths_.empty(); }
  std::uint64_t total() const;        // X
  std::uint64_t alternating() const;  // X-hat

 private:
  std::vector<std::uint32_t> lengths_;
};

NimValue lambda_val(std::uint64_t k);
NimValue ell_val(std::uint64_t x);
// E(k); E(1) is empty.
std::set<NimValue> e_set(std::uint64_t k);

Predicted predict_bipartite(const Graph& g);
// g: reduced, connected, one odd cycle carrying at most one tree.
Predicted predict_one_attachment(const Graph& g);
// g: reduced, one odd cycle with two or more attachments, other components trees.
Predicted predict_multi_attachment(const Graph& g);

enum class Player { FirstPlayer, SecondPlayer };
std::string to_string(Player p);
Player winner_one_odd_cycle(const Graph& g);

Predicted predict_complete(std::uint64_t n);
Predicted predict_multipartite(std::span<const std::uint64_t> parts);
Predicted predict_complete_loops(std::uint64_t n, std::uint64_t m);

Predicted predict_G1(std::uint64_t n);
Predicted predict_G2(std::uint64_t n);

Predicted predict_R(const PathMultiset& xs, std::uint64_t cycle_len = 3);
Predicted predict_rodd(std::uint64_t r, const PathMultiset& xs, std::uint64_t cycle_len = 3);
Predicted predict_xyz(const PathMultiset& xs, const PathMultiset& ys, std::span<const std::uint32_t> zs);

StatusPrediction predict_wheel(std::uint64_t n);

enum class FanVariant { Fan, FanHandle };
StatusPrediction predict_fan(std::uint64_t n, FanVariant variant);

}  // namespace takeaway
