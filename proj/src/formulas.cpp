#include "takeaway/formulas.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "takeaway/reducer.hpp"
#include "takeaway/structure.hpp"

namespace takeaway {

std::string Predicted::to_string() const {
  return is_exact() ? std::to_string(value) : ">=" + std::to_string(value);
}

std::string to_string(Status s) { return s == Status::Theorem ? "theorem" : "conjecture"; }

std::string to_string(Player p) { return p == Player::FirstPlayer ? "first" : "second"; }

PathMultiset::PathMultiset(std::vector<std::uint32_t> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

PathMultiset::PathMultiset(std::initializer_list<std::uint32_t> lengths)
    : PathMultiset(std::vector<std::uint32_t>(lengths)) {}

std::uint64_t PathMultiset::total() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), std::uint64_t{0});
}

std::uint64_t PathMultiset::alternating() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < lengths_.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * std::int64_t{lengths_[i]};
  return static_cast<std::uint64_t>(s);
}

NimValue lambda_val(std::uint64_t k) {
  std::uint64_t m = k / 3;
  return static_cast<NimValue>(k % 3 == 1 ? 2 * m + 1 : 2 * m);
}

NimValue ell_val(std::uint64_t x) {
  if (x == 0) throw InputError("ell is defined for x >= 1");
  return 2 * lambda_val(x - 1);
}

std::set<NimValue> e_set(std::uint64_t k) {
  if (k == 0) throw InputError("E(k) is defined for k >= 1");
  std::set<NimValue> out;
  if (k >= 2) {
    out.insert(ell_val(k - 1));
    out.insert(ell_val(k - 1) ^ 1);
  }
  for (std::uint64_t i = 1; i + 2 <= k; ++i) {
    out.insert(ell_val(i) ^ 1);
    out.insert(ell_val(i) ^ 2);
  }
  return out;
}

Predicted predict_bipartite(const Graph& g) {
  if (!is_bipartite(g)) throw DomainError("graph is not bipartite");
  return Predicted::exact(static_cast<NimValue>(phi(g)));
}

namespace {

struct OddCycleShape {
  std::size_t attachments = 0;
  std::optional<Vertex> telescoping;
};

// Shared precondition checks for the one-odd-cycle predictors.
OddCycleShape inspect_one_odd_cycle(const Graph& g, bool need_connected) {
  if (!is_reduced(g)) throw DomainError("graph is not reduced");
  if (need_connected && !is_connected(g)) throw DomainError("graph is not connected");
  try {
    auto comp = cycle_component(g);
    auto info = unicyclic_info(induced_subgraph(g, comp));
    OddCycleShape shape;
    shape.attachments = info.attachments.size();
    if (shape.attachments == 1) shape.telescoping = find_telescoping(g);
    return shape;
  } catch (const StructureError& e) {
    throw DomainError(e.what());
  }
}

bool odd_degree_telescoping(const Graph& g, const OddCycleShape& shape) {
  return shape.telescoping && g.degree(*shape.telescoping) % 2 == 1;
}

}  // namespace

Predicted predict_one_attachment(const Graph& g) {
  auto shape = inspect_one_odd_cycle(g, true);
  if (shape.attachments > 1) throw DomainError("cycle has more than one attachment vertex");
  if (shape.attachments == 0) return Predicted::exact(0);
  if (odd_degree_telescoping(g, shape)) return Predicted::at_least_four();
  return Predicted::exact(static_cast<NimValue>(phi(g)));
}

Predicted predict_multi_attachment(const Graph& g) {
  auto shape = inspect_one_odd_cycle(g, false);
  if (shape.attachments < 2) throw DomainError("cycle has fewer than two attachment vertices");
  return Predicted::exact(static_cast<NimValue>(phi(g)));
}

Player winner_one_odd_cycle(const Graph& g) {
  auto shape = inspect_one_odd_cycle(g, false);
  const int f = phi(g);
  bool second = false;
  if (shape.attachments == 0) {
    second = f == 3;
  } else if (shape.attachments == 1) {
    second = f == 0 && !odd_degree_telescoping(g, shape);
  } else {
    second = f == 0;
  }
  return second ? Player::SecondPlayer : Player::FirstPlayer;
}

Predicted predict_complete(std::uint64_t n) { return Predicted::exact(static_cast<NimValue>(n % 3)); }

Predicted predict_multipartite(std::span<const std::uint64_t> parts) {
  std::uint64_t s = 0;
  for (auto p : parts) s += p % 2;
  return Predicted::exact(static_cast<NimValue>(s % 3));
}

Predicted predict_complete_loops(std::uint64_t n, std::uint64_t m) {
  if (m > n) throw InputError("K_n(m) needs m <= n");
  return Predicted::exact(static_cast<NimValue>((m + n) % 3));
}

Predicted predict_G1(std::uint64_t n) {
  if (n < 4) throw InputError("G1(n) needs n >= 4");
  return Predicted::exact(2 * lambda_val(n - 3));
}

Predicted predict_G2(std::uint64_t n) { return Predicted::exact(2 * lambda_val(n)); }

namespace {

void require_odd_cycle(std::uint64_t len) {
  if (len < 3 || len % 2 == 0) throw InputError("cycle length must be odd and at least 3");
}

NimValue phi_of(std::uint64_t vertices, std::uint64_t edges) {
  return static_cast<NimValue>(vertices % 2 + 2 * (edges % 2));
}

}  // namespace

Predicted predict_R(const PathMultiset& xs, std::uint64_t cycle_len) {
  require_odd_cycle(cycle_len);
  for (auto x : xs.lengths()) {
    if (x == 0) throw InputError("R-graph path lengths must be positive");
  }
  if (xs.size() % 2 == 1) {
    const auto size = cycle_len + 1 + xs.total();
    return Predicted::exact(phi_of(size, size));
  }
  NimValue l = 0;
  for (auto x : xs.lengths()) l ^= ell_val(x);
  return Predicted::exact(l + 4);
}

Predicted predict_rodd(std::uint64_t r, const PathMultiset& xs, std::uint64_t cycle_len) {
  require_odd_cycle(cycle_len);
  const auto hat = xs.alternating();
  if (r % 2 == 1 && hat == 0) return Predicted::exact(0);
  if (r % 2 == 1 && hat == 1) return Predicted::exact(4);
  return Predicted::exact(phi_of(1 + r * (cycle_len - 1) + xs.total(), r * cycle_len + xs.total()));
}

Predicted predict_xyz(const PathMultiset& xs, const PathMultiset& ys, std::span<const std::uint32_t> zs) {
  std::uint64_t z = 0;
  for (auto zi : zs) {
    if (zi == 0) throw InputError("linking path lengths must be positive");
    z += zi;
  }
  const auto k = zs.size();
  const auto hat = xs.alternating() + ys.alternating();
  if (k % 2 == 0 && z % 2 == 1 && hat == 0) return Predicted::exact(0);
  if (k % 2 == 0 && z % 2 == 1 && hat == 1) return Predicted::exact(4);
  const auto xyz = xs.total() + ys.total() + z;
  return Predicted::exact(static_cast<NimValue>((xyz + k) % 2 + 2 * (xyz % 2)));
}

StatusPrediction predict_wheel(std::uint64_t n) {
  if (n < 3) throw InputError("W_n needs n >= 3");
  Status s = (n % 2 == 0 || n <= 25) ? Status::Theorem : Status::Conjecture;
  return {Predicted::exact(1), s};
}

StatusPrediction predict_fan(std::uint64_t n, FanVariant variant) {
  if (variant == FanVariant::Fan) {
    if (n < 3) throw InputError("F_n needs n >= 3");
    if (n % 2 == 1) return {Predicted::exact(2), Status::Theorem};
    return {Predicted::exact(3), Status::Conjecture};
  }
  if (n < 4) throw InputError("F*_n needs n >= 4");
  if (n % 2 == 0) return {Predicted::exact(1), Status::Theorem};
  if (n < 7) throw InputError("no prediction for F*_n with odd n < 7");
  return {Predicted::exact(4), Status::Conjecture};
}

}  // namespace takeaway
