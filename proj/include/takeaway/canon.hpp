#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "takeaway/graph.hpp"

namespace takeaway {

// Isomorphism-invariant encoding of a graph, optionally with one
// distinguished vertex. Equal keys if and only if the graphs are isomorphic
// (by a root-preserving isomorphism when rooted).
struct CanonKey {
  std::string bytes;
  bool rooted = false;

  std::string hex() const;
  static CanonKey from_hex(std::string_view hex, bool rooted = false);

  friend bool operator==(const CanonKey&, const CanonKey&) = default;
  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

CanonKey canonical_key(const Graph& g, std::optional<Vertex> root = std::nullopt);

struct CanonKeyHash {
  std::size_t operator()(const CanonKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes) ^ static_cast<std::size_t>(k.rooted);
  }
};

}  // namespace takeaway
