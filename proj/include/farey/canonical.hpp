#ifndef FAREY_CANONICAL_HPP
#define FAREY_CANONICAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "farey/graph.hpp"

namespace farey {

/// Isomorphism-invariant byte code for small graphs. Two graphs with the
/// same number of pins get equal codes exactly when some isomorphism maps
/// pin i of one to pin i of the other.
struct CanonicalCode {
    std::vector<std::uint8_t> code;
    std::vector<std::uint32_t> pin_images;  // canonical positions of the pins, in pin order

    bool operator==(const CanonicalCode&) const = default;
    auto operator<=>(const CanonicalCode&) const = default;

    std::string hex() const;
};

inline constexpr std::uint32_t kDefaultCanonicalCap = 16;
inline constexpr std::uint32_t kMaxCanonicalCap = 32;

/// Canonical form with pinned vertices held at the first positions in pin
/// order; the remaining vertices are arranged to minimize the adjacency
/// bit string. Errors when the graph exceeds `cap` vertices.
CanonicalCode canonical_form(const Graph& g, std::span<const VertexId> pins = {},
                             std::uint32_t cap = kDefaultCanonicalCap);

/// Induced isomorphism g1 -> g2 extending pin_map (pairs of (g1 vertex,
/// g2 vertex)), or nullopt. Preserves both edges and non-edges.
std::optional<std::vector<VertexId>> find_isomorphism(
    const Graph& g1, const Graph& g2,
    std::span<const std::pair<VertexId, VertexId>> pin_map = {});

}  // namespace farey

#endif  // FAREY_CANONICAL_HPP
