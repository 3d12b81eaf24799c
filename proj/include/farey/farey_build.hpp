#ifndef FAREY_FAREY_BUILD_HPP
#define FAREY_FAREY_BUILD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "farey/graph.hpp"

namespace farey {

enum class EdgeColor { black, blue };

inline constexpr std::uint32_t kDefaultLevelCap = 20;

/// Level-n Farey graph with edge colors and per-vertex generation data.
///
/// Vertex ids follow construction order: 0,1 are the endpoints of the
/// initial black edge, 2,3 the level-1 apexes, and each later level appends
/// one vertex per blue edge, iterating blue edges in creation order. That
/// makes id order the canonical enumeration v_1,...,v_{|F_n|} and means the
/// first 2^{m+1} ids always induce the level-m graph.
class ColoredFarey {
public:
    const Graph& graph() const& { return graph_; }
    Graph graph() && { return std::move(graph_); }
    std::uint32_t level() const { return level_; }

    std::uint32_t birth_level(VertexId v) const;

    /// The blue edge a vertex was attached to at birth; empty for the four
    /// level-1 vertices.
    std::optional<Edge> parent_edge(VertexId v) const;

    EdgeColor color(VertexId u, VertexId v) const;

    /// Blue edges of this level in creation order, equivalently ascending
    /// by (max endpoint, min endpoint).
    std::vector<Edge> blue_edges() const;

    std::size_t blue_edge_count() const;

private:
    Graph graph_;
    std::uint32_t level_ = 0;
    std::vector<std::uint32_t> birth_;
    std::vector<Edge> parent_;  // indexed by id - 4

    std::uint32_t edge_birth(VertexId u, VertexId v) const;

    friend ColoredFarey build_level(std::uint32_t n, std::uint32_t cap);
    friend ColoredFarey union_limit_view(const ColoredFarey& f, std::uint32_t m);
};

/// Builds F_n. Errors when n < 1 or n exceeds the cap (default 20).
ColoredFarey build_level(std::uint32_t n, std::uint32_t cap = kDefaultLevelCap);

struct LevelCounts {
    std::uint64_t vertices;
    std::uint64_t edges;
    std::uint64_t blue_edges;

    bool operator==(const LevelCounts&) const = default;
};

/// Closed-form counts (2^{n+1}, 2^{n+2}-3, 2^{n+1}) without building.
LevelCounts level_counts(std::uint32_t n);

/// Restriction of f to the vertices born at level <= m, recolored as F_m.
ColoredFarey union_limit_view(const ColoredFarey& f, std::uint32_t m);

}  // namespace farey

#endif  // FAREY_FAREY_BUILD_HPP
