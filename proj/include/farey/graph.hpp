#ifndef FAREY_GRAPH_HPP
#define FAREY_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "farey/error.hpp"

namespace farey {

using VertexId = std::uint32_t;

/// Undirected edge, stored normalized with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    Edge() : u(0), v(0) {}
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph. Immutable after construction; all
/// queries are pure and safe to call concurrently.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on vertices 0..vertex_count-1. Duplicate edges are
    /// deduplicated; self-loops and out-of-range endpoints are errors.
    Graph(std::uint32_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);
    Graph(std::uint32_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges);

    std::uint32_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(VertexId v) const { return v < n_; }
    bool has_edge(VertexId u, VertexId v) const;

    /// Neighbors of v in ascending order.
    const std::vector<VertexId>& neighbors(VertexId v) const;

    /// All edges, normalized and sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::uint32_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<VertexId>> adj_;

    void check_vertex(VertexId v) const;
    friend std::uint32_t valency(const Graph&, VertexId);
};

/// Simple path: consecutive vertices adjacent, all distinct.
struct Path {
    std::vector<VertexId> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;
};

/// Simple cycle of length >= 3, stored in a normalized rotation: starts at
/// the minimal vertex and proceeds toward its smaller cyclic neighbor.
struct Cycle {
    std::vector<VertexId> vertices;

    static Cycle from_sequence(std::vector<VertexId> seq);

    std::size_t length() const { return vertices.size(); }
    bool operator==(const Cycle&) const = default;
    auto operator<=>(const Cycle&) const = default;
};

struct GeodesicSet {
    bool reachable = false;
    std::vector<Path> paths;  // sorted lexicographically
};

struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> old_of_new;  // new id -> old id (ascending)

    /// Old id -> new id; fails on vertices outside the subgraph.
    VertexId new_of_old(VertexId old_id) const;
};

std::uint32_t valency(const Graph& g, VertexId v);

/// Shortest-path length, or nullopt when x and y are in different components.
std::optional<std::uint32_t> distance(const Graph& g, VertexId x, VertexId y);

/// All shortest simple paths from x to y, enumerated over the breadth-first
/// predecessor structure.
GeodesicSet geodesics(const Graph& g, VertexId x, VertexId y);

/// Vertices adjacent to both endpoints of an edge (its triangle apexes).
std::vector<VertexId> triangles_on_edge(const Graph& g, VertexId u, VertexId v);

/// All simple cycles of length <= max_len containing the edge {u,v}.
/// Bounded-depth backtracking from u to v excluding the edge itself,
/// pruned by remaining distance.
std::vector<Cycle> simple_cycles_through_edge(const Graph& g, VertexId u, VertexId v,
                                              std::uint32_t max_len);

/// Induced subgraph on s; new ids are dense in ascending order of old ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> s);

/// Number of connected components.
std::uint32_t component_count(const Graph& g);

/// True when all vertices lie in one component (the empty graph counts
/// as connected).
bool is_connected(const Graph& g);

}  // namespace farey

#endif  // FAREY_GRAPH_HPP
