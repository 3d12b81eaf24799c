#ifndef FAREY_DECOMP_HPP
#define FAREY_DECOMP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "farey/graph.hpp"

namespace farey {

/// Bipartite incidence structure between vertices and edge-equivalence
/// classes (biconnected blocks). Vertex nodes are the graph's vertices;
/// class node i is classes[i].
struct BlockTree {
    std::uint32_t vertex_count = 0;
    std::vector<std::vector<Edge>> classes;
    std::vector<std::pair<VertexId, std::uint32_t>> incidence;  // (vertex, class index)

    /// Combined node numbering: vertices first, then classes.
    std::uint32_t node_count() const {
        return vertex_count + static_cast<std::uint32_t>(classes.size());
    }
    std::uint32_t class_node(std::uint32_t class_index) const {
        return vertex_count + class_index;
    }
};

/// Partition of the edges into biconnected blocks; bridges are singleton
/// classes. Two distinct edges share a class exactly when they lie on a
/// common simple cycle.
std::vector<std::vector<Edge>> edge_equivalence_classes(const Graph& g);

BlockTree build_g_tree(const Graph& g);

/// Acyclicity of the incidence structure (treated as a multigraph, so a
/// repeated incidence pair counts as a cycle).
bool is_forest(const BlockTree& t);

struct HullResult {
    std::vector<std::uint32_t> tree_nodes;  // combined numbering, sorted
    std::vector<VertexId> vertex_set;       // conv_M(B), sorted
};

/// Convex closure of the vertex set b in the forest, and the vertices it
/// covers. For a singleton the vertex set is b itself.
HullResult conv_m(const BlockTree& t, std::span<const VertexId> b);
HullResult conv_m(const Graph& g, std::span<const VertexId> b);

/// Algebraic closure: the vertex set of the convex hull.
std::vector<VertexId> acl(const BlockTree& t, std::span<const VertexId> a);
std::vector<VertexId> acl(const Graph& g, std::span<const VertexId> a);

struct GateResult {
    bool in_hull = false;
    VertexId gate = 0;  // meaningful when !in_hull
};

/// The unique vertex of conv_M(b) through which every path from x enters
/// the hull; in_hull when x already lies in conv_M(b). Errors when x
/// cannot reach the hull at all.
GateResult gate(const BlockTree& t, VertexId x, std::span<const VertexId> b);
GateResult gate(const Graph& g, VertexId x, std::span<const VertexId> b);

/// True when every path from acl(b) to acl(c) meets acl(a), i.e. deleting
/// acl(a) separates acl(b) from acl(c).
bool is_independent(const Graph& g, std::span<const VertexId> b,
                    std::span<const VertexId> a, std::span<const VertexId> c);

/// A path from acl(b) to acl(c) avoiding acl(a) when one exists.
std::optional<Path> independence_witness(const Graph& g, std::span<const VertexId> b,
                                         std::span<const VertexId> a,
                                         std::span<const VertexId> c);

}  // namespace farey

#endif  // FAREY_DECOMP_HPP
