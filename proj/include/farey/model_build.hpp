#ifndef FAREY_MODEL_BUILD_HPP
#define FAREY_MODEL_BUILD_HPP

#include <cstdint>
#include <vector>

#include "farey/graph.hpp"

namespace farey {

/// Forest of Farey copies glued at single vertices.
struct ModelSpec {
    struct Node {
        std::int64_t id;
        std::uint32_t level;
    };
    struct Attachment {
        std::int64_t u;
        std::int64_t v;
        VertexId attach_u;  // vertex inside F_{level(u)}
        VertexId attach_v;  // vertex inside F_{level(v)}
    };
    std::vector<Node> nodes;
    std::vector<Attachment> edges;
};

struct TreeModel {
    Graph graph;
    std::vector<std::size_t> copy_of;     // vertex -> index into spec.nodes (first owner)
    std::vector<VertexId> original_id;    // vertex -> id inside that copy
    struct Identification {
        std::size_t node_u;
        VertexId orig_u;
        std::size_t node_v;
        VertexId orig_v;
    };
    std::vector<Identification> identified;
    std::vector<std::vector<VertexId>> copy_vertices;  // node index -> global ids

    VertexId vertex_of(std::size_t node_index, VertexId original) const;
};

/// Builds the glued graph. Errors when the spec is not a forest or an
/// attachment vertex is out of range.
TreeModel build_tree_model(const ModelSpec& spec, std::uint32_t level_cap = 20);

struct GenericConfig {
    std::uint32_t max_vertices = 100000;
    // Relative weights of the three one-point extension kinds.
    std::uint32_t weight_isolated = 2;
    std::uint32_t weight_pendant = 4;
    std::uint32_t weight_apex = 4;
};

struct ExtensionStep {
    enum class Kind { isolated, pendant, apex };
    Kind kind;
    VertexId vertex;    // the added vertex
    VertexId attach_a;  // pendant neighbor, or first apex endpoint
    VertexId attach_b;  // second apex endpoint
};

struct GenericResult {
    Graph graph;
    std::vector<ExtensionStep> log;
};

/// Iterated random strong one-point extensions from the empty graph:
/// an isolated vertex, a pendant on a random vertex, or a triangle apex on
/// an edge still missing a triangle. Deterministic per seed; every prefix
/// stays a class member.
GenericResult build_generic(std::uint64_t seed, std::uint32_t steps,
                            const GenericConfig& config = {});

struct TComplianceReport {
    std::uint64_t edges_two_triangles = 0;
    std::uint64_t edges_one_triangle = 0;  // boundary edges
    std::uint64_t edges_zero_triangles = 0;
    std::vector<Edge> edges_violating;  // in three or more triangles
    bool k_member = false;
};

/// Classifies every edge by triangle count and reports class membership.
TComplianceReport t_compliance(const Graph& g);

}  // namespace farey

#endif  // FAREY_MODEL_BUILD_HPP
