#ifndef FAREY_AMALGAM_HPP
#define FAREY_AMALGAM_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "farey/graph.hpp"

namespace farey {

/// Identification of the shared part A: pairs (vertex in B, vertex in C),
/// injective on both sides; the pairs enumerate A.
using GlueMap = std::vector<std::pair<VertexId, VertexId>>;

struct AmalgamResult {
    Graph graph;
    std::vector<VertexId> embed_b;  // B vertex -> result vertex
    std::vector<VertexId> embed_c;  // C vertex -> result vertex
    std::vector<std::pair<VertexId, VertexId>> collapsed;  // (B vertex, C vertex)
};

/// Free amalgam B (x)_A C: disjoint union glued along A, no cross edges.
/// Errors when the glue does not identify isomorphic induced copies of A.
AmalgamResult free_amalgam(const Graph& b, const Graph& c, const GlueMap& glue);

/// Amalgamation inside the class: requires A <= B, A <= C and both factors
/// members. Peels B to A and re-adds one vertex at a time; a re-added apex
/// whose target edge already carries two triangles is identified with an
/// existing apex instead of added. The result is verified to be a member
/// with both factors strongly embedded.
AmalgamResult amalgamate_in_K(const Graph& b, const Graph& c, const GlueMap& glue);

}  // namespace farey

#endif  // FAREY_AMALGAM_HPP
