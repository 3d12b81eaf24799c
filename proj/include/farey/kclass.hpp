#ifndef FAREY_KCLASS_HPP
#define FAREY_KCLASS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "farey/graph.hpp"

namespace farey {

/// Why a vertex was removable at its removal step.
struct RemovalReason {
    enum class Kind { valency_le_1, triangle_apex };
    Kind kind = Kind::valency_le_1;
    Edge apex_edge;  // the edge formed by the two neighbors, for triangle_apex

    bool operator==(const RemovalReason&) const = default;
};

struct PeelStep {
    VertexId vertex;
    RemovalReason reason;

    bool operator==(const PeelStep&) const = default;
};

/// Ordered removable-vertex removals leaving only `base` behind.
struct PeelSequence {
    std::vector<VertexId> base;  // protected set, sorted
    std::vector<PeelStep> steps;

    bool operator==(const PeelSequence&) const = default;
};

struct KViolation {
    enum class Kind { edge_in_three_triangles, no_removable_vertex };
    Kind kind;
    Edge edge;                  // for edge_in_three_triangles
    std::vector<VertexId> stuck;  // for no_removable_vertex
};

struct KMembershipReport {
    bool member = false;
    PeelSequence peel;                   // populated when member
    std::optional<KViolation> violation;  // populated when not
};

struct StrongResult {
    bool strong = false;
    PeelSequence peel;            // populated when strong
    std::vector<VertexId> stuck;  // non-base vertices left over, when not
};

/// All vertices outside `protected_set` removable in g: valency <= 1, or
/// valency 2 with adjacent neighbors.
std::vector<VertexId> removable_vertices(const Graph& g,
                                         std::span<const VertexId> protected_set);

/// Greedy peel of everything outside `base`, lowest vertex id first.
StrongResult greedy_peel(const Graph& g, std::span<const VertexId> base);

/// Greedy peel with uniformly random tie-breaking; used to probe order
/// independence and to sample strong subsets.
StrongResult greedy_peel_randomized(const Graph& g, std::span<const VertexId> base,
                                    std::uint64_t seed);

/// Membership in the class: every edge in at most two triangles and the
/// whole graph peels to nothing.
KMembershipReport is_in_K(const Graph& g);

/// Whether the induced set a is strong in b (a <= b), by peeling b down
/// to a.
StrongResult is_strong(std::span<const VertexId> a, const Graph& b);

/// Independent oracle: every nonempty induced subgraph has a removable
/// vertex and every edge lies in at most two triangles. Capped at 16
/// vertices.
bool brute_force_K_check(const Graph& g);

struct LozengeStringBlock {
    enum class Kind { lozenge, path_edge };
    Kind kind;
    std::vector<VertexId> vertices;
};

struct LozengeStringReport {
    bool is_string = false;
    std::vector<LozengeStringBlock> blocks;  // ordered along the path when is_string
    std::uint32_t lozenge_count = 0;
};

/// Recognizes strings of lozenges: connected, every block a single edge or
/// a lozenge, block-cut tree a path, lozenge cut vertices at apexes, and
/// exactly two removable vertices. A lone lozenge and a bare path both
/// count (degenerate strings).
LozengeStringReport is_string_of_lozenges(const Graph& g);

/// |removable_vertices(b, a)|; errors unless a <= b.
std::size_t count_removable_over(std::span<const VertexId> a, const Graph& b);

/// Replays a peel sequence against g: every step must remove a removable
/// vertex (with the recorded reason) of the remaining induced graph, and
/// only base may remain.
bool replay_peel(const Graph& g, const PeelSequence& seq);

}  // namespace farey

#endif  // FAREY_KCLASS_HPP
