#ifndef FAREY_LPRIME_HPP
#define FAREY_LPRIME_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "farey/canonical.hpp"
#include "farey/graph.hpp"

namespace farey {

/// Isomorphism type of a minimal triangulated cycle: a simple cycle plus
/// its chords, carrying exactly two removable vertices.
struct CycleType {
    Graph graph;
    std::pair<VertexId, VertexId> removable_pair;
    std::uint32_t span = 0;  // distance between the pair inside the type
    CanonicalCode code;      // pinned at the removable pair
    std::string name;        // "c<span>_<index>"
};

inline constexpr std::uint32_t kMaxCycleTypeVertices = 12;

/// Immutable catalog of minimal-cycle types up to a vertex bound, grouped
/// by span. Types are sorted by (span, vertex count, code), so names are
/// stable across runs.
class CycleCatalog {
public:
    const std::vector<CycleType>& types() const { return types_; }
    const CycleType& at(std::size_t index) const;
    std::size_t size() const { return types_.size(); }

    /// Indices of the types with the given span.
    std::vector<std::size_t> span_class(std::uint32_t span) const;

    /// Looks up "c<span>_<index>" or the alias "lozenge".
    std::optional<std::size_t> find_by_name(const std::string& name) const;

    std::uint32_t max_vertices() const { return max_vertices_; }
    std::uint32_t level() const { return level_; }

    friend CycleCatalog enumerate_cycle_types(std::uint32_t max_vertices,
                                              std::uint32_t level);
    friend CycleCatalog catalog_from_types(std::vector<CycleType> types,
                                           std::uint32_t max_vertices,
                                           std::uint32_t level);

private:
    std::vector<CycleType> types_;
    std::uint32_t max_vertices_ = 0;
    std::uint32_t level_ = 0;
};

/// Enumerates every minimal-cycle type with at most max_vertices vertices
/// occurring as an induced subgraph of a Farey level; level 0 picks a level
/// high enough that the output is saturated at this size.
CycleCatalog enumerate_cycle_types(std::uint32_t max_vertices, std::uint32_t level = 0);

/// Rebuilds a catalog from deserialized types (used by the JSON cache).
CycleCatalog catalog_from_types(std::vector<CycleType> types, std::uint32_t max_vertices,
                                std::uint32_t level);

/// A sequence of catalog indices.
using DeltaSequence = std::vector<std::size_t>;

std::uint32_t total_span(const CycleCatalog& catalog, const DeltaSequence& delta);

struct PCWitness {
    std::vector<VertexId> copy;  // type vertex -> host vertex, induced embedding
};

/// An induced copy of the type whose removable pair is {x,y}, or nullopt.
std::optional<PCWitness> eval_P_C(const Graph& g, const CycleCatalog& catalog,
                                  std::size_t type_index, VertexId x, VertexId y);

struct PDeltaWitness {
    std::vector<VertexId> connecting_points;  // z_0 = x, ..., z_m = y
    std::vector<PCWitness> links;
};

/// Connecting points chained by the member cycles with the distance clause
/// d(x,y) = total span; empty sequences hold exactly on equal vertices.
std::optional<PDeltaWitness> eval_P_delta(const Graph& g, const CycleCatalog& catalog,
                                          const DeltaSequence& delta, VertexId x, VertexId y);

/// All witnesses (up to max_witnesses), for uniqueness probes.
std::vector<PDeltaWitness> all_P_delta_witnesses(const Graph& g, const CycleCatalog& catalog,
                                                 const DeltaSequence& delta, VertexId x,
                                                 VertexId y, std::size_t max_witnesses = 4096);

/// F_level vertex id -> host vertex of an induced copy.
using LevelEmbedding = std::vector<VertexId>;

/// All induced copies of F_level sending its first three vertices to
/// (x, y, z); each returned map determines one witness assignment. In
/// graphs where every edge has at most two triangles the extension is
/// forced, so the set has at most one element.
std::vector<LevelEmbedding> eval_D(const Graph& g, std::uint32_t level, VertexId x,
                                   VertexId y, VertexId z);

/// All induced copies of F_level in g, over all ordered head triangles.
std::vector<LevelEmbedding> enumerate_level_copies(const Graph& g, std::uint32_t level);

struct EpsilonDescriptor {
    DeltaSequence d1, d2, d3;
    std::uint32_t level = 1;

    std::size_t total_length() const { return d1.size() + d2.size() + d3.size(); }
};

struct YWitness {
    VertexId x_prime, y_prime, z_prime;
    LevelEmbedding copy;
    PDeltaWitness link_x, link_y, link_z;
};

/// Witnesses x',y',z' heading an induced F_level copy with the three delta
/// links back to (x,y,z). Total length zero reduces to eval_D.
std::optional<YWitness> eval_Y(const Graph& g, const CycleCatalog& catalog,
                               const EpsilonDescriptor& eps, VertexId x, VertexId y,
                               VertexId z);

struct FingerprintBounds {
    std::uint32_t max_cycle_size = 8;
    std::uint32_t max_delta_len = 4;
    std::uint32_t max_eps_total = 4;
    std::uint32_t max_level = 2;

    bool operator==(const FingerprintBounds&) const = default;
};

struct EpsilonAtom {
    DeltaSequence d1, d2, d3;
    std::uint32_t level;

    bool operator==(const EpsilonAtom&) const = default;
    auto operator<=>(const EpsilonAtom&) const = default;
};

/// Bounded quantifier-free type of `subject` over the tuple `over`.
struct QfFingerprint {
    std::vector<VertexId> over;
    VertexId subject = 0;
    FingerprintBounds bounds;
    std::vector<std::uint8_t> adjacency;  // subject ~ over[i]
    std::vector<std::uint8_t> equality;   // subject == over[i]
    std::vector<std::vector<DeltaSequence>> delta_atoms;   // per over[i], sorted
    std::vector<std::vector<EpsilonAtom>> epsilon_atoms;   // per ordered pair i*|over|+j, sorted

    /// Componentwise equality of the atom sets (ignores which vertex the
    /// subject happens to be).
    bool same_type(const QfFingerprint& other) const;
};

QfFingerprint qf_fingerprint(const Graph& g, const CycleCatalog& catalog,
                             std::span<const VertexId> over, VertexId subject,
                             const FingerprintBounds& bounds = {});

/// All delta sequences over catalog types of size <= max_cycle_size, with
/// length <= max_len and total span exactly target_span.
std::vector<DeltaSequence> delta_sequences_with_span(const CycleCatalog& catalog,
                                                     std::uint32_t max_cycle_size,
                                                     std::uint32_t max_len,
                                                     std::uint32_t target_span);

struct CorpusEntry {
    Graph graph;
    VertexId x, y;
};

struct EmbedsResult {
    enum class Verdict { consistent, refuted };
    enum class Reason { none, corpus_witness, length_law };
    Verdict verdict = Verdict::consistent;
    Reason reason = Reason::none;
    std::size_t witness_index = 0;  // corpus position for corpus_witness
};

/// Refutes "d_prime embeds into d" on a corpus of pairs satisfying P_d, or
/// reports consistency; a consistent verdict also requires the length law
/// |d| <= |d_prime|. Not a proof of embedding.
EmbedsResult embeds_bounded(const CycleCatalog& catalog, const DeltaSequence& d_prime,
                            const DeltaSequence& d, std::span<const CorpusEntry> corpus);

inline constexpr VertexId kNoImage = static_cast<VertexId>(-1);

struct PartialAutomorphism {
    std::vector<VertexId> map;   // vertex -> image or kNoImage
    std::vector<Edge> frontier;  // mapped edges whose target apex has no preimage

    bool complete() const;
    std::size_t domain_size() const;
};

/// Propagates source->target over the triangle structure: once an edge is
/// mapped, the image of a remaining apex is the remaining apex of the image
/// edge. Returns nullopt on any conflict.
std::optional<PartialAutomorphism> extend_triangle_map(const Graph& g,
                                                       const std::array<VertexId, 3>& source,
                                                       const std::array<VertexId, 3>& target);

struct QueryAtom {
    enum class Kind { p_c, p_delta };
    Kind kind = Kind::p_delta;
    DeltaSequence delta;  // single element for p_c
    VertexId param = 0;
};

/// Vertices satisfying a conjunction of P_C / P_delta atoms in their free
/// variable; the count is the size.
std::vector<VertexId> solve_query(const Graph& g, const CycleCatalog& catalog,
                                  std::span<const QueryAtom> atoms);

inline std::size_t count_solutions(const Graph& g, const CycleCatalog& catalog,
                                   std::span<const QueryAtom> atoms) {
    return solve_query(g, catalog, atoms).size();
}

}  // namespace farey

#endif  // FAREY_LPRIME_HPP
