#include "farey/kclass.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "farey/decomp.hpp"

namespace farey {

namespace {

// Remaining-graph view during peeling.
struct PeelState {
    const Graph& g;
    std::vector<char> alive;
    std::vector<std::uint32_t> degree;

    explicit PeelState(const Graph& graph)
        : g(graph), alive(graph.vertex_count(), 1), degree(graph.vertex_count(), 0) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            degree[v] = static_cast<std::uint32_t>(g.neighbors(v).size());
        }
    }

    // Live neighbors, early-out beyond two (only valencies <= 2 matter).
    std::optional<RemovalReason> removable(VertexId v) const {
        if (degree[v] <= 1) {
            return RemovalReason{RemovalReason::Kind::valency_le_1, Edge{}};
        }
        if (degree[v] != 2) return std::nullopt;
        VertexId found[2];
        std::size_t count = 0;
        for (VertexId w : g.neighbors(v)) {
            if (alive[w]) found[count++] = w;
        }
        if (g.has_edge(found[0], found[1])) {
            return RemovalReason{RemovalReason::Kind::triangle_apex, Edge(found[0], found[1])};
        }
        return std::nullopt;
    }

    void remove(VertexId v) {
        alive[v] = 0;
        for (VertexId w : g.neighbors(v)) {
            if (alive[w]) --degree[w];
        }
    }
};

StrongResult peel_impl(const Graph& g, std::span<const VertexId> base,
                       std::mt19937_64* rng) {
    std::vector<char> protected_flag(g.vertex_count(), 0);
    for (VertexId v : base) {
        if (!g.has_vertex(v)) {
            throw Error(ErrorKind::invalid_argument, "peel: base vertex outside graph");
        }
        protected_flag[v] = 1;
    }

    PeelState state(g);
    std::set<VertexId> candidates;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!protected_flag[v] && state.removable(v)) candidates.insert(v);
    }

    StrongResult out;
    out.peel.base.assign(base.begin(), base.end());
    std::sort(out.peel.base.begin(), out.peel.base.end());
    out.peel.base.erase(std::unique(out.peel.base.begin(), out.peel.base.end()),
                        out.peel.base.end());

    while (!candidates.empty()) {
        VertexId pick;
        if (rng == nullptr) {
            pick = *candidates.begin();
        } else {
            auto idx = (*rng)() % candidates.size();
            auto it = candidates.begin();
            std::advance(it, static_cast<std::ptrdiff_t>(idx));
            pick = *it;
        }
        candidates.erase(pick);
        auto reason = state.removable(pick);
        if (!reason) continue;  // stale candidate
        out.peel.steps.push_back({pick, *reason});
        state.remove(pick);
        for (VertexId w : g.neighbors(pick)) {
            if (state.alive[w] && !protected_flag[w] && state.removable(w)) {
                candidates.insert(w);
            }
        }
    }

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (state.alive[v] && !protected_flag[v]) out.stuck.push_back(v);
    }
    out.strong = out.stuck.empty();
    return out;
}

}  // namespace

std::vector<VertexId> removable_vertices(const Graph& g,
                                         std::span<const VertexId> protected_set) {
    std::vector<char> protected_flag(g.vertex_count(), 0);
    for (VertexId v : protected_set) {
        if (!g.has_vertex(v)) {
            throw Error(ErrorKind::invalid_argument,
                        "removable_vertices: protected vertex outside graph");
        }
        protected_flag[v] = 1;
    }
    PeelState state(g);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!protected_flag[v] && state.removable(v)) out.push_back(v);
    }
    return out;
}

StrongResult greedy_peel(const Graph& g, std::span<const VertexId> base) {
    return peel_impl(g, base, nullptr);
}

StrongResult greedy_peel_randomized(const Graph& g, std::span<const VertexId> base,
                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return peel_impl(g, base, &rng);
}

KMembershipReport is_in_K(const Graph& g) {
    KMembershipReport out;
    for (const Edge& e : g.edges()) {
        if (triangles_on_edge(g, e.u, e.v).size() > 2) {
            out.member = false;
            out.violation = KViolation{KViolation::Kind::edge_in_three_triangles, e, {}};
            return out;
        }
    }
    StrongResult peel = greedy_peel(g, {});
    if (!peel.strong) {
        out.member = false;
        out.violation =
            KViolation{KViolation::Kind::no_removable_vertex, Edge{}, peel.stuck};
        return out;
    }
    out.member = true;
    out.peel = std::move(peel.peel);
    return out;
}

StrongResult is_strong(std::span<const VertexId> a, const Graph& b) {
    return greedy_peel(b, a);
}

bool brute_force_K_check(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n > 16) {
        throw Error(ErrorKind::limit, "brute_force_K_check: graph exceeds 16 vertices");
    }
    std::vector<std::uint32_t> adj(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : g.neighbors(v)) adj[v] |= (1u << w);
    }
    for (const Edge& e : g.edges()) {
        if (std::popcount(adj[e.u] & adj[e.v]) > 2) return false;
    }
    const std::uint32_t total = n >= 32 ? 0 : (1u << n);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        bool found = false;
        for (std::uint32_t v = 0; v < n && !found; ++v) {
            if (!((mask >> v) & 1u)) continue;
            std::uint32_t live = adj[v] & mask;
            int deg = std::popcount(live);
            if (deg <= 1) {
                found = true;
            } else if (deg == 2) {
                auto first = static_cast<std::uint32_t>(std::countr_zero(live));
                std::uint32_t rest = live & (live - 1);
                auto second = static_cast<std::uint32_t>(std::countr_zero(rest));
                if ((adj[first] >> second) & 1u) found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

bool block_is_lozenge(const Graph& g, const std::vector<Edge>& block,
                      std::vector<VertexId>& apexes_out) {
    if (block.size() != 5) return false;
    std::vector<VertexId> members;
    for (const Edge& e : block) {
        members.push_back(e.u);
        members.push_back(e.v);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() != 4) return false;
    // Degree within the block: two vertices of degree 3 (the shared edge)
    // and two of degree 2 (the apexes), shared pair adjacent, apexes not.
    std::vector<VertexId> deg2, deg3;
    for (VertexId v : members) {
        std::size_t deg = 0;
        for (const Edge& e : block) {
            if (e.u == v || e.v == v) ++deg;
        }
        if (deg == 2) {
            deg2.push_back(v);
        } else if (deg == 3) {
            deg3.push_back(v);
        } else {
            return false;
        }
    }
    if (deg2.size() != 2 || deg3.size() != 2) return false;
    if (!g.has_edge(deg3[0], deg3[1])) return false;
    if (g.has_edge(deg2[0], deg2[1])) return false;
    apexes_out = deg2;
    return true;
}

}  // namespace

LozengeStringReport is_string_of_lozenges(const Graph& g) {
    LozengeStringReport out;
    if (g.vertex_count() == 0 || !is_connected(g)) return out;
    if (removable_vertices(g, {}).size() != 2) return out;

    auto classes = edge_equivalence_classes(g);
    std::vector<std::vector<VertexId>> block_members(classes.size());
    std::vector<std::vector<VertexId>> block_apexes(classes.size());
    std::vector<char> block_is_loz(classes.size(), 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::vector<VertexId> members;
        for (const Edge& e : classes[i]) {
            members.push_back(e.u);
            members.push_back(e.v);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        block_members[i] = std::move(members);
        if (classes[i].size() == 1) {
            continue;  // path segment
        }
        std::vector<VertexId> apexes;
        if (!block_is_lozenge(g, classes[i], apexes)) return out;
        block_is_loz[i] = 1;
        block_apexes[i] = std::move(apexes);
    }

    // Cut vertices = vertices in at least two blocks.
    std::vector<std::uint32_t> block_count(g.vertex_count(), 0);
    for (const auto& members : block_members) {
        for (VertexId v : members) ++block_count[v];
    }
    std::vector<std::vector<std::size_t>> blocks_at(g.vertex_count());
    for (std::size_t i = 0; i < block_members.size(); ++i) {
        for (VertexId v : block_members[i]) {
            if (block_count[v] >= 2) blocks_at[v].push_back(i);
        }
    }

    // Block-cut tree must be a path: every cut vertex in exactly two blocks
    // and every block holding at most two cut vertices.
    std::vector<std::vector<VertexId>> cuts_of_block(classes.size());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (block_count[v] >= 3) return out;
        if (block_count[v] == 2) {
            for (auto b : blocks_at[v]) cuts_of_block[b].push_back(v);
        }
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (cuts_of_block[i].size() > 2) return out;
        if (block_is_loz[i]) {
            for (VertexId cut : cuts_of_block[i]) {
                if (cut != block_apexes[i][0] && cut != block_apexes[i][1]) return out;
            }
        }
    }

    if (classes.empty()) return out;  // single vertex: not a string

    // Walk the block path from an end block (at most one cut vertex).
    std::size_t start = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (cuts_of_block[i].size() <= 1) {
            start = i;
            break;
        }
    }
    if (start == classes.size()) return out;  // no end block: a cycle of blocks
    std::vector<char> visited(classes.size(), 0);
    std::size_t current = start;
    VertexId entry_cut = static_cast<VertexId>(-1);
    std::vector<LozengeStringBlock> ordered;
    for (;;) {
        visited[current] = 1;
        ordered.push_back({block_is_loz[current] ? LozengeStringBlock::Kind::lozenge
                                                 : LozengeStringBlock::Kind::path_edge,
                           block_members[current]});
        std::size_t next = classes.size();
        for (VertexId cut : cuts_of_block[current]) {
            if (cut == entry_cut) continue;
            for (auto b : blocks_at[cut]) {
                if (!visited[b]) {
                    next = b;
                    entry_cut = cut;
                    break;
                }
            }
            if (next != classes.size()) break;
        }
        if (next == classes.size()) break;
        current = next;
    }
    if (std::count(visited.begin(), visited.end(), 1) !=
        static_cast<std::ptrdiff_t>(classes.size())) {
        return out;  // branching somewhere: not a single path
    }

    out.is_string = true;
    out.blocks = std::move(ordered);
    for (const auto& block : out.blocks) {
        if (block.kind == LozengeStringBlock::Kind::lozenge) ++out.lozenge_count;
    }
    return out;
}

std::size_t count_removable_over(std::span<const VertexId> a, const Graph& b) {
    if (!is_strong(a, b).strong) {
        throw Error(ErrorKind::invalid_argument,
                    "count_removable_over: a is not strong in b");
    }
    return removable_vertices(b, a).size();
}

bool replay_peel(const Graph& g, const PeelSequence& seq) {
    std::vector<char> protected_flag(g.vertex_count(), 0);
    for (VertexId v : seq.base) {
        if (!g.has_vertex(v)) return false;
        protected_flag[v] = 1;
    }
    PeelState state(g);
    for (const PeelStep& step : seq.steps) {
        if (!g.has_vertex(step.vertex)) return false;
        if (protected_flag[step.vertex] || !state.alive[step.vertex]) return false;
        auto reason = state.removable(step.vertex);
        if (!reason || !(*reason == step.reason)) return false;
        state.remove(step.vertex);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (state.alive[v] && !protected_flag[v]) return false;
    }
    return true;
}

}  // namespace farey
