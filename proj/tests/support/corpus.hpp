// Shared generators and oracles for the test suites. Everything here is
// independent of the production algorithms it checks.
#ifndef FAREY_TESTS_CORPUS_HPP
#define FAREY_TESTS_CORPUS_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "farey/graph.hpp"

namespace farey::testing {

inline Graph lozenge() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

inline Graph chordless_cycle(std::uint32_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

inline Graph complete_graph(std::uint32_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

/// Two lozenges chained at the cut vertex 3: the first on shared edge
/// {0,1} with apexes 2,3, the second on shared edge {4,5} with apexes 3,6.
/// The free apexes are 2 and 6.
inline Graph two_lozenge_chain() {
    return Graph(7, {{0, 1},
                     {0, 2},
                     {1, 2},
                     {0, 3},
                     {1, 3},
                     {4, 5},
                     {3, 4},
                     {3, 5},
                     {4, 6},
                     {5, 6}});
}

inline Graph random_graph(std::mt19937_64& rng, std::uint32_t n, double edge_probability) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(edge_probability * 4294967296.0);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if ((rng() & 0xffffffffu) < threshold) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

/// Random connected induced subgraph of `host` grown from a random seed
/// vertex; size at most `max_size`.
inline std::vector<VertexId> random_connected_subset(std::mt19937_64& rng, const Graph& host,
                                                     std::uint32_t max_size) {
    std::vector<VertexId> chosen;
    if (host.vertex_count() == 0 || max_size == 0) return chosen;
    std::vector<char> in_set(host.vertex_count(), 0);
    std::vector<VertexId> frontier;
    VertexId start = static_cast<VertexId>(rng() % host.vertex_count());
    chosen.push_back(start);
    in_set[start] = 1;
    for (VertexId w : host.neighbors(start)) frontier.push_back(w);
    while (chosen.size() < max_size && !frontier.empty()) {
        auto idx = rng() % frontier.size();
        VertexId next = frontier[idx];
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(idx));
        if (in_set[next]) continue;
        in_set[next] = 1;
        chosen.push_back(next);
        for (VertexId w : host.neighbors(next)) {
            if (!in_set[w]) frontier.push_back(w);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

/// Depth-capped exhaustive enumeration of simple paths from x to y of
/// length exactly `length`; the independent oracle for geodesics.
inline std::vector<Path> brute_force_paths(const Graph& g, VertexId x, VertexId y,
                                           std::uint32_t length) {
    std::vector<Path> out;
    std::vector<VertexId> current{x};
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[x] = 1;
    auto dfs = [&](auto&& self, VertexId at) -> void {
        if (current.size() > length + 1) return;
        if (at == y) {
            if (current.size() == length + 1) out.push_back(Path{current});
            return;
        }
        for (VertexId next : g.neighbors(at)) {
            if (on_path[next]) continue;
            on_path[next] = 1;
            current.push_back(next);
            self(self, next);
            current.pop_back();
            on_path[next] = 0;
        }
    };
    dfs(dfs, x);
    std::sort(out.begin(), out.end());
    return out;
}

/// All graphs on n vertices, as edge masks (n <= 6 feasible).
inline std::vector<Graph> all_graphs(std::uint32_t n) {
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<Graph> out;
    const std::uint32_t total = 1u << slots.size();
    out.reserve(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1u) edges.push_back(slots[i]);
        }
        out.emplace_back(n, edges);
    }
    return out;
}

/// Applies a vertex permutation to a graph.
inline Graph permute_graph(const Graph& g, const std::vector<VertexId>& perm) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.vertex_count(), edges);
}

}  // namespace farey::testing

#endif  // FAREY_TESTS_CORPUS_HPP
