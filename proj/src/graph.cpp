#include "farey/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace farey {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnset);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        VertexId cur = queue.front();
        queue.pop();
        for (VertexId next : g.neighbors(cur)) {
            if (dist[next] == kUnset) {
                dist[next] = dist[cur] + 1;
                queue.push(next);
            }
        }
    }
    return dist;
}

}  // namespace

Graph::Graph(std::uint32_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges)
    : n_(vertex_count), adj_(vertex_count) {
    for (const auto& [a, b] : edges) {
        if (a == b) {
            throw Error(ErrorKind::invalid_argument,
                        "self-loop at vertex " + std::to_string(a));
        }
        if (a >= n_ || b >= n_) {
            throw Error(ErrorKind::invalid_argument,
                        "edge {" + std::to_string(a) + "," + std::to_string(b) +
                            "} has an endpoint outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
        }
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

Graph::Graph(std::uint32_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges)
    : Graph(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size())) {}

void Graph::check_vertex(VertexId v) const {
    if (v >= n_) {
        throw Error(ErrorKind::invalid_argument,
                    "unknown vertex " + std::to_string(v) + " in graph on " +
                        std::to_string(n_) + " vertices");
    }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < n_; ++u) {
        for (VertexId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Cycle Cycle::from_sequence(std::vector<VertexId> seq) {
    if (seq.size() < 3) {
        throw Error(ErrorKind::invalid_argument, "cycle needs at least 3 vertices");
    }
    auto min_it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), min_it, seq.end());
    if (seq.back() < seq[1]) {
        std::reverse(seq.begin() + 1, seq.end());
    }
    Cycle c;
    c.vertices = std::move(seq);
    return c;
}

VertexId InducedSubgraph::new_of_old(VertexId old_id) const {
    auto it = std::lower_bound(old_of_new.begin(), old_of_new.end(), old_id);
    if (it == old_of_new.end() || *it != old_id) {
        throw Error(ErrorKind::invalid_argument,
                    "vertex " + std::to_string(old_id) + " is not in the induced subgraph");
    }
    return static_cast<VertexId>(it - old_of_new.begin());
}

std::uint32_t valency(const Graph& g, VertexId v) {
    g.check_vertex(v);
    return static_cast<std::uint32_t>(g.adj_[v].size());
}

std::optional<std::uint32_t> distance(const Graph& g, VertexId x, VertexId y) {
    if (!g.has_vertex(x) || !g.has_vertex(y)) {
        throw Error(ErrorKind::invalid_argument, "distance endpoint outside graph");
    }
    if (x == y) return 0;
    auto dist = bfs_distances(g, x);
    if (dist[y] == kUnset) return std::nullopt;
    return dist[y];
}

GeodesicSet geodesics(const Graph& g, VertexId x, VertexId y) {
    if (!g.has_vertex(x) || !g.has_vertex(y)) {
        throw Error(ErrorKind::invalid_argument, "geodesics endpoint outside graph");
    }
    GeodesicSet out;
    auto dist_to_y = bfs_distances(g, y);
    if (dist_to_y[x] == kUnset) {
        out.reachable = false;
        return out;
    }
    out.reachable = true;
    // Walk down the distance gradient toward y; every maximal walk is a
    // geodesic and every geodesic arises this way.
    std::vector<VertexId> current{x};
    auto extend = [&](auto&& self, VertexId at) -> void {
        if (at == y) {
            out.paths.push_back(Path{current});
            return;
        }
        for (VertexId next : g.neighbors(at)) {
            if (dist_to_y[next] != kUnset && dist_to_y[next] + 1 == dist_to_y[at]) {
                current.push_back(next);
                self(self, next);
                current.pop_back();
            }
        }
    };
    extend(extend, x);
    std::sort(out.paths.begin(), out.paths.end());
    return out;
}

std::vector<VertexId> triangles_on_edge(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v)) {
        throw Error(ErrorKind::invalid_argument,
                    "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    }
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::vector<VertexId> apexes;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(apexes));
    return apexes;
}

std::vector<Cycle> simple_cycles_through_edge(const Graph& g, VertexId u, VertexId v,
                                              std::uint32_t max_len) {
    if (max_len < 3) {
        throw Error(ErrorKind::invalid_argument, "max_len must be at least 3");
    }
    if (!g.has_edge(u, v)) {
        throw Error(ErrorKind::invalid_argument,
                    "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    }
    // Cycles passing through both endpoints of the edge (they need not use
    // the edge itself): bounded backtracking from u back to u, pruned by
    // the remaining budget against distances to u and v.
    auto dist_to_u = bfs_distances(g, u);
    auto dist_to_v = bfs_distances(g, v);
    std::vector<Cycle> out;
    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<VertexId> current{u};
    on_path[u] = 1;
    bool seen_v = false;
    auto dfs = [&](auto&& self, VertexId at) -> void {
        for (VertexId next : g.neighbors(at)) {
            if (next == u) {
                if (seen_v && current.size() >= 3) {
                    out.push_back(Cycle::from_sequence(current));
                }
                continue;
            }
            if (on_path[next]) continue;
            if (dist_to_u[next] == kUnset || dist_to_v[next] == kUnset) continue;
            // Edges used once `next` joins, plus a lower bound on the edges
            // still needed to close up (visiting v first if unseen).
            std::uint32_t used = static_cast<std::uint32_t>(current.size());
            std::uint32_t needed =
                (seen_v || next == v) ? dist_to_u[next] : dist_to_v[next] + 1;
            if (used + needed > max_len) continue;
            bool was_seen = seen_v;
            seen_v = seen_v || next == v;
            on_path[next] = 1;
            current.push_back(next);
            self(self, next);
            current.pop_back();
            on_path[next] = 0;
            seen_v = was_seen;
        }
    };
    dfs(dfs, u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
    std::vector<VertexId> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v : sorted) {
        if (!g.has_vertex(v)) {
            throw Error(ErrorKind::invalid_argument,
                        "induced_subgraph: unknown vertex " + std::to_string(v));
        }
    }
    std::vector<std::pair<VertexId, VertexId>> new_edges;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (VertexId w : g.neighbors(sorted[i])) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
            if (it != sorted.end() && *it == w) {
                auto j = static_cast<VertexId>(it - sorted.begin());
                if (i < j) new_edges.emplace_back(static_cast<VertexId>(i), j);
            }
        }
    }
    InducedSubgraph out;
    out.graph = Graph(static_cast<std::uint32_t>(sorted.size()), new_edges);
    out.old_of_new = std::move(sorted);
    return out;
}

std::uint32_t component_count(const Graph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::uint32_t components = 0;
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        ++components;
        std::queue<VertexId> queue;
        queue.push(start);
        seen[start] = 1;
        while (!queue.empty()) {
            VertexId cur = queue.front();
            queue.pop();
            for (VertexId next : g.neighbors(cur)) {
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push(next);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

}  // namespace farey
