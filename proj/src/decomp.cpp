#include "farey/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stack>

namespace farey {

namespace {

constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);

struct UnionFind {
    std::vector<std::uint32_t> parent;

    explicit UnionFind(std::uint32_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    /// Returns false when x and y were already connected.
    bool unite(std::uint32_t x, std::uint32_t y) {
        auto rx = find(x);
        auto ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

// Adjacency of the bipartite block forest in the combined numbering.
std::vector<std::vector<std::uint32_t>> forest_adjacency(const BlockTree& t) {
    std::vector<std::vector<std::uint32_t>> adj(t.node_count());
    for (const auto& [v, c] : t.incidence) {
        adj[v].push_back(t.class_node(c));
        adj[t.class_node(c)].push_back(v);
    }
    return adj;
}

}  // namespace

std::vector<std::vector<Edge>> edge_equivalence_classes(const Graph& g) {
    // Iterative biconnected-components DFS with an edge stack.
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint32_t> disc(n, kUnvisited), low(n, 0);
    std::vector<std::vector<Edge>> classes;
    std::vector<Edge> edge_stack;
    std::uint32_t timer = 0;

    struct Frame {
        VertexId vertex;
        VertexId parent;
        std::size_t next_neighbor;
    };

    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const auto& nbrs = g.neighbors(frame.vertex);
            if (frame.next_neighbor < nbrs.size()) {
                VertexId next = nbrs[frame.next_neighbor++];
                if (disc[next] == kUnvisited) {
                    edge_stack.emplace_back(frame.vertex, next);
                    disc[next] = low[next] = timer++;
                    stack.push_back({next, frame.vertex, 0});
                } else if (next != frame.parent && disc[next] < disc[frame.vertex]) {
                    edge_stack.emplace_back(frame.vertex, next);
                    low[frame.vertex] = std::min(low[frame.vertex], disc[next]);
                }
            } else {
                VertexId child = frame.vertex;
                stack.pop_back();
                if (stack.empty()) break;
                Frame& up = stack.back();
                low[up.vertex] = std::min(low[up.vertex], low[child]);
                if (low[child] >= disc[up.vertex]) {
                    // Pop the block hanging below the edge (up.vertex, child).
                    std::vector<Edge> block;
                    Edge stop(up.vertex, child);
                    while (!edge_stack.empty()) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == stop) break;
                    }
                    if (!block.empty()) classes.push_back(std::move(block));
                }
            }
        }
    }

    for (auto& block : classes) {
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

BlockTree build_g_tree(const Graph& g) {
    BlockTree t;
    t.vertex_count = g.vertex_count();
    t.classes = edge_equivalence_classes(g);
    for (std::uint32_t c = 0; c < t.classes.size(); ++c) {
        std::vector<VertexId> members;
        for (const Edge& e : t.classes[c]) {
            members.push_back(e.u);
            members.push_back(e.v);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (VertexId v : members) t.incidence.emplace_back(v, c);
    }
    std::sort(t.incidence.begin(), t.incidence.end());
    return t;
}

bool is_forest(const BlockTree& t) {
    UnionFind uf(t.node_count());
    for (const auto& [v, c] : t.incidence) {
        if (v >= t.vertex_count || c >= t.classes.size()) return false;
        if (!uf.unite(v, t.class_node(c))) return false;
    }
    return true;
}

HullResult conv_m(const BlockTree& t, std::span<const VertexId> b) {
    for (VertexId v : b) {
        if (v >= t.vertex_count) {
            throw Error(ErrorKind::invalid_argument, "conv_m: unknown vertex");
        }
    }
    auto adj = forest_adjacency(t);
    std::vector<char> marked(t.node_count(), 0);
    for (VertexId v : b) marked[v] = 1;

    // Strip unmarked leaves until only the Steiner closure of b remains.
    std::vector<std::uint32_t> degree(t.node_count());
    std::vector<char> alive(t.node_count(), 1);
    std::queue<std::uint32_t> queue;
    for (std::uint32_t node = 0; node < t.node_count(); ++node) {
        degree[node] = static_cast<std::uint32_t>(adj[node].size());
        if (degree[node] <= 1 && !marked[node]) queue.push(node);
    }
    while (!queue.empty()) {
        auto node = queue.front();
        queue.pop();
        if (!alive[node] || marked[node] || degree[node] > 1) continue;
        alive[node] = 0;
        for (auto nb : adj[node]) {
            if (alive[nb] && degree[nb] > 0) {
                if (--degree[nb] <= 1 && !marked[nb]) queue.push(nb);
            }
        }
    }

    HullResult out;
    std::vector<char> in_set(t.vertex_count, 0);
    for (VertexId v : b) in_set[v] = 1;
    for (std::uint32_t node = 0; node < t.node_count(); ++node) {
        if (!alive[node]) continue;
        out.tree_nodes.push_back(node);
        if (node >= t.vertex_count) {
            for (const Edge& e : t.classes[node - t.vertex_count]) {
                in_set[e.u] = 1;
                in_set[e.v] = 1;
            }
        }
    }
    for (VertexId v = 0; v < t.vertex_count; ++v) {
        if (in_set[v]) out.vertex_set.push_back(v);
    }
    return out;
}

HullResult conv_m(const Graph& g, std::span<const VertexId> b) {
    return conv_m(build_g_tree(g), b);
}

std::vector<VertexId> acl(const BlockTree& t, std::span<const VertexId> a) {
    if (a.empty()) return {};
    return conv_m(t, a).vertex_set;
}

std::vector<VertexId> acl(const Graph& g, std::span<const VertexId> a) {
    if (a.empty()) return {};
    return acl(build_g_tree(g), a);
}

GateResult gate(const BlockTree& t, VertexId x, std::span<const VertexId> b) {
    if (b.empty()) {
        throw Error(ErrorKind::invalid_argument, "gate: b must be nonempty");
    }
    if (x >= t.vertex_count) {
        throw Error(ErrorKind::invalid_argument, "gate: unknown vertex");
    }
    HullResult hull = conv_m(t, b);
    if (std::binary_search(hull.vertex_set.begin(), hull.vertex_set.end(), x)) {
        return GateResult{true, 0};
    }
    std::vector<char> in_hull(t.node_count(), 0);
    for (auto node : hull.tree_nodes) in_hull[node] = 1;

    auto adj = forest_adjacency(t);
    std::vector<std::uint32_t> parent(t.node_count(), kUnvisited);
    std::queue<std::uint32_t> queue;
    parent[x] = x;
    queue.push(x);
    std::uint32_t hit = kUnvisited;
    while (!queue.empty() && hit == kUnvisited) {
        auto node = queue.front();
        queue.pop();
        for (auto nb : adj[node]) {
            if (parent[nb] != kUnvisited) continue;
            parent[nb] = node;
            if (in_hull[nb]) {
                hit = nb;
                break;
            }
            queue.push(nb);
        }
    }
    if (hit == kUnvisited) {
        throw Error(ErrorKind::invalid_argument,
                    "gate: x and b lie in different connected components");
    }
    // A class node is entered through the vertex node just before it, which
    // belongs to the class and hence to conv_M(b).
    std::uint32_t entry = hit < t.vertex_count ? hit : parent[hit];
    return GateResult{false, static_cast<VertexId>(entry)};
}

GateResult gate(const Graph& g, VertexId x, std::span<const VertexId> b) {
    return gate(build_g_tree(g), x, b);
}

namespace {

std::optional<Path> separator_violation(const Graph& g, std::span<const VertexId> b,
                                        std::span<const VertexId> a,
                                        std::span<const VertexId> c) {
    auto acl_a = acl(g, a);
    auto acl_b = acl(g, b);
    auto acl_c = acl(g, c);
    std::vector<char> blocked(g.vertex_count(), 0);
    for (VertexId v : acl_a) blocked[v] = 1;
    std::vector<char> target(g.vertex_count(), 0);
    for (VertexId v : acl_c) {
        if (!blocked[v]) target[v] = 1;
    }
    constexpr VertexId kNone = static_cast<VertexId>(-1);
    std::vector<VertexId> parent(g.vertex_count(), kNone);
    std::queue<VertexId> queue;
    for (VertexId v : acl_b) {
        if (blocked[v] || parent[v] != kNone) continue;
        parent[v] = v;
        if (target[v]) {
            return Path{{v}};
        }
        queue.push(v);
    }
    while (!queue.empty()) {
        VertexId cur = queue.front();
        queue.pop();
        for (VertexId next : g.neighbors(cur)) {
            if (blocked[next] || parent[next] != kNone) continue;
            parent[next] = cur;
            if (target[next]) {
                std::vector<VertexId> rev{next};
                VertexId walk = next;
                while (parent[walk] != walk) {
                    walk = parent[walk];
                    rev.push_back(walk);
                }
                std::reverse(rev.begin(), rev.end());
                return Path{std::move(rev)};
            }
            queue.push(next);
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_independent(const Graph& g, std::span<const VertexId> b,
                    std::span<const VertexId> a, std::span<const VertexId> c) {
    return !separator_violation(g, b, a, c).has_value();
}

std::optional<Path> independence_witness(const Graph& g, std::span<const VertexId> b,
                                         std::span<const VertexId> a,
                                         std::span<const VertexId> c) {
    return separator_violation(g, b, a, c);
}

}  // namespace farey
