#include "farey/model_build.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "farey/farey_build.hpp"
#include "farey/kclass.hpp"

namespace farey {

VertexId TreeModel::vertex_of(std::size_t node_index, VertexId original) const {
    if (node_index >= copy_vertices.size() ||
        original >= copy_vertices[node_index].size()) {
        throw Error(ErrorKind::invalid_argument, "vertex_of: out of range");
    }
    return copy_vertices[node_index][original];
}

TreeModel build_tree_model(const ModelSpec& spec, std::uint32_t level_cap) {
    std::map<std::int64_t, std::size_t> node_index;
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
        if (!node_index.emplace(spec.nodes[i].id, i).second) {
            throw Error(ErrorKind::invalid_argument, "tree model: duplicate node id");
        }
        if (spec.nodes[i].level < 1 || spec.nodes[i].level > level_cap) {
            throw Error(ErrorKind::invalid_argument, "tree model: node level out of range");
        }
    }

    // Forest check over the spec's nodes.
    std::vector<std::size_t> parent(spec.nodes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    std::vector<std::uint64_t> copy_size(spec.nodes.size());
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
        copy_size[i] = std::uint64_t{1} << (spec.nodes[i].level + 1);
    }

    for (const auto& e : spec.edges) {
        auto iu = node_index.find(e.u);
        auto iv = node_index.find(e.v);
        if (iu == node_index.end() || iv == node_index.end()) {
            throw Error(ErrorKind::invalid_argument, "tree model: edge names unknown node");
        }
        if (e.attach_u >= copy_size[iu->second] || e.attach_v >= copy_size[iv->second]) {
            throw Error(ErrorKind::invalid_argument,
                        "tree model: attachment vertex out of range");
        }
        auto ru = find(iu->second);
        auto rv = find(iv->second);
        if (ru == rv) {
            throw Error(ErrorKind::invalid_argument, "tree model: spec forms a cycle");
        }
        parent[ru] = rv;
    }

    // Union-find over (node, original) pairs to apply the identifications.
    std::vector<std::uint64_t> offset(spec.nodes.size() + 1, 0);
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
        offset[i + 1] = offset[i] + copy_size[i];
    }
    std::vector<std::uint64_t> vparent(offset.back());
    std::iota(vparent.begin(), vparent.end(), std::uint64_t{0});
    auto vfind = [&](std::uint64_t x) {
        while (vparent[x] != x) {
            vparent[x] = vparent[vparent[x]];
            x = vparent[x];
        }
        return x;
    };
    for (const auto& e : spec.edges) {
        auto iu = node_index[e.u];
        auto iv = node_index[e.v];
        auto a = vfind(offset[iu] + e.attach_u);
        auto b = vfind(offset[iv] + e.attach_v);
        if (a != b) vparent[std::max(a, b)] = std::min(a, b);
    }

    // Dense global ids in (node order, original id) order of representatives.
    constexpr VertexId kNone = static_cast<VertexId>(-1);
    std::vector<VertexId> global_of(offset.back(), kNone);
    TreeModel out;
    out.copy_vertices.resize(spec.nodes.size());
    VertexId next = 0;
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
        out.copy_vertices[i].resize(copy_size[i]);
        for (std::uint64_t orig = 0; orig < copy_size[i]; ++orig) {
            auto rep = vfind(offset[i] + orig);
            if (global_of[rep] == kNone) {
                global_of[rep] = next++;
                out.copy_of.push_back(i);
                out.original_id.push_back(static_cast<VertexId>(orig));
            }
            out.copy_vertices[i][orig] = global_of[rep];
        }
    }

    std::map<std::uint32_t, ColoredFarey> farey_cache;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
        auto level = spec.nodes[i].level;
        auto it = farey_cache.find(level);
        if (it == farey_cache.end()) {
            it = farey_cache.emplace(level, build_level(level, level_cap)).first;
        }
        for (const Edge& e : it->second.graph().edges()) {
            edges.emplace_back(out.copy_vertices[i][e.u], out.copy_vertices[i][e.v]);
        }
    }
    out.graph = Graph(next, edges);

    for (const auto& e : spec.edges) {
        out.identified.push_back({node_index[e.u], e.attach_u, node_index[e.v], e.attach_v});
    }
    return out;
}

GenericResult build_generic(std::uint64_t seed, std::uint32_t steps,
                            const GenericConfig& config) {
    if (steps > config.max_vertices) {
        throw Error(ErrorKind::limit, "build_generic: steps exceed the vertex cap");
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t total_weight =
        config.weight_isolated + config.weight_pendant + config.weight_apex;
    if (total_weight == 0) {
        throw Error(ErrorKind::invalid_argument, "build_generic: zero extension weights");
    }

    GenericResult out;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::uint32_t> triangle_count;  // aligned with `edges`
    std::vector<std::vector<VertexId>> adj;

    for (std::uint32_t step = 0; step < steps; ++step) {
        auto n = static_cast<VertexId>(adj.size());
        auto kind = ExtensionStep::Kind::isolated;
        if (n > 0) {
            std::uint64_t draw = rng() % total_weight;
            if (draw < config.weight_isolated) {
                kind = ExtensionStep::Kind::isolated;
            } else if (draw < config.weight_isolated + config.weight_pendant) {
                kind = ExtensionStep::Kind::pendant;
            } else {
                kind = ExtensionStep::Kind::apex;
            }
        }
        if (kind == ExtensionStep::Kind::apex) {
            std::vector<std::size_t> eligible;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (triangle_count[i] < 2) eligible.push_back(i);
            }
            if (eligible.empty()) kind = ExtensionStep::Kind::pendant;
            if (kind == ExtensionStep::Kind::apex) {
                auto pick = eligible[rng() % eligible.size()];
                auto [u, v] = edges[pick];
                adj.emplace_back();
                VertexId x = n;
                adj[x].push_back(u);
                adj[x].push_back(v);
                adj[u].push_back(x);
                adj[v].push_back(x);
                triangle_count[pick]++;
                edges.emplace_back(std::min(u, x), std::max(u, x));
                triangle_count.push_back(1);
                edges.emplace_back(std::min(v, x), std::max(v, x));
                triangle_count.push_back(1);
                out.log.push_back({ExtensionStep::Kind::apex, x, u, v});
                continue;
            }
        }
        if (kind == ExtensionStep::Kind::pendant) {
            VertexId target = static_cast<VertexId>(rng() % n);
            adj.emplace_back();
            VertexId x = n;
            adj[x].push_back(target);
            adj[target].push_back(x);
            edges.emplace_back(std::min(target, x), std::max(target, x));
            triangle_count.push_back(0);
            out.log.push_back({ExtensionStep::Kind::pendant, x, target, target});
            continue;
        }
        adj.emplace_back();
        out.log.push_back({ExtensionStep::Kind::isolated, n, n, n});
    }

    out.graph = Graph(static_cast<std::uint32_t>(adj.size()), edges);
    return out;
}

TComplianceReport t_compliance(const Graph& g) {
    TComplianceReport out;
    for (const Edge& e : g.edges()) {
        auto apexes = triangles_on_edge(g, e.u, e.v).size();
        if (apexes == 0) {
            ++out.edges_zero_triangles;
        } else if (apexes == 1) {
            ++out.edges_one_triangle;
        } else if (apexes == 2) {
            ++out.edges_two_triangles;
        } else {
            out.edges_violating.push_back(e);
        }
    }
    out.k_member = is_in_K(g).member;
    return out;
}

}  // namespace farey
