#include "farey/amalgam.hpp"

#include <algorithm>

#include "farey/kclass.hpp"

namespace farey {

namespace {

constexpr VertexId kNone = static_cast<VertexId>(-1);

void validate_glue(const Graph& b, const Graph& c, const GlueMap& glue) {
    std::vector<char> seen_b(b.vertex_count(), 0), seen_c(c.vertex_count(), 0);
    for (const auto& [u, w] : glue) {
        if (!b.has_vertex(u) || !c.has_vertex(w)) {
            throw Error(ErrorKind::invalid_argument, "glue: vertex outside factor");
        }
        if (seen_b[u] || seen_c[w]) {
            throw Error(ErrorKind::invalid_argument, "glue: identification not injective");
        }
        seen_b[u] = 1;
        seen_c[w] = 1;
    }
    for (std::size_t i = 0; i < glue.size(); ++i) {
        for (std::size_t j = i + 1; j < glue.size(); ++j) {
            if (b.has_edge(glue[i].first, glue[j].first) !=
                c.has_edge(glue[i].second, glue[j].second)) {
                throw Error(ErrorKind::invalid_argument,
                            "glue: the two copies of A do not induce the same graph");
            }
        }
    }
}

}  // namespace

AmalgamResult free_amalgam(const Graph& b, const Graph& c, const GlueMap& glue) {
    validate_glue(b, c, glue);

    AmalgamResult out;
    out.embed_b.assign(b.vertex_count(), kNone);
    out.embed_c.assign(c.vertex_count(), kNone);

    VertexId next = 0;
    for (const auto& [u, w] : glue) {
        out.embed_b[u] = next;
        out.embed_c[w] = next;
        ++next;
    }
    for (VertexId u = 0; u < b.vertex_count(); ++u) {
        if (out.embed_b[u] == kNone) out.embed_b[u] = next++;
    }
    for (VertexId w = 0; w < c.vertex_count(); ++w) {
        if (out.embed_c[w] == kNone) out.embed_c[w] = next++;
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : b.edges()) edges.emplace_back(out.embed_b[e.u], out.embed_b[e.v]);
    for (const Edge& e : c.edges()) edges.emplace_back(out.embed_c[e.u], out.embed_c[e.v]);
    out.graph = Graph(next, edges);
    return out;
}

AmalgamResult amalgamate_in_K(const Graph& b, const Graph& c, const GlueMap& glue) {
    validate_glue(b, c, glue);

    if (!is_in_K(b).member) {
        throw Error(ErrorKind::invalid_argument, "amalgamate_in_K: B is not a class member");
    }
    if (!is_in_K(c).member) {
        throw Error(ErrorKind::invalid_argument, "amalgamate_in_K: C is not a class member");
    }
    std::vector<VertexId> a_in_b, a_in_c;
    for (const auto& [u, w] : glue) {
        a_in_b.push_back(u);
        a_in_c.push_back(w);
    }
    StrongResult peel_b = is_strong(a_in_b, b);
    if (!peel_b.strong) {
        throw Error(ErrorKind::invalid_argument, "amalgamate_in_K: A is not strong in B");
    }
    if (!is_strong(a_in_c, c).strong) {
        throw Error(ErrorKind::invalid_argument, "amalgamate_in_K: A is not strong in C");
    }

    AmalgamResult out;
    out.embed_c.resize(c.vertex_count());
    for (VertexId w = 0; w < c.vertex_count(); ++w) out.embed_c[w] = w;
    out.embed_b.assign(b.vertex_count(), kNone);
    for (const auto& [u, w] : glue) out.embed_b[u] = w;

    // Growing adjacency of D, seeded with C.
    std::vector<std::vector<VertexId>> adj(c.vertex_count());
    for (const Edge& e : c.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    auto d_has_edge = [&](VertexId x, VertexId y) {
        const auto& list = adj[x];
        return std::find(list.begin(), list.end(), y) != list.end();
    };
    auto d_apexes = [&](VertexId x, VertexId y) {
        std::vector<VertexId> apexes;
        for (VertexId w : adj[x]) {
            if (w != y && d_has_edge(w, y)) apexes.push_back(w);
        }
        std::sort(apexes.begin(), apexes.end());
        return apexes;
    };

    std::vector<char> is_image(c.vertex_count(), 0);
    for (VertexId w : a_in_c) is_image[w] = 1;
    std::vector<char> staged(b.vertex_count(), 0);
    for (VertexId u : a_in_b) staged[u] = 1;

    auto add_vertex = [&]() {
        adj.emplace_back();
        is_image.push_back(0);
        return static_cast<VertexId>(adj.size() - 1);
    };
    auto add_edge = [&](VertexId x, VertexId y) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    };

    // Re-add B's peeled vertices in reverse removal order.
    for (auto it = peel_b.peel.steps.rbegin(); it != peel_b.peel.steps.rend(); ++it) {
        VertexId x = it->vertex;
        if (it->reason.kind == RemovalReason::Kind::valency_le_1) {
            VertexId image = add_vertex();
            for (VertexId nb : b.neighbors(x)) {
                if (staged[nb]) add_edge(image, out.embed_b[nb]);
            }
            out.embed_b[x] = image;
            is_image[image] = 1;
        } else {
            VertexId iu = out.embed_b[it->reason.apex_edge.u];
            VertexId iv = out.embed_b[it->reason.apex_edge.v];
            auto apexes = d_apexes(iu, iv);
            if (apexes.size() < 2) {
                VertexId image = add_vertex();
                add_edge(image, iu);
                add_edge(image, iv);
                out.embed_b[x] = image;
                is_image[image] = 1;
            } else {
                // Identify x with an apex that is not already an image and
                // touches no other image; one exists because the image of A
                // is strong in the accumulating graph.
                VertexId chosen = kNone;
                for (VertexId w : apexes) {
                    if (is_image[w]) continue;
                    bool clean = true;
                    for (VertexId nb : adj[w]) {
                        if (is_image[nb] && nb != iu && nb != iv) {
                            clean = false;
                            break;
                        }
                    }
                    if (clean) {
                        chosen = w;
                        break;
                    }
                }
                if (chosen == kNone) {
                    throw Error(ErrorKind::invalid_argument,
                                "amalgamate_in_K: no consistent apex for the collapse");
                }
                out.embed_b[x] = chosen;
                is_image[chosen] = 1;
                out.collapsed.emplace_back(x, chosen);
            }
        }
        staged[x] = 1;
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < adj.size(); ++v) {
        for (VertexId w : adj[v]) {
            if (v < w) edges.emplace_back(v, w);
        }
    }
    out.graph = Graph(static_cast<std::uint32_t>(adj.size()), edges);

    // Per-instance verification of the construction.
    for (VertexId u = 0; u < b.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < b.vertex_count(); ++v) {
            if (b.has_edge(u, v) != out.graph.has_edge(out.embed_b[u], out.embed_b[v])) {
                throw Error(ErrorKind::invalid_argument,
                            "amalgamate_in_K: embedding of B is not induced");
            }
        }
    }
    if (!is_in_K(out.graph).member) {
        throw Error(ErrorKind::invalid_argument,
                    "amalgamate_in_K: result left the class");
    }
    std::vector<VertexId> image_b = out.embed_b;
    std::sort(image_b.begin(), image_b.end());
    if (!is_strong(image_b, out.graph).strong ||
        !is_strong(out.embed_c, out.graph).strong) {
        throw Error(ErrorKind::invalid_argument,
                    "amalgamate_in_K: a factor failed to re-embed strongly");
    }
    return out;
}

}  // namespace farey
