#include "farey/canonical.hpp"

#include <algorithm>
#include <array>

namespace farey {

namespace {

// Adjacency of a small graph as per-vertex bitmasks.
std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> masks(g.vertex_count(), 0);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            masks[u] |= (1u << v);
        }
    }
    return masks;
}

// True when swapping u and w is an automorphism (identical neighborhoods
// apart from each other).
bool are_twins(std::uint32_t mask_u, std::uint32_t mask_w, VertexId u, VertexId w) {
    std::uint32_t mu = mask_u & ~(1u << w);
    std::uint32_t mw = mask_w & ~(1u << u);
    bool edge_uw = (mask_u >> w) & 1u;
    bool edge_wu = (mask_w >> u) & 1u;
    return mu == mw && edge_uw == edge_wu;
}

struct CanonicalSearch {
    const std::vector<std::uint32_t>& masks;
    std::uint32_t n;
    std::vector<VertexId> placed;  // position -> vertex
    std::vector<char> used;        // vertex -> placed?
    std::vector<std::uint32_t> best_cols;  // column k = adjacency bits of position k vs 0..k-1
    std::uint32_t best_len = 0;

    explicit CanonicalSearch(const std::vector<std::uint32_t>& m, std::uint32_t count)
        : masks(m), n(count), used(count, 0), best_cols(count, 0) {}

    std::uint32_t column_for(VertexId candidate) const {
        std::uint32_t col = 0;
        for (std::uint32_t i = 0; i < placed.size(); ++i) {
            col |= ((masks[candidate] >> placed[i]) & 1u) << i;
        }
        return col;
    }

    void run() {
        if (placed.size() == n) return;
        auto k = static_cast<std::uint32_t>(placed.size());
        struct Option {
            std::uint32_t col;
            VertexId vertex;
        };
        std::vector<Option> options;
        options.reserve(n);
        for (VertexId u = 0; u < n; ++u) {
            if (!used[u]) options.push_back({column_for(u), u});
        }
        std::sort(options.begin(), options.end(), [](const Option& a, const Option& b) {
            return a.col < b.col || (a.col == b.col && a.vertex < b.vertex);
        });
        for (std::size_t idx = 0; idx < options.size(); ++idx) {
            const auto& opt = options[idx];
            // Twins of an already-tried sibling explore an identical subtree.
            bool skip = false;
            for (std::size_t prev = 0; prev < idx && !skip; ++prev) {
                if (options[prev].col == opt.col &&
                    are_twins(masks[options[prev].vertex], masks[opt.vertex],
                              options[prev].vertex, opt.vertex)) {
                    skip = true;
                }
            }
            if (skip) continue;
            if (k < best_len) {
                if (opt.col > best_cols[k]) break;  // options sorted: the rest only grow
                if (opt.col < best_cols[k]) {
                    best_cols[k] = opt.col;
                    best_len = k + 1;
                }
            } else {
                best_cols[k] = opt.col;
                best_len = k + 1;
            }
            used[opt.vertex] = 1;
            placed.push_back(opt.vertex);
            run();
            placed.pop_back();
            used[opt.vertex] = 0;
        }
    }
};

}  // namespace

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (std::uint8_t byte : code) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

CanonicalCode canonical_form(const Graph& g, std::span<const VertexId> pins, std::uint32_t cap) {
    if (cap > kMaxCanonicalCap) cap = kMaxCanonicalCap;
    if (g.vertex_count() > cap) {
        throw Error(ErrorKind::limit,
                    "canonical_form: graph has " + std::to_string(g.vertex_count()) +
                        " vertices, cap is " + std::to_string(cap));
    }
    std::vector<char> pinned(g.vertex_count(), 0);
    for (VertexId p : pins) {
        if (!g.has_vertex(p)) {
            throw Error(ErrorKind::invalid_argument, "canonical_form: pin outside graph");
        }
        if (pinned[p]) {
            throw Error(ErrorKind::invalid_argument, "canonical_form: duplicate pin");
        }
        pinned[p] = 1;
    }

    auto masks = adjacency_masks(g);
    CanonicalSearch search(masks, g.vertex_count());
    for (VertexId p : pins) {
        auto k = static_cast<std::uint32_t>(search.placed.size());
        std::uint32_t col = search.column_for(p);
        search.used[p] = 1;
        search.placed.push_back(p);
        search.best_cols[k] = col;
        search.best_len = k + 1;
    }
    search.run();

    CanonicalCode out;
    out.code.push_back(static_cast<std::uint8_t>(g.vertex_count()));
    out.code.push_back(static_cast<std::uint8_t>(pins.size()));
    std::uint8_t acc = 0;
    int bits = 0;
    for (std::uint32_t k = 0; k < g.vertex_count(); ++k) {
        for (std::uint32_t i = 0; i < k; ++i) {
            acc = static_cast<std::uint8_t>((acc << 1) | ((search.best_cols[k] >> i) & 1u));
            if (++bits == 8) {
                out.code.push_back(acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.code.push_back(static_cast<std::uint8_t>(acc << (8 - bits)));
    for (std::uint32_t i = 0; i < pins.size(); ++i) out.pin_images.push_back(i);
    return out;
}

namespace {

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    std::vector<VertexId> map;       // g1 vertex -> g2 vertex (or kNone)
    std::vector<VertexId> inverse;   // g2 vertex -> g1 vertex (or kNone)
    std::vector<VertexId> order;     // g1 vertices in assignment order

    static constexpr VertexId kNone = static_cast<VertexId>(-1);

    bool consistent(VertexId u, VertexId w) const {
        // u in g1 maps to w in g2: check against everything already mapped.
        for (VertexId x = 0; x < g1.vertex_count(); ++x) {
            if (map[x] == kNone || x == u) continue;
            if (g1.has_edge(u, x) != g2.has_edge(w, map[x])) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        VertexId u = order[depth];
        for (VertexId w = 0; w < g2.vertex_count(); ++w) {
            if (inverse[w] != kNone) continue;
            if (valency(g1, u) != valency(g2, w)) continue;
            if (!consistent(u, w)) continue;
            map[u] = w;
            inverse[w] = u;
            if (extend(depth + 1)) return true;
            map[u] = kNone;
            inverse[w] = kNone;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(
    const Graph& g1, const Graph& g2,
    std::span<const std::pair<VertexId, VertexId>> pin_map) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
        return std::nullopt;
    }
    IsoSearch search{g1, g2, {}, {}, {}};
    search.map.assign(g1.vertex_count(), IsoSearch::kNone);
    search.inverse.assign(g2.vertex_count(), IsoSearch::kNone);
    for (const auto& [u, w] : pin_map) {
        if (!g1.has_vertex(u) || !g2.has_vertex(w)) {
            throw Error(ErrorKind::invalid_argument, "find_isomorphism: pin outside graph");
        }
        if (search.map[u] != IsoSearch::kNone || search.inverse[w] != IsoSearch::kNone) {
            throw Error(ErrorKind::invalid_argument, "find_isomorphism: pin map not injective");
        }
        search.map[u] = w;
        search.inverse[w] = u;
    }
    for (const auto& [u, w] : pin_map) {
        if (!search.consistent(u, w)) return std::nullopt;
    }

    // Assign unpinned vertices, preferring ones adjacent to already-ordered
    // vertices so the consistency check prunes early.
    std::vector<char> queued(g1.vertex_count(), 0);
    for (VertexId u = 0; u < g1.vertex_count(); ++u) {
        if (search.map[u] != IsoSearch::kNone) queued[u] = 1;
    }
    std::vector<VertexId> frontier;
    for (const auto& pin : pin_map) frontier.push_back(pin.first);
    std::size_t head = 0;
    while (search.order.size() + pin_map.size() < g1.vertex_count()) {
        VertexId next = IsoSearch::kNone;
        while (head < frontier.size() && next == IsoSearch::kNone) {
            for (VertexId v : g1.neighbors(frontier[head])) {
                if (!queued[v]) {
                    next = v;
                    break;
                }
            }
            if (next == IsoSearch::kNone) ++head;
        }
        if (next == IsoSearch::kNone) {
            for (VertexId v = 0; v < g1.vertex_count(); ++v) {
                if (!queued[v]) {
                    next = v;
                    break;
                }
            }
        }
        queued[next] = 1;
        search.order.push_back(next);
        frontier.push_back(next);
    }

    if (!search.extend(0)) return std::nullopt;
    return search.map;
}

}  // namespace farey
