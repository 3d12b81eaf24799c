#include "farey/farey_build.hpp"

#include <algorithm>

namespace farey {

std::uint32_t ColoredFarey::birth_level(VertexId v) const {
    if (!graph_.has_vertex(v)) {
        throw Error(ErrorKind::invalid_argument, "birth_level: unknown vertex");
    }
    return birth_[v];
}

std::optional<Edge> ColoredFarey::parent_edge(VertexId v) const {
    if (!graph_.has_vertex(v)) {
        throw Error(ErrorKind::invalid_argument, "parent_edge: unknown vertex");
    }
    if (v < 4) return std::nullopt;
    return parent_[v - 4];
}

std::uint32_t ColoredFarey::edge_birth(VertexId u, VertexId v) const {
    Edge e(u, v);
    if (e.u == 0 && e.v == 1) return 0;  // the initial black edge
    return std::max(birth_[e.u], birth_[e.v]);
}

EdgeColor ColoredFarey::color(VertexId u, VertexId v) const {
    if (!graph_.has_edge(u, v)) {
        throw Error(ErrorKind::invalid_argument,
                    "color: {" + std::to_string(u) + "," + std::to_string(v) +
                        "} is not an edge");
    }
    return edge_birth(u, v) == level_ ? EdgeColor::blue : EdgeColor::black;
}

std::vector<Edge> ColoredFarey::blue_edges() const {
    std::vector<Edge> out;
    for (const Edge& e : graph_.edges()) {
        if (edge_birth(e.u, e.v) == level_) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.v, a.u) < std::pair(b.v, b.u);
    });
    return out;
}

std::size_t ColoredFarey::blue_edge_count() const { return blue_edges().size(); }

ColoredFarey build_level(std::uint32_t n, std::uint32_t cap) {
    if (n < 1) {
        throw Error(ErrorKind::invalid_argument, "build_level: level must be at least 1");
    }
    if (n > cap) {
        throw Error(ErrorKind::limit, "build_level: level " + std::to_string(n) +
                                          " exceeds cap " + std::to_string(cap));
    }
    std::vector<std::pair<VertexId, VertexId>> edges = {
        {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
    std::vector<std::uint32_t> birth = {1, 1, 1, 1};
    std::vector<Edge> parent;
    std::vector<Edge> blue = {{0, 2}, {1, 2}, {0, 3}, {1, 3}};  // creation order

    for (std::uint32_t lvl = 2; lvl <= n; ++lvl) {
        std::vector<Edge> next_blue;
        next_blue.reserve(blue.size() * 2);
        for (const Edge& e : blue) {
            auto v = static_cast<VertexId>(birth.size());
            birth.push_back(lvl);
            parent.push_back(e);
            edges.emplace_back(e.u, v);
            edges.emplace_back(e.v, v);
            next_blue.emplace_back(e.u, v);
            next_blue.emplace_back(e.v, v);
        }
        blue = std::move(next_blue);
    }

    ColoredFarey out;
    out.graph_ = Graph(static_cast<std::uint32_t>(birth.size()), edges);
    out.level_ = n;
    out.birth_ = std::move(birth);
    out.parent_ = std::move(parent);
    return out;
}

LevelCounts level_counts(std::uint32_t n) {
    if (n < 1) {
        throw Error(ErrorKind::invalid_argument, "level_counts: level must be at least 1");
    }
    if (n > 61) {
        throw Error(ErrorKind::limit, "level_counts: counts overflow 64 bits");
    }
    LevelCounts out;
    out.vertices = std::uint64_t{1} << (n + 1);
    out.edges = (std::uint64_t{1} << (n + 2)) - 3;
    out.blue_edges = out.vertices;
    return out;
}

ColoredFarey union_limit_view(const ColoredFarey& f, std::uint32_t m) {
    if (m < 1) {
        throw Error(ErrorKind::invalid_argument, "union_limit_view: level must be at least 1");
    }
    if (m > f.level_) {
        throw Error(ErrorKind::invalid_argument,
                    "union_limit_view: level exceeds the host level");
    }
    auto keep = static_cast<std::uint32_t>(std::uint64_t{1} << (m + 1));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : f.graph_.edges()) {
        if (e.u < keep && e.v < keep) edges.emplace_back(e.u, e.v);
    }
    ColoredFarey out;
    out.graph_ = Graph(keep, edges);
    out.level_ = m;
    out.birth_.assign(f.birth_.begin(), f.birth_.begin() + keep);
    out.parent_.assign(f.parent_.begin(), f.parent_.begin() + (keep - 4));
    return out;
}

}  // namespace farey
