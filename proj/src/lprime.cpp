#include "farey/lprime.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "farey/farey_build.hpp"
#include "farey/kclass.hpp"

namespace farey {

namespace {

constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);

std::vector<std::uint32_t> bfs_from(const Graph& g, VertexId source) {
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        VertexId cur = queue.front();
        queue.pop();
        for (VertexId next : g.neighbors(cur)) {
            if (dist[next] == kUnreached) {
                dist[next] = dist[cur] + 1;
                queue.push(next);
            }
        }
    }
    return dist;
}

/// Induced embedding of pattern into host extending the pins, or nullopt.
std::optional<std::vector<VertexId>> find_induced_embedding(
    const Graph& pattern, const Graph& host,
    std::span<const std::pair<VertexId, VertexId>> pins) {
    const std::uint32_t pn = pattern.vertex_count();
    std::vector<VertexId> image(pn, kNoImage);
    std::vector<char> used(host.vertex_count(), 0);
    for (const auto& [p, h] : pins) {
        if (image[p] != kNoImage || used[h]) return std::nullopt;
        image[p] = h;
        used[h] = 1;
    }
    // Pin consistency.
    for (const auto& [p, h] : pins) {
        for (const auto& [q, h2] : pins) {
            if (p != q && pattern.has_edge(p, q) != host.has_edge(h, h2)) {
                return std::nullopt;
            }
        }
    }

    // Assignment order: repeatedly take the unplaced vertex with the most
    // placed neighbors.
    std::vector<VertexId> order;
    {
        std::vector<char> placed(pn, 0);
        for (const auto& [p, h] : pins) placed[p] = 1;
        for (std::uint32_t step = pins.size(); step < pn; ++step) {
            VertexId best = kNoImage;
            std::size_t best_count = 0;
            for (VertexId p = 0; p < pn; ++p) {
                if (placed[p]) continue;
                std::size_t count = 0;
                for (VertexId q : pattern.neighbors(p)) {
                    if (placed[q]) ++count;
                }
                if (best == kNoImage || count > best_count) {
                    best = p;
                    best_count = count;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    auto consistent = [&](VertexId p, VertexId h) {
        for (VertexId q = 0; q < pn; ++q) {
            if (q == p || image[q] == kNoImage) continue;
            if (pattern.has_edge(p, q) != host.has_edge(h, image[q])) return false;
        }
        return true;
    };

    auto extend = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        VertexId p = order[depth];
        // Prefer candidates among the host neighbors of a placed neighbor.
        VertexId anchor = kNoImage;
        for (VertexId q : pattern.neighbors(p)) {
            if (image[q] != kNoImage) {
                anchor = image[q];
                break;
            }
        }
        auto try_one = [&](VertexId h) {
            if (used[h] || valency(host, h) < valency(pattern, p)) return false;
            if (!consistent(p, h)) return false;
            image[p] = h;
            used[h] = 1;
            if (self(self, depth + 1)) return true;
            image[p] = kNoImage;
            used[h] = 0;
            return false;
        };
        if (anchor != kNoImage) {
            for (VertexId h : host.neighbors(anchor)) {
                if (try_one(h)) return true;
            }
        } else {
            for (VertexId h = 0; h < host.vertex_count(); ++h) {
                if (try_one(h)) return true;
            }
        }
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;
    return image;
}

std::vector<std::array<VertexId, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<VertexId, 3>> out;
    for (const Edge& e : g.edges()) {
        for (VertexId w : triangles_on_edge(g, e.u, e.v)) {
            if (w > e.v) out.push_back({e.u, e.v, w});
        }
    }
    return out;
}

}  // namespace

const CycleType& CycleCatalog::at(std::size_t index) const {
    if (index >= types_.size()) {
        throw Error(ErrorKind::invalid_argument, "catalog: type index out of range");
    }
    return types_[index];
}

std::vector<std::size_t> CycleCatalog::span_class(std::uint32_t span) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < types_.size(); ++i) {
        if (types_[i].span == span) out.push_back(i);
    }
    return out;
}

std::optional<std::size_t> CycleCatalog::find_by_name(const std::string& name) const {
    for (std::size_t i = 0; i < types_.size(); ++i) {
        if (types_[i].name == name) return i;
    }
    if (name == "lozenge") {
        for (std::size_t i = 0; i < types_.size(); ++i) {
            if (types_[i].graph.vertex_count() == 4) return i;
        }
    }
    return std::nullopt;
}

CycleCatalog catalog_from_types(std::vector<CycleType> types, std::uint32_t max_vertices,
                                std::uint32_t level) {
    CycleCatalog out;
    out.types_ = std::move(types);
    out.max_vertices_ = max_vertices;
    out.level_ = level;
    return out;
}

CycleCatalog enumerate_cycle_types(std::uint32_t max_vertices, std::uint32_t level) {
    if (max_vertices > kMaxCycleTypeVertices) {
        throw Error(ErrorKind::limit, "enumerate_cycle_types: vertex bound exceeds 12");
    }
    if (level == 0) {
        level = std::max<std::uint32_t>(3, max_vertices >= 2 ? max_vertices - 2 : 1);
    }
    CycleCatalog out;
    out.max_vertices_ = max_vertices;
    out.level_ = level;
    if (max_vertices < 4) return out;

    ColoredFarey farey_graph = build_level(level);
    const Graph& host = farey_graph.graph();
    auto triangles = all_triangles(host);

    // Dual adjacency: triangles sharing an edge.
    std::map<Edge, std::vector<std::size_t>> by_edge;
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        const auto& tri = triangles[t];
        by_edge[Edge(tri[0], tri[1])].push_back(t);
        by_edge[Edge(tri[0], tri[2])].push_back(t);
        by_edge[Edge(tri[1], tri[2])].push_back(t);
    }
    std::vector<std::vector<std::size_t>> dual(triangles.size());
    for (const auto& [edge, members] : by_edge) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                dual[members[i]].push_back(members[j]);
                dual[members[j]].push_back(members[i]);
            }
        }
    }

    const std::size_t max_triangles = max_vertices - 2;
    std::map<std::string, CycleType> found;  // keyed by unpinned canonical code

    auto consider_path = [&](const std::vector<std::size_t>& path) {
        std::vector<VertexId> verts;
        for (auto t : path) {
            verts.push_back(triangles[t][0]);
            verts.push_back(triangles[t][1]);
            verts.push_back(triangles[t][2]);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.size() != path.size() + 2) return;  // triangles not in convex position
        auto sub = induced_subgraph(host, verts);
        auto removable = removable_vertices(sub.graph, {});
        if (removable.size() != 2) return;

        auto key = canonical_form(sub.graph).hex();
        if (found.contains(key)) return;

        CycleType type;
        type.graph = sub.graph;
        type.removable_pair = {removable[0], removable[1]};
        auto span = distance(sub.graph, removable[0], removable[1]);
        if (!span) return;
        type.span = *span;
        std::array<VertexId, 2> fwd{removable[0], removable[1]};
        std::array<VertexId, 2> rev{removable[1], removable[0]};
        auto code_fwd = canonical_form(sub.graph, fwd);
        auto code_rev = canonical_form(sub.graph, rev);
        type.code = std::min(code_fwd, code_rev);
        found.emplace(std::move(key), std::move(type));
    };

    // Every minimal cycle is the union of a path in the triangle tree.
    std::vector<char> in_path(triangles.size(), 0);
    std::vector<std::size_t> path;
    auto dfs = [&](auto&& self, std::size_t last) -> void {
        if (path.size() >= 2 && path.front() < path.back()) consider_path(path);
        if (path.size() == max_triangles) return;
        for (auto next : dual[last]) {
            if (in_path[next]) continue;
            in_path[next] = 1;
            path.push_back(next);
            self(self, next);
            path.pop_back();
            in_path[next] = 0;
        }
    };
    for (std::size_t start = 0; start < triangles.size(); ++start) {
        in_path[start] = 1;
        path.push_back(start);
        dfs(dfs, start);
        path.pop_back();
        in_path[start] = 0;
    }

    for (auto& [key, type] : found) out.types_.push_back(std::move(type));
    std::sort(out.types_.begin(), out.types_.end(), [](const CycleType& a, const CycleType& b) {
        return std::tuple(a.span, a.graph.vertex_count(), a.code) <
               std::tuple(b.span, b.graph.vertex_count(), b.code);
    });
    std::map<std::uint32_t, std::size_t> per_span;
    for (auto& type : out.types_) {
        type.name = "c" + std::to_string(type.span) + "_" +
                    std::to_string(per_span[type.span]++);
    }
    return out;
}

std::uint32_t total_span(const CycleCatalog& catalog, const DeltaSequence& delta) {
    std::uint32_t sum = 0;
    for (auto idx : delta) sum += catalog.at(idx).span;
    return sum;
}

std::optional<PCWitness> eval_P_C(const Graph& g, const CycleCatalog& catalog,
                                  std::size_t type_index, VertexId x, VertexId y) {
    const CycleType& type = catalog.at(type_index);
    if (!g.has_vertex(x) || !g.has_vertex(y)) {
        throw Error(ErrorKind::invalid_argument, "eval_P_C: vertex outside graph");
    }
    if (x == y) return std::nullopt;
    auto [r1, r2] = type.removable_pair;
    std::array<std::pair<VertexId, VertexId>, 2> fwd{{{r1, x}, {r2, y}}};
    if (auto image = find_induced_embedding(type.graph, g, fwd)) {
        return PCWitness{std::move(*image)};
    }
    std::array<std::pair<VertexId, VertexId>, 2> rev{{{r1, y}, {r2, x}}};
    if (auto image = find_induced_embedding(type.graph, g, rev)) {
        return PCWitness{std::move(*image)};
    }
    return std::nullopt;
}

namespace {

struct PCMemo {
    const Graph& g;
    const CycleCatalog& catalog;
    std::map<std::tuple<std::size_t, VertexId, VertexId>, std::optional<PCWitness>> cache;

    const std::optional<PCWitness>& lookup(std::size_t type, VertexId a, VertexId b) {
        auto key = std::tuple(type, std::min(a, b), std::max(a, b));
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, eval_P_C(g, catalog, type, a, b)).first;
        }
        return it->second;
    }
};

void pdelta_search(const Graph& g, const CycleCatalog& catalog, const DeltaSequence& delta,
                   VertexId y, const std::vector<std::uint32_t>& dist_x,
                   const std::vector<std::uint32_t>& dist_y, std::uint32_t total,
                   PCMemo& memo, std::size_t link, std::uint32_t prefix,
                   std::vector<VertexId>& points, std::vector<PCWitness>& links,
                   std::vector<PDeltaWitness>& out, std::size_t max_witnesses) {
    if (out.size() >= max_witnesses) return;
    if (link == delta.size()) {
        out.push_back(PDeltaWitness{points, links});
        return;
    }
    std::uint32_t next_prefix = prefix + catalog.at(delta[link]).span;
    VertexId from = points.back();
    if (link + 1 == delta.size()) {
        // The last connecting point is y itself.
        const auto& witness = memo.lookup(delta[link], from, y);
        if (witness) {
            points.push_back(y);
            links.push_back(*witness);
            pdelta_search(g, catalog, delta, y, dist_x, dist_y, total, memo, link + 1,
                          next_prefix, points, links, out, max_witnesses);
            links.pop_back();
            points.pop_back();
        }
        return;
    }
    for (VertexId z = 0; z < g.vertex_count(); ++z) {
        if (dist_x[z] != next_prefix || dist_y[z] != total - next_prefix) continue;
        const auto& witness = memo.lookup(delta[link], from, z);
        if (!witness) continue;
        points.push_back(z);
        links.push_back(*witness);
        pdelta_search(g, catalog, delta, y, dist_x, dist_y, total, memo, link + 1,
                      next_prefix, points, links, out, max_witnesses);
        links.pop_back();
        points.pop_back();
        if (out.size() >= max_witnesses) return;
    }
}

std::vector<PDeltaWitness> pdelta_witnesses(const Graph& g, const CycleCatalog& catalog,
                                            const DeltaSequence& delta, VertexId x,
                                            VertexId y, std::size_t max_witnesses) {
    if (!g.has_vertex(x) || !g.has_vertex(y)) {
        throw Error(ErrorKind::invalid_argument, "eval_P_delta: vertex outside graph");
    }
    std::vector<PDeltaWitness> out;
    if (delta.empty()) {
        if (x == y) out.push_back(PDeltaWitness{{x}, {}});
        return out;
    }
    auto dist_x = bfs_from(g, x);
    if (dist_x[y] == kUnreached) return out;
    std::uint32_t total = total_span(catalog, delta);
    if (dist_x[y] != total) return out;  // distance clause
    auto dist_y = bfs_from(g, y);

    PCMemo memo{g, catalog, {}};
    std::vector<VertexId> points{x};
    std::vector<PCWitness> links;
    pdelta_search(g, catalog, delta, y, dist_x, dist_y, total, memo, 0, 0, points, links,
                  out, max_witnesses);
    return out;
}

}  // namespace

std::optional<PDeltaWitness> eval_P_delta(const Graph& g, const CycleCatalog& catalog,
                                          const DeltaSequence& delta, VertexId x,
                                          VertexId y) {
    auto witnesses = pdelta_witnesses(g, catalog, delta, x, y, 1);
    if (witnesses.empty()) return std::nullopt;
    return std::move(witnesses.front());
}

std::vector<PDeltaWitness> all_P_delta_witnesses(const Graph& g, const CycleCatalog& catalog,
                                                 const DeltaSequence& delta, VertexId x,
                                                 VertexId y, std::size_t max_witnesses) {
    return pdelta_witnesses(g, catalog, delta, x, y, max_witnesses);
}

namespace {

void extend_level_copy(const Graph& g, const Graph& pattern,
                       const std::vector<std::pair<VertexId, VertexId>>& parents,
                       std::vector<VertexId>& image, std::vector<char>& used, VertexId next_id,
                       std::vector<LevelEmbedding>& out) {
    if (next_id == pattern.vertex_count()) {
        out.push_back(image);
        return;
    }
    auto [p1, p2] = parents[next_id];
    VertexId i1 = image[p1];
    VertexId i2 = image[p2];
    for (VertexId candidate : g.neighbors(i1)) {
        if (used[candidate] || !g.has_edge(candidate, i2)) continue;
        bool ok = true;
        for (VertexId j = 0; j < next_id && ok; ++j) {
            if (j == p1 || j == p2) continue;
            if (g.has_edge(candidate, image[j])) ok = false;
        }
        if (!ok) continue;
        image[next_id] = candidate;
        used[candidate] = 1;
        extend_level_copy(g, pattern, parents, image, used, next_id + 1, out);
        used[candidate] = 0;
        image[next_id] = kNoImage;
    }
}

std::vector<std::pair<VertexId, VertexId>> level_parents(const ColoredFarey& f) {
    std::vector<std::pair<VertexId, VertexId>> parents(f.graph().vertex_count(), {0, 0});
    parents[2] = {0, 1};
    parents[3] = {0, 1};
    for (VertexId v = 4; v < f.graph().vertex_count(); ++v) {
        auto e = f.parent_edge(v);
        parents[v] = {e->u, e->v};
    }
    return parents;
}

}  // namespace

std::vector<LevelEmbedding> eval_D(const Graph& g, std::uint32_t level, VertexId x,
                                   VertexId y, VertexId z) {
    if (!g.has_vertex(x) || !g.has_vertex(y) || !g.has_vertex(z)) {
        throw Error(ErrorKind::invalid_argument, "eval_D: vertex outside graph");
    }
    ColoredFarey f = build_level(level);
    std::vector<LevelEmbedding> out;
    if (x == y || x == z || y == z) return out;
    if (!g.has_edge(x, y) || !g.has_edge(x, z) || !g.has_edge(y, z)) return out;
    auto parents = level_parents(f);
    std::vector<VertexId> image(f.graph().vertex_count(), kNoImage);
    std::vector<char> used(g.vertex_count(), 0);
    image[0] = x;
    image[1] = y;
    image[2] = z;
    used[x] = used[y] = used[z] = 1;
    extend_level_copy(g, f.graph(), parents, image, used, 3, out);
    return out;
}

std::vector<LevelEmbedding> enumerate_level_copies(const Graph& g, std::uint32_t level) {
    std::vector<LevelEmbedding> out;
    for (const Edge& e : g.edges()) {
        for (VertexId w : triangles_on_edge(g, e.u, e.v)) {
            for (auto [a, b] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
                auto copies = eval_D(g, level, a, b, w);
                out.insert(out.end(), copies.begin(), copies.end());
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<YWitness> eval_Y(const Graph& g, const CycleCatalog& catalog,
                               const EpsilonDescriptor& eps, VertexId x, VertexId y,
                               VertexId z) {
    for (const auto& copy : enumerate_level_copies(g, eps.level)) {
        auto w1 = eval_P_delta(g, catalog, eps.d1, x, copy[0]);
        if (!w1) continue;
        auto w2 = eval_P_delta(g, catalog, eps.d2, y, copy[1]);
        if (!w2) continue;
        auto w3 = eval_P_delta(g, catalog, eps.d3, z, copy[2]);
        if (!w3) continue;
        return YWitness{copy[0], copy[1], copy[2], copy, std::move(*w1), std::move(*w2),
                        std::move(*w3)};
    }
    return std::nullopt;
}

std::vector<DeltaSequence> delta_sequences_with_span(const CycleCatalog& catalog,
                                                     std::uint32_t max_cycle_size,
                                                     std::uint32_t max_len,
                                                     std::uint32_t target_span) {
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        // A zero span would make the search loop; no valid type has one.
        if (catalog.at(i).span >= 1 &&
            catalog.at(i).graph.vertex_count() <= max_cycle_size) {
            usable.push_back(i);
        }
    }
    std::vector<DeltaSequence> out;
    DeltaSequence current;
    auto dfs = [&](auto&& self, std::uint32_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (current.size() == max_len) return;
        for (auto idx : usable) {
            auto span = catalog.at(idx).span;
            if (span > remaining) continue;
            current.push_back(idx);
            self(self, remaining - span);
            current.pop_back();
        }
    };
    dfs(dfs, target_span);
    std::sort(out.begin(), out.end());
    return out;
}

bool QfFingerprint::same_type(const QfFingerprint& other) const {
    return over == other.over && bounds == other.bounds && adjacency == other.adjacency &&
           equality == other.equality && delta_atoms == other.delta_atoms &&
           epsilon_atoms == other.epsilon_atoms;
}

QfFingerprint qf_fingerprint(const Graph& g, const CycleCatalog& catalog,
                             std::span<const VertexId> over, VertexId subject,
                             const FingerprintBounds& bounds) {
    if (!g.has_vertex(subject)) {
        throw Error(ErrorKind::invalid_argument, "qf_fingerprint: subject outside graph");
    }
    for (VertexId a : over) {
        if (!g.has_vertex(a)) {
            throw Error(ErrorKind::invalid_argument, "qf_fingerprint: tuple vertex outside graph");
        }
    }
    if (bounds.max_cycle_size > catalog.max_vertices()) {
        throw Error(ErrorKind::invalid_argument,
                    "qf_fingerprint: cycle bound exceeds the catalog");
    }

    QfFingerprint out;
    out.over.assign(over.begin(), over.end());
    out.subject = subject;
    out.bounds = bounds;

    // Generated once at the larger of the two length bounds; use sites
    // filter down to their own bound.
    const std::uint32_t gen_len = std::max(bounds.max_delta_len, bounds.max_eps_total);
    std::map<std::uint32_t, std::vector<DeltaSequence>> sequences_by_span;
    auto sequences_for = [&](std::uint32_t span) -> const std::vector<DeltaSequence>& {
        auto it = sequences_by_span.find(span);
        if (it == sequences_by_span.end()) {
            it = sequences_by_span
                     .emplace(span, delta_sequences_with_span(catalog, bounds.max_cycle_size,
                                                              gen_len, span))
                     .first;
        }
        return it->second;
    };

    std::map<std::tuple<VertexId, VertexId, DeltaSequence>, bool> pdelta_memo;
    auto pdelta_holds = [&](VertexId from, VertexId to, const DeltaSequence& delta) {
        auto key = std::tuple(from, to, delta);
        auto it = pdelta_memo.find(key);
        if (it == pdelta_memo.end()) {
            it = pdelta_memo.emplace(key, eval_P_delta(g, catalog, delta, from, to).has_value())
                     .first;
        }
        return it->second;
    };

    auto dist_subject = bfs_from(g, subject);

    for (VertexId a : over) {
        out.adjacency.push_back(g.has_edge(subject, a) ? 1 : 0);
        out.equality.push_back(subject == a ? 1 : 0);
        std::vector<DeltaSequence> satisfied;
        if (dist_subject[a] != kUnreached) {
            for (const auto& delta : sequences_for(dist_subject[a])) {
                if (static_cast<std::uint32_t>(delta.size()) > bounds.max_delta_len) continue;
                if (pdelta_holds(subject, a, delta)) satisfied.push_back(delta);
            }
        }
        out.delta_atoms.push_back(std::move(satisfied));
    }

    // Y atoms with the subject in the witness-z slot, per ordered pair.
    std::vector<std::vector<LevelEmbedding>> copies_by_level;
    for (std::uint32_t level = 1; level <= bounds.max_level; ++level) {
        copies_by_level.push_back(enumerate_level_copies(g, level));
    }
    std::vector<std::vector<std::uint32_t>> dist_over;
    for (VertexId a : over) dist_over.push_back(bfs_from(g, a));

    for (std::size_t i = 0; i < over.size(); ++i) {
        for (std::size_t j = 0; j < over.size(); ++j) {
            std::set<EpsilonAtom> atoms;
            for (std::uint32_t level = 1; level <= bounds.max_level; ++level) {
                for (const auto& copy : copies_by_level[level - 1]) {
                    auto da = dist_over[i][copy[0]];
                    auto db = dist_over[j][copy[1]];
                    auto dc = dist_subject[copy[2]];
                    if (da == kUnreached || db == kUnreached || dc == kUnreached) continue;
                    for (const auto& d1 : sequences_for(da)) {
                        if (d1.size() > bounds.max_eps_total) continue;
                        if (!pdelta_holds(over[i], copy[0], d1)) continue;
                        for (const auto& d2 : sequences_for(db)) {
                            if (d1.size() + d2.size() > bounds.max_eps_total) continue;
                            if (!pdelta_holds(over[j], copy[1], d2)) continue;
                            for (const auto& d3 : sequences_for(dc)) {
                                if (d1.size() + d2.size() + d3.size() > bounds.max_eps_total) {
                                    continue;
                                }
                                if (!pdelta_holds(subject, copy[2], d3)) continue;
                                atoms.insert(EpsilonAtom{d1, d2, d3, level});
                            }
                        }
                    }
                }
            }
            out.epsilon_atoms.emplace_back(atoms.begin(), atoms.end());
        }
    }
    return out;
}

EmbedsResult embeds_bounded(const CycleCatalog& catalog, const DeltaSequence& d_prime,
                            const DeltaSequence& d, std::span<const CorpusEntry> corpus) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& entry = corpus[i];
        if (!eval_P_delta(entry.graph, catalog, d, entry.x, entry.y)) {
            throw Error(ErrorKind::invalid_argument,
                        "embeds_bounded: corpus instance " + std::to_string(i) +
                            " does not satisfy P_d");
        }
        if (!eval_P_delta(entry.graph, catalog, d_prime, entry.x, entry.y)) {
            return EmbedsResult{EmbedsResult::Verdict::refuted,
                                EmbedsResult::Reason::corpus_witness, i};
        }
    }
    if (d_prime.size() < d.size()) {
        return EmbedsResult{EmbedsResult::Verdict::refuted, EmbedsResult::Reason::length_law,
                            0};
    }
    return EmbedsResult{EmbedsResult::Verdict::consistent, EmbedsResult::Reason::none, 0};
}

bool PartialAutomorphism::complete() const {
    for (VertexId v : map) {
        if (v == kNoImage) return false;
    }
    return true;
}

std::size_t PartialAutomorphism::domain_size() const {
    std::size_t count = 0;
    for (VertexId v : map) {
        if (v != kNoImage) ++count;
    }
    return count;
}

std::optional<PartialAutomorphism> extend_triangle_map(const Graph& g,
                                                       const std::array<VertexId, 3>& source,
                                                       const std::array<VertexId, 3>& target) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (!g.has_edge(source[i], source[j])) {
                throw Error(ErrorKind::invalid_argument,
                            "extend_triangle_map: source is not a triangle");
            }
            if (!g.has_edge(target[i], target[j])) {
                throw Error(ErrorKind::invalid_argument,
                            "extend_triangle_map: target is not a triangle");
            }
        }
    }

    PartialAutomorphism out;
    out.map.assign(g.vertex_count(), kNoImage);
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<Edge> queue;
    std::set<Edge> queued;

    auto assign = [&](VertexId v, VertexId image) -> bool {
        if (out.map[v] != kNoImage) return out.map[v] == image;
        if (used[image]) return false;
        out.map[v] = image;
        used[image] = 1;
        for (VertexId nb : g.neighbors(v)) {
            if (out.map[nb] == kNoImage) continue;
            if (!g.has_edge(image, out.map[nb])) return false;  // edge not preserved
            Edge e(v, nb);
            if (queued.insert(e).second) queue.push_back(e);
        }
        return true;
    };

    for (int i = 0; i < 3; ++i) {
        if (!assign(source[i], target[i])) return std::nullopt;
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
        Edge e = queue[head];
        VertexId iu = out.map[e.u];
        VertexId iv = out.map[e.v];
        auto apexes = triangles_on_edge(g, e.u, e.v);
        auto image_apexes = triangles_on_edge(g, iu, iv);
        std::vector<VertexId> unmapped;
        for (VertexId w : apexes) {
            if (out.map[w] != kNoImage) {
                // Mapped apexes must land on apexes of the image edge.
                if (std::find(image_apexes.begin(), image_apexes.end(), out.map[w]) ==
                    image_apexes.end()) {
                    return std::nullopt;
                }
            } else {
                unmapped.push_back(w);
            }
        }
        std::vector<VertexId> available;
        for (VertexId w : image_apexes) {
            if (!used[w]) available.push_back(w);
        }
        if (unmapped.size() == 1 && available.size() == 1) {
            if (!assign(unmapped.front(), available.front())) return std::nullopt;
        } else if (!unmapped.empty() && available.empty()) {
            return std::nullopt;  // source apex with nowhere to go
        } else if (unmapped.empty() && !available.empty()) {
            out.frontier.push_back(e);
        } else if (!unmapped.empty()) {
            out.frontier.push_back(e);  // ambiguous: more than one on each side
        }
    }

    // Non-edges must be preserved on the mapped domain.
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (out.map[u] == kNoImage) continue;
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            if (out.map[v] == kNoImage) continue;
            if (g.has_edge(u, v) != g.has_edge(out.map[u], out.map[v])) return std::nullopt;
        }
    }
    return out;
}

std::vector<VertexId> solve_query(const Graph& g, const CycleCatalog& catalog,
                                  std::span<const QueryAtom> atoms) {
    for (const auto& atom : atoms) {
        if (!g.has_vertex(atom.param)) {
            throw Error(ErrorKind::invalid_argument, "solve_query: parameter outside graph");
        }
        if (atom.kind == QueryAtom::Kind::p_c && atom.delta.size() != 1) {
            throw Error(ErrorKind::invalid_argument,
                        "solve_query: a P_C atom takes exactly one cycle type");
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool all = true;
        for (const auto& atom : atoms) {
            bool holds = false;
            if (atom.kind == QueryAtom::Kind::p_c) {
                holds = eval_P_C(g, catalog, atom.delta.front(), v, atom.param).has_value();
            } else {
                holds = eval_P_delta(g, catalog, atom.delta, v, atom.param).has_value();
            }
            if (!holds) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(v);
    }
    return out;
}

}  // namespace farey
