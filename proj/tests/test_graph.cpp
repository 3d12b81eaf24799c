#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "farey/canonical.hpp"
#include "farey/farey_build.hpp"
#include "farey/graph.hpp"
#include "support/corpus.hpp"

using namespace farey;
using namespace farey::testing;

TEST_SUITE("graph") {

TEST_CASE("construction validates and deduplicates") {
    Graph g = lozenge();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 5);

    Graph single(1, std::initializer_list<std::pair<VertexId, VertexId>>{});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), Error);

    Graph dup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("valency") {
    Graph g = lozenge();
    CHECK(valency(g, 2) == 2);
    CHECK(valency(g, 0) == 3);
    Graph single(1, std::initializer_list<std::pair<VertexId, VertexId>>{});
    CHECK(valency(single, 0) == 0);
    CHECK_THROWS_AS(valency(g, 9), Error);
}

TEST_CASE("distance") {
    Graph g = lozenge();
    CHECK(distance(g, 0, 1) == 1);
    CHECK(distance(g, 2, 3) == 2);
    Graph two(2, std::initializer_list<std::pair<VertexId, VertexId>>{});
    CHECK(!distance(two, 0, 1).has_value());
}

TEST_CASE("geodesics on the lozenge") {
    Graph g = lozenge();
    auto set = geodesics(g, 2, 3);
    REQUIRE(set.reachable);
    REQUIRE(set.paths.size() == 2);
    CHECK(set.paths[0].vertices == std::vector<VertexId>{2, 0, 3});
    CHECK(set.paths[1].vertices == std::vector<VertexId>{2, 1, 3});

    auto direct = geodesics(g, 0, 1);
    REQUIRE(direct.paths.size() == 1);
    CHECK(direct.paths[0].vertices == std::vector<VertexId>{0, 1});

    Graph two(2, std::initializer_list<std::pair<VertexId, VertexId>>{});
    CHECK_FALSE(geodesics(two, 0, 1).reachable);
}

TEST_CASE("geodesics match the brute-force path oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, trial % 2 == 0 ? 10 : 12, 0.3);
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
                auto dist = distance(g, x, y);
                auto set = geodesics(g, x, y);
                if (!dist) {
                    CHECK_FALSE(set.reachable);
                    continue;
                }
                auto expected = brute_force_paths(g, x, y, *dist);
                REQUIRE(set.reachable);
                CHECK(set.paths == expected);
            }
        }
    }
}

TEST_CASE("geodesics in F_4 fan out through at most three second vertices") {
    auto f4 = build_level(4);
    const Graph& g = f4.graph();
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        for (VertexId y = 0; y < g.vertex_count(); ++y) {
            if (x == y) continue;
            auto set = geodesics(g, x, y);
            REQUIRE(set.reachable);
            std::set<VertexId> second;
            for (const Path& p : set.paths) {
                if (p.vertices.size() >= 2) second.insert(p.vertices[1]);
            }
            CHECK(second.size() <= 3);
        }
    }
}

TEST_CASE("triangles_on_edge") {
    auto f1 = build_level(1);
    CHECK(triangles_on_edge(f1.graph(), 0, 1) == std::vector<VertexId>{2, 3});
    CHECK(triangles_on_edge(f1.graph(), 0, 2) == std::vector<VertexId>{1});
    auto f2 = build_level(2);
    CHECK(triangles_on_edge(f2.graph(), 0, 2) == std::vector<VertexId>{1, 4});
    CHECK_THROWS_AS(triangles_on_edge(f1.graph(), 2, 3), Error);
}

TEST_CASE("simple cycles through an edge") {
    auto f1 = build_level(1);
    auto triangles = simple_cycles_through_edge(f1.graph(), 0, 1, 3);
    CHECK(triangles.size() == 2);

    auto up_to_4 = simple_cycles_through_edge(f1.graph(), 0, 1, 4);
    CHECK(up_to_4.size() == 3);
    bool found_square = false;
    for (const Cycle& c : up_to_4) {
        if (c.length() == 4) {
            found_square = true;
            CHECK(c == Cycle::from_sequence({0, 2, 1, 3}));
        }
    }
    CHECK(found_square);

    CHECK_THROWS_AS(simple_cycles_through_edge(f1.graph(), 2, 3, 5), Error);
    CHECK_THROWS_AS(simple_cycles_through_edge(f1.graph(), 0, 1, 2), Error);
}

// Independent oracle: enumerate all bounded simple cycles through both
// endpoints by blind DFS over closed walks, no pruning.
static std::set<Cycle> oracle_cycles(const Graph& g, VertexId u, VertexId v,
                                     std::uint32_t max_len) {
    std::set<Cycle> out;
    std::vector<VertexId> current{u};
    std::vector<char> used(g.vertex_count(), 0);
    used[u] = 1;
    auto dfs = [&](auto&& self, VertexId at) -> void {
        for (VertexId next : g.neighbors(at)) {
            if (next == u && current.size() >= 3 &&
                std::find(current.begin(), current.end(), v) != current.end()) {
                out.insert(Cycle::from_sequence(current));
            }
            if (used[next] || current.size() >= max_len) continue;
            used[next] = 1;
            current.push_back(next);
            self(self, next);
            current.pop_back();
            used[next] = 0;
        }
    };
    dfs(dfs, u);
    return out;
}

TEST_CASE("cycle enumeration matches the unpruned oracle on F_2") {
    auto f2 = build_level(2);
    const Graph& g = f2.graph();
    auto got = simple_cycles_through_edge(g, 0, 1, 6);
    auto expected = oracle_cycles(g, 0, 1, 6);
    CHECK(got.size() == expected.size());
    for (const Cycle& c : got) CHECK(expected.count(c) == 1);
}

TEST_CASE("triangles agree with 3-cycles on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 9, 0.35);
        for (const Edge& e : g.edges()) {
            auto apexes = triangles_on_edge(g, e.u, e.v);
            auto cycles = simple_cycles_through_edge(g, e.u, e.v, 3);
            CHECK(apexes.size() == cycles.size());
        }
    }
}

TEST_CASE("induced subgraphs") {
    auto f1 = build_level(1);
    auto tri = induced_subgraph(f1.graph(), std::vector<VertexId>{0, 1, 2});
    CHECK(tri.graph.vertex_count() == 3);
    CHECK(tri.graph.edge_count() == 3);

    auto isolated = induced_subgraph(f1.graph(), std::vector<VertexId>{2, 3});
    CHECK(isolated.graph.edge_count() == 0);

    auto f2 = build_level(2);
    std::vector<VertexId> first_four{0, 1, 2, 3};
    auto back = induced_subgraph(f2.graph(), first_four);
    CHECK(back.graph == f1.graph());
    CHECK(back.new_of_old(3) == 3);
    CHECK_THROWS_AS(induced_subgraph(f1.graph(), std::vector<VertexId>{9}), Error);
}

TEST_CASE("distance is a metric on F_n components") {
    for (std::uint32_t n = 1; n <= 5; ++n) {
        const Graph& g = build_level(n).graph();
        const auto count = g.vertex_count();
        std::vector<std::vector<std::uint32_t>> d(count);
        for (VertexId x = 0; x < count; ++x) {
            d[x].resize(count);
            for (VertexId y = 0; y < count; ++y) d[x][y] = *distance(g, x, y);
        }
        for (VertexId x = 0; x < count; ++x) {
            CHECK(d[x][x] == 0);
            for (VertexId y = 0; y < count; ++y) {
                CHECK(d[x][y] == d[y][x]);
                for (VertexId z = 0; z < count; ++z) {
                    CHECK(d[x][z] <= d[x][y] + d[y][z]);
                }
            }
        }
    }
}

TEST_CASE("canonical form on the lozenge") {
    Graph g = lozenge();
    auto base = canonical_form(g);
    std::vector<VertexId> perm{2, 3, 0, 1};
    auto relabeled = permute_graph(g, perm);
    CHECK(canonical_form(relabeled) == base);

    CHECK(canonical_form(chordless_cycle(4)) != base);

    std::vector<VertexId> apex_pins{2, 3};
    std::vector<VertexId> shared_pins{0, 1};
    CHECK(canonical_form(g, apex_pins) != canonical_form(g, shared_pins));
}

TEST_CASE("canonical form cap") {
    Graph big(17, std::initializer_list<std::pair<VertexId, VertexId>>{});
    CHECK_THROWS_AS(canonical_form(big), Error);
    CHECK_NOTHROW(canonical_form(big, {}, 20));
}

TEST_CASE("find_isomorphism basics") {
    auto f1 = build_level(1).graph();
    std::vector<std::pair<VertexId, VertexId>> swap_pins{{0, 1}, {1, 0}};
    auto swapped = find_isomorphism(f1, f1, swap_pins);
    REQUIRE(swapped.has_value());
    CHECK((*swapped)[0] == 1);
    CHECK((*swapped)[1] == 0);

    CHECK_FALSE(find_isomorphism(complete_graph(3), lozenge()).has_value());

    std::vector<std::pair<VertexId, VertexId>> identity_pins{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    auto identity = find_isomorphism(f1, f1, identity_pins);
    REQUIRE(identity.has_value());
    CHECK(*identity == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("canonical codes agree with isomorphism on every graph of up to 6 vertices") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        auto graphs = all_graphs(n);
        // Bucket by canonical code; codes must match exactly the
        // isomorphism classes found by the independent search.
        std::map<std::vector<std::uint8_t>, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            buckets[canonical_form(graphs[i]).code].push_back(i);
        }
        std::vector<std::size_t> representatives;
        for (const auto& [code, members] : buckets) {
            representatives.push_back(members.front());
            for (std::size_t member : members) {
                CHECK(find_isomorphism(graphs[members.front()], graphs[member]).has_value());
            }
        }
        for (std::size_t i = 0; i < representatives.size(); ++i) {
            for (std::size_t j = i + 1; j < representatives.size(); ++j) {
                CHECK_FALSE(find_isomorphism(graphs[representatives[i]],
                                             graphs[representatives[j]])
                                .has_value());
            }
        }
    }
}

TEST_CASE("pinned canonical codes separate pin orbits") {
    // In the lozenge, pinning the apexes is not equivalent to pinning the
    // shared edge; brute-force pinned isomorphism confirms.
    Graph g = lozenge();
    std::vector<std::pair<VertexId, VertexId>> cross_pins{{2, 0}, {3, 1}};
    CHECK_FALSE(find_isomorphism(g, g, cross_pins).has_value());
}

}  // TEST_SUITE
