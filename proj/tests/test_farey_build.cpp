#include <doctest.h>

#include "farey/farey_build.hpp"
#include "farey/graph.hpp"
#include "farey/kclass.hpp"

using namespace farey;

TEST_SUITE("farey_build") {

TEST_CASE("level 1 is the initial lozenge") {
    auto f1 = build_level(1);
    CHECK(f1.graph().vertex_count() == 4);
    CHECK(f1.graph().edge_count() == 5);
    CHECK(f1.color(0, 1) == EdgeColor::black);
    std::size_t blue = 0;
    for (const Edge& e : f1.graph().edges()) {
        if (f1.color(e.u, e.v) == EdgeColor::blue) ++blue;
    }
    CHECK(blue == 4);
    CHECK(f1.blue_edges() == std::vector<Edge>{{0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("level 2 counts and structure") {
    auto f2 = build_level(2);
    CHECK(f2.graph().vertex_count() == 8);
    CHECK(f2.graph().edge_count() == 13);
    CHECK(f2.birth_level(4) == 2);
    CHECK(f2.parent_edge(4) == Edge(0, 2));
    CHECK(f2.parent_edge(5) == Edge(1, 2));
    CHECK(f2.parent_edge(6) == Edge(0, 3));
    CHECK(f2.parent_edge(7) == Edge(1, 3));
    CHECK_FALSE(f2.parent_edge(2).has_value());
    CHECK(f2.color(0, 2) == EdgeColor::black);
    CHECK(f2.color(0, 4) == EdgeColor::blue);
}

TEST_CASE("level caps and bad levels") {
    CHECK_THROWS_AS(build_level(0), Error);
    CHECK_THROWS_AS(build_level(21), Error);
    CHECK_NOTHROW(build_level(10, 10));
}

TEST_CASE("closed-form counts match the constructor for n = 1..12") {
    for (std::uint32_t n = 1; n <= 12; ++n) {
        auto f = build_level(n);
        auto counts = level_counts(n);
        CHECK(counts.vertices == f.graph().vertex_count());
        CHECK(counts.edges == f.graph().edge_count());
        CHECK(counts.blue_edges == f.blue_edge_count());
    }
    CHECK(level_counts(1) == LevelCounts{4, 5, 4});
    CHECK(level_counts(2) == LevelCounts{8, 13, 8});
    CHECK(level_counts(5) == LevelCounts{64, 125, 64});
    CHECK(level_counts(12) == LevelCounts{8192, 16381, 8192});
    CHECK_THROWS_AS(level_counts(0), Error);
    CHECK_THROWS_AS(level_counts(62), Error);
}

TEST_CASE("black edges carry two triangles, blue edges one, for n <= 8") {
    for (std::uint32_t n = 1; n <= 8; ++n) {
        auto f = build_level(n);
        for (const Edge& e : f.graph().edges()) {
            auto apexes = triangles_on_edge(f.graph(), e.u, e.v).size();
            if (f.color(e.u, e.v) == EdgeColor::black) {
                CHECK(apexes == 2);
            } else {
                CHECK(apexes == 1);
            }
        }
    }
}

TEST_CASE("vertices born at level m are removable at birth") {
    for (std::uint32_t n = 2; n <= 6; ++n) {
        auto f = build_level(n);
        auto view = union_limit_view(f, n);  // identity
        for (VertexId v = 0; v < f.graph().vertex_count(); ++v) {
            if (f.birth_level(v) != n) continue;
            CHECK(valency(view.graph(), v) == 2);
            auto parent = f.parent_edge(v);
            REQUIRE(parent.has_value());
            CHECK(view.graph().has_edge(parent->u, parent->v));
        }
    }
}

TEST_CASE("union limit view restores earlier levels exactly") {
    auto f3 = build_level(3);
    auto v1 = union_limit_view(f3, 1);
    auto f1 = build_level(1);
    CHECK(v1.graph() == f1.graph());
    CHECK(v1.level() == 1);
    CHECK(v1.color(0, 2) == EdgeColor::blue);

    auto v3 = union_limit_view(f3, 3);
    CHECK(v3.graph() == f3.graph());

    auto f5 = build_level(5);
    auto v2 = union_limit_view(f5, 2);
    auto f2 = build_level(2);
    CHECK(v2.graph() == f2.graph());
    for (VertexId v = 0; v < v2.graph().vertex_count(); ++v) {
        CHECK(v2.birth_level(v) == f2.birth_level(v));
        CHECK(v2.parent_edge(v) == f2.parent_edge(v));
    }

    CHECK_THROWS_AS(union_limit_view(f3, 0), Error);
    CHECK_THROWS_AS(union_limit_view(f3, 4), Error);
}

TEST_CASE("prefixes of the id order induce the lower levels") {
    auto f4 = build_level(4);
    for (std::uint32_t m = 1; m <= 4; ++m) {
        auto expected = build_level(m);
        std::vector<VertexId> prefix;
        for (VertexId v = 0; v < expected.graph().vertex_count(); ++v) prefix.push_back(v);
        auto induced = induced_subgraph(f4.graph(), prefix);
        CHECK(induced.graph == expected.graph());
    }
}

TEST_CASE("F_n stays connected after deleting any single vertex, n <= 6") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const Graph& g = build_level(n).graph();
        for (VertexId drop = 0; drop < g.vertex_count(); ++drop) {
            std::vector<VertexId> rest;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (v != drop) rest.push_back(v);
            }
            CHECK(is_connected(induced_subgraph(g, rest).graph));
        }
    }
}

}  // TEST_SUITE
