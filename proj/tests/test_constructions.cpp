#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptl/constructions.hpp"
#include "ptl/cycles.hpp"
#include "ptl/tri_blocks.hpp"

using namespace ptl;

TEST_CASE("extremal family edge counts") {
    CHECK(extremal_c3c5(14).m() == 33);
    CHECK(extremal_c3c5(15).m() == 35);
    CHECK(extremal_c3c5(16).m() == 38);
    for (int n = 7; n <= 300; ++n) {
        PlaneMap m = extremal_c3c5(n);
        CHECK(m.n() == n);
        CHECK(int64_t(m.m()) == (8LL * n - 13) / 3);
        CHECK(m.euler_ok());
    }
    CHECK_THROWS_AS(extremal_c3c5(6), TooSmall);
}

TEST_CASE("extremal family is C3+C5-free") {
    CyclePattern p = pattern_c3c5();
    for (int n = 7; n <= 60; ++n) CHECK(is_free(extremal_c3c5(n).graph(), p));
}

TEST_CASE("wheel and fan") {
    PlaneMap w5 = wheel(5);
    CHECK(w5.m() == 8);
    CHECK(w5.f3() == 4);
    CHECK(w5.euler_ok());
    PlaneMap f6 = fan(6);
    CHECK(f6.m() == 9);
    CHECK(f6.f3() == 4);
    CHECK(is_isomorphic(fan(3).graph(), cycle_graph(3)));
    CHECK(is_isomorphic(wheel(4).graph(), complete_graph(4)));
    for (int k = 4; k <= 12; ++k) {
        CHECK(wheel(k).m() == 2 * (k - 1));
        CHECK(fan(k).m() == 2 * k - 3);
        CHECK(wheel(k).euler_ok());
        CHECK(fan(k).euler_ok());
        CHECK(decompose(wheel(k)).size() == 1);
        CHECK(decompose(fan(k)).size() == 1);
    }
    CHECK_THROWS_AS(wheel(3), TooSmall);
    CHECK_THROWS_AS(fan(2), TooSmall);
}

TEST_CASE("apex joins over linear forests") {
    PlaneMap m = apex2_over_linear_forest({3}, true);
    CHECK(m.n() == 5);
    CHECK(m.m() == 9);
    CHECK(m.euler_ok());

    PlaneMap ext = apex2_over_linear_forest({3, 3, 3, 3}, true);
    CHECK(is_isomorphic(ext.graph(), extremal_c3c5(14).graph()));

    PlaneMap tri = apex2_over_linear_forest({1}, true);
    CHECK(is_isomorphic(tri.graph(), cycle_graph(3)));

    PlaneMap no_edge = apex2_over_linear_forest({3, 2}, false);
    CHECK(no_edge.m() == 1 + 2 * 5 + 3 - 1);  // no apex edge
    CHECK_FALSE(no_edge.graph().has_edge(0, 1));
    CHECK(no_edge.euler_ok());

    CHECK_THROWS_AS(apex2_over_linear_forest({0}, true), std::invalid_argument);
}

TEST_CASE("block structure of the extremal family") {
    for (int n : {14, 17, 20}) {
        PlaneMap cut = extremal_c3c5(n).without_edge(0, 1);
        auto blocks = decompose(cut);
        CHECK(int(blocks.size()) == (n - 2) / 3);
        PlaneCode w5 = plane_code(wheel(5));
        for (auto& b : blocks) {
            CHECK(b.v() == 5);
            CHECK(b.e() == 8);
            CHECK(b.f3_in_host == 4);
            CHECK(plane_code(b.sub_map) == w5);
        }
    }
}

TEST_CASE("no single edge can be added to the extremal graph") {
    CyclePattern p = pattern_c3c5();
    for (int n = 10; n <= 60; ++n) {
        Graph g = extremal_c3c5(n).graph();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph h = g;
                h.add_edge(u, v);
                bool still_free = is_free(h, p);
                if (still_free) CHECK_FALSE(is_planar(h));
            }
    }
}
