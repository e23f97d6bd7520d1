#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ptl/constructions.hpp"
#include "ptl/oracle.hpp"
#include "ptl/plane_map.hpp"
#include "test_support.hpp"

using namespace ptl;
using namespace ptl::testing;

namespace {

PlaneMap cycle_map(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return PlaneMap::from_rotation(rot);
}

// W5 with an extra vertex joined to two adjacent rim vertices
Graph w5_plus_ear() {
    Graph g = join(complete_graph(1), cycle_graph(4));  // hub 0, rim 1..4
    Graph h(6);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(5, 1);
    h.add_edge(5, 2);
    return h;
}

}  // namespace

TEST_CASE("rotation validation") {
    CHECK_THROWS_AS(PlaneMap::from_rotation({{1}, {0}, {}}), MalformedRotation);  // disconnected
    CHECK_THROWS_AS(PlaneMap::from_rotation({{1}, {}}), MalformedRotation);       // one-sided
    CHECK_THROWS_AS(PlaneMap::from_rotation({{1, 1}, {0, 0}}), MalformedRotation);
    CHECK_THROWS_AS(PlaneMap::from_rotation({{0}}), MalformedRotation);  // loop
}

TEST_CASE("faces of basic maps") {
    PlaneMap k4 = wheel(4);
    CHECK(k4.face_count() == 4);
    CHECK(k4.profile().at(3) == 4);
    CHECK(k4.euler_ok());

    PlaneMap c5 = cycle_map(5);
    CHECK(c5.face_count() == 2);
    CHECK(c5.profile().at(5) == 2);

    // a tree: one face of length 2e
    PlaneMap star = PlaneMap::from_rotation({{1, 2, 3}, {0}, {0}, {0}});
    CHECK(star.face_count() == 1);
    CHECK(star.profile().at(6) == 1);

    // sum i*f_i == 2e on random maps
    std::mt19937 rng(5);
    for (int it = 0; it < 40; ++it) {
        PlaneMap m = random_plane_map(rng, 4 + int(rng() % 14));
        int sum = 0;
        for (auto& [len, cnt] : m.profile().count) sum += len * cnt;
        CHECK(sum == 2 * m.m());
        CHECK(m.euler_ok());
    }
}

TEST_CASE("embed_planar") {
    CHECK_FALSE(embed_planar(complete_graph(5)));
    CHECK_FALSE(embed_planar(join(empty_graph(3), empty_graph(3))));  // K3,3

    auto k4 = embed_planar(complete_graph(4));
    REQUIRE(k4);
    CHECK(k4->face_count() == 4);

    // K2 v (2 P3): join of K2 with the disjoint union of two paths
    Graph forest(6);
    forest.add_edge(0, 1);
    forest.add_edge(1, 2);
    forest.add_edge(3, 4);
    forest.add_edge(4, 5);
    auto m = embed_planar(join(complete_graph(2), forest));
    REQUIRE(m);
    CHECK(m->euler_ok());

    CHECK_THROWS_AS(embed_planar(empty_graph(3)), std::invalid_argument);  // disconnected

    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
        PlaneMap r = random_plane_map(rng, 5 + int(rng() % 12));
        auto e = embed_planar(r.graph());
        REQUIRE(e);
        CHECK(e->euler_ok());
        CHECK(e->n() - e->m() + e->face_count() == 2);
    }

    // nonplanar spot checks
    Graph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(5 + i, 5 + (i + 2) % 5);
        pet.add_edge(i, 5 + i);
    }
    CHECK_FALSE(embed_planar(pet));
    CHECK(is_planar(empty_graph(7)));
    Graph k5_plus_iso(7);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5_plus_iso.add_edge(u, v);
    CHECK_FALSE(is_planar(k5_plus_iso));
}

TEST_CASE("all_embeddings") {
    CHECK(all_embeddings(complete_graph(4)).size() == 1);
    CHECK(all_embeddings(cycle_graph(4)).size() == 1);

    auto embs = all_embeddings(w5_plus_ear());
    CHECK(embs.size() >= 2);
    std::set<std::map<int, int>> profiles;
    for (auto& m : embs) profiles.insert(m.profile().count);
    CHECK(profiles.size() >= 2);

    CHECK_THROWS_AS(all_embeddings(complete_graph(4), 3), BoundExceeded);

    // cross-check with embed_planar on all connected graphs with n <= 6
    GenOptions opts;
    opts.connected_only = true;
    for (int n = 2; n <= 6; ++n) {
        generate_graphs(n, opts, [&](const Graph& g) {
            bool planar = embed_planar(g).has_value();
            CHECK(planar == !all_embeddings(g).empty());
            return true;
        });
    }
}

TEST_CASE("plane_code identifies relabelings and reflections") {
    PlaneMap f5 = fan(5);
    std::mt19937 rng(3);
    CHECK(plane_code(relabel_map(f5, random_permutation(rng, 5))) == plane_code(f5));
    CHECK(plane_code(mirror_map(f5)) == plane_code(f5));

    PlaneMap k4 = wheel(4);
    CHECK(plane_code(relabel_map(k4, {3, 1, 0, 2})) == plane_code(k4));

    // the two embedding classes of W5-plus-ear get different codes
    auto embs = all_embeddings(w5_plus_ear());
    std::set<PlaneCode> codes;
    for (auto& m : embs) codes.insert(plane_code(m));
    CHECK(codes.size() == embs.size());  // already deduplicated
    CHECK(codes.size() >= 2);
}

TEST_CASE("insert_vertex_in_face") {
    PlaneMap k4 = wheel(4);
    // find a 3-face and join a new vertex to all corners: K5 minus an edge
    auto verts = k4.face_vertices(0);
    PlaneMap k5e = k4.insert_vertex_in_face(0, verts);
    CHECK(k5e.n() == 5);
    CHECK(k5e.m() == 9);
    CHECK(k5e.profile().at(3) == 6);
    CHECK(k5e.euler_ok());

    // W5: insert into the rim quad, joined to 2 consecutive rim vertices
    PlaneMap w5 = wheel(5);
    int quad = -1;
    for (int f = 0; f < w5.face_count(); ++f)
        if (w5.face_walks()[f].size() == 4) quad = f;
    REQUIRE(quad >= 0);
    auto qverts = w5.face_vertices(quad);
    PlaneMap bigger = w5.insert_vertex_in_face(quad, {qverts[0], qverts[1]});
    CHECK(bigger.n() == 6);
    CHECK(bigger.m() == 10);
    CHECK(bigger.euler_ok());

    // pendant attach: face count unchanged
    PlaneMap pend = w5.insert_vertex_in_face(quad, {qverts[2]});
    CHECK(pend.face_count() == w5.face_count());
    CHECK(pend.euler_ok());

    // non-consecutive attach rejected (opposite corners of the quad)
    CHECK_THROWS_AS(w5.insert_vertex_in_face(quad, {qverts[0], qverts[2]}), NotConsecutive);

    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        PlaneMap m = random_plane_map(rng, 12);
        CHECK(m.euler_ok());  // genus preserved by construction
    }
}

TEST_CASE("without_edge and restrict_edges") {
    PlaneMap ext = extremal_c3c5(14);
    PlaneMap cut = ext.without_edge(0, 1);
    CHECK(cut.m() == ext.m() - 1);
    CHECK(cut.euler_ok());

    std::vector<bool> keep(cut.m(), false);
    // keep the edges at vertex 2 plus its path edge: a connected star-ish piece
    auto es = cut.graph().edges();
    for (size_t i = 0; i < es.size(); ++i)
        if (es[i].first == 2 || es[i].second == 2) keep[i] = true;
    auto [sub, to_host] = cut.restrict_edges(keep);
    CHECK(sub.euler_ok());
    CHECK(sub.m() == cut.graph().degree(2));
}

TEST_CASE("discharge_bound") {
    CHECK(discharge_bound(14, Rat(1, 2), Rat(0)) == Rat(32));
    CHECK(discharge_bound(14, Rat(0), Rat(13)) == Rat(61, 2));  // (5n-9)/2 at n=14
    for (int64_t n : {100, 295660, 1000000}) {
        Rat alpha = Rat(4 * n - 458, 15555);
        Rat lhs = discharge_bound(n, Rat(2, 5), Rat(1037) * alpha + Rat(30));
        CHECK(lhs == Rat(5, 8) * (Rat(4 * n) + Rat(1037) * alpha + Rat(22)));
        CHECK(lhs == Rat(8 * n - 16, 3));
    }
    CHECK_THROWS_AS(discharge_bound(10, Rat(2), Rat(0)), DivergentBound);
    CHECK_THROWS_AS(discharge_bound(10, Rat(7, 3), Rat(0)), DivergentBound);
    for (int64_t n = 1; n <= 2000; ++n)
        CHECK(discharge_bound(n, Rat(1, 2), Rat(0)) < Rat(8 * n - 13, 3));
}
