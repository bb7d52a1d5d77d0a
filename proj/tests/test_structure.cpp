#include <doctest.h>

#include "edgechroma/generators.hpp"
#include "edgechroma/structure.hpp"
#include "helpers.hpp"

using namespace ec;

TEST_CASE("core_view on the fixtures") {
    CoreView s = core_view(star(5));
    CHECK(s.core.vertex_count() == 1);
    CHECK(s.core.edge_count() == 0);
    CHECK(s.pendant_neighbors[0].size() == 5);

    CoreView c9 = core_view(cycle(9));
    CHECK(c9.core == cycle(9));

    CoreView p4 = core_view(path(4));
    CHECK(p4.core == path(2));  // both leaves go in one pass
    CHECK(p4.core_to_old == std::vector<int>({1, 2}));
}

TEST_CASE("core need not be 1-vertex-free (no idempotence assumed)") {
    // a path of length 3 hanging off a triangle: one pass leaves a new leaf
    Graph g = Graph::from_edges(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(0, 3),
                                    Edge(3, 4), Edge(4, 5)});
    CoreView cv = core_view(g);
    CHECK(cv.core.vertex_count() == 5);
    int mapped = cv.old_to_core[4];
    CHECK(degree(cv.core, mapped) == 1);
}

TEST_CASE("find_threads on constructions") {
    Graph k4sub = subdivide(complete(4), Edge(0, 1), 3);
    ThreadsResult t = find_threads(core_view(k4sub).core);
    REQUIRE(t.threads.size() == 1);
    CHECK(t.threads[0].length() == 3);
    CHECK(t.cycle_components.empty());

    CHECK(find_threads(complete(4)).threads.empty());

    // two K_4's joined by a 2-thread
    std::vector<Edge> es;
    auto addK4 = [&](int base) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) es.emplace_back(base + i, base + j);
    };
    addK4(0);
    addK4(4);
    es.emplace_back(0, 8);
    es.emplace_back(8, 9);
    es.emplace_back(9, 4);
    Graph joined = Graph::from_edges(10, es);
    ThreadsResult tj = find_threads(joined);
    REQUIRE(tj.threads.size() == 1);
    CHECK(tj.threads[0].length() == 2);
    CHECK(tj.threads[0].u1 != tj.threads[0].u2);

    // pure cycle components are reported separately
    ThreadsResult tc = find_threads(cycle(7));
    CHECK(tc.threads.empty());
    REQUIRE(tc.cycle_components.size() == 1);
    CHECK(tc.cycle_components[0].size() == 7);
}

TEST_CASE("coincident-end threads count twice at their end") {
    // two 2-vertex "ears" 0-1-2-0 and 0-3-4-0 at the single 4-vertex 0
    Graph rho = Graph::from_edges(5, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(0, 3),
                                      Edge(3, 4), Edge(0, 4)});
    StructureInfo info = classify(rho);
    REQUIRE(info.threads.threads.size() == 2);
    for (const Thread& t : info.threads.threads) {
        CHECK(t.u1 == 0);
        CHECK(t.u2 == 0);
        CHECK(t.length() == 2);
    }
    CHECK(info.l(0, 2) == 4);  // both incidences of both threads
}

TEST_CASE("vertex classification table") {
    // terrible 3-vertex: two 2-neighbors
    // 0 is 3-vertex adjacent to 1,2 (2-vertices) and 3 (4-vertex)
    Graph g = Graph::from_edges(9, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 4),
                                    Edge(2, 4), Edge(3, 4), Edge(3, 5), Edge(3, 6),
                                    Edge(4, 7), Edge(5, 6), Edge(5, 7), Edge(6, 7),
                                    Edge(5, 8), Edge(6, 8)});
    StructureInfo info = classify(g);
    CHECK(degree(g, 0) == 3);
    CHECK(info.cls[0] == VertexClass::ThreeTerrible);
    // 1 is a 2-vertex with a terrible 3-neighbor -> poor
    CHECK(info.cls[1] == VertexClass::TwoPoor);

    // every vertex of C7 v I2 (its own core) is 4+
    Graph j = cycle_join_I2(7);
    StructureInfo ji = classify(j);
    for (int v = 0; v < j.vertex_count(); ++v) CHECK(ji.cls[v] == VertexClass::FourPlus);
}

TEST_CASE("2-vertex poor via 2-neighbor, bad definitions differ") {
    // path of two 2-vertices between 3+-vertices: both interiors poor
    std::vector<Edge> es;
    auto addK4 = [&](int base) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) es.emplace_back(base + i, base + j);
    };
    addK4(0);
    addK4(4);
    es.emplace_back(0, 8);
    es.emplace_back(8, 9);
    es.emplace_back(9, 4);
    Graph joined = Graph::from_edges(10, es);
    StructureInfo info = classify(joined);
    CHECK(info.cls[8] == VertexClass::TwoPoor);
    CHECK(info.cls[9] == VertexClass::TwoPoor);

    // a 3-vertex with two 1-threads is BAD_8_3; in 14/5 vocabulary it is terrible
    Graph b = Graph::from_edges(
        9, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 4), Edge(2, 5), Edge(3, 4),
            Edge(3, 5), Edge(4, 6), Edge(5, 6), Edge(6, 7), Edge(6, 8), Edge(7, 8)});
    StructureInfo bi = classify(b);
    REQUIRE(degree(b, 0) == 3);
    if (bi.bad83[0]) CHECK(bi.cls[0] == VertexClass::ThreeTerrible);
}

TEST_CASE("classification partitions and degree consistency") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = testutil::random_connected(12, static_cast<int>(seed % 9), seed + 4);
        StructureInfo info = classify(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            int d = degree(g, v);
            VertexClass c = info.cls[v];
            if (c == VertexClass::TwoPoor || c == VertexClass::TwoNonpoor) CHECK(d == 2);
            if (c == VertexClass::ThreeGood || c == VertexClass::ThreeBad ||
                c == VertexClass::ThreeTerrible)
                CHECK(d == 3);
            if (c == VertexClass::FourPlus) CHECK(d >= 4);
            if (d == 2)
                CHECK((c == VertexClass::TwoPoor || c == VertexClass::TwoNonpoor));
        }
        // thread end-slot counting: sum of l_i(v) equals the number of thread
        // incidences at v
        std::vector<int> slots(g.vertex_count(), 0);
        for (const Thread& t : info.threads.threads) {
            ++slots[t.u1];
            ++slots[t.u2];
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            int total = 0;
            for (auto [len, cnt] : info.li[v]) total += cnt;
            CHECK(total == slots[v]);
        }
    }
}

TEST_CASE("conclusion checkers accept the clean fixtures and name failures") {
    CHECK(check_conclusions_8_3(complete(4)) == "");
    CHECK(check_conclusions_14_5(cycle_join_I2(7)) == "");
    CHECK(check_conclusions_8_3(cycle(9)) != "");           // pure cycle core
    CHECK(check_conclusions_14_5(cycle(9)) != "");          // max degree <= 3
    CHECK(check_conclusions_8_3(subdivide(complete(4), Edge(0, 1), 3)) != "");
    Graph p4 = path(4);
    CHECK(check_conclusions_8_3(p4) != "");  // degree-1 vertices
}
