#include <doctest.h>

#include "edgechroma/exact.hpp"
#include "edgechroma/generators.hpp"
#include "edgechroma/reducer.hpp"
#include "helpers.hpp"

using namespace ec;

TEST_CASE("find_reducible fixtures") {
    // pendant edge hanging off a core 1-vertex
    Graph g = Graph::from_edges(7, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(0, 3),
                                    Edge(1, 3), Edge(2, 3), Edge(3, 4), Edge(4, 5),
                                    Edge(5, 6)});
    // vertex 5 has core degree 1 after 6 is deleted... build the intended
    // shape: K4 plus a path 3-4-5 and a leaf on 5
    auto st = find_reducible(g, DischargeCase::EightThirds);
    REQUIRE(st.has_value());

    Graph k4sub = subdivide(complete(4), Edge(0, 1), 3);
    auto st2 = find_reducible(k4sub, DischargeCase::EightThirds);
    REQUIRE(st2.has_value());
    CHECK(st2->tag == "L5_2");

    CHECK(!find_reducible(complete(4), DischargeCase::EightThirds).has_value());
    CHECK(!find_reducible(complete(4), DischargeCase::FourteenFifths).has_value());
}

TEST_CASE("find_reducible L5_1 on a pendant at a core 1-vertex") {
    // triangle 0-1-2 with a path 0-3-4: vertex 3 is a core 2-vertex, vertex 4
    // keeps a pendant 5; after deleting 1-vertices, 4 has core degree 1
    Graph g = Graph::from_edges(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(0, 3),
                                    Edge(3, 4), Edge(4, 5)});
    auto st = find_reducible(g, DischargeCase::EightThirds);
    REQUIRE(st.has_value());
    CHECK(st->tag == "L5_1");
    REQUIRE(st->delete_vs.size() == 1);
    CHECK(st->delete_vs[0] == 5);
}

TEST_CASE("apply_and_extend on the subdivided K4 within 2D+2 colors") {
    Graph g = subdivide(complete(4), Edge(0, 1), 3);
    auto st = find_reducible(g, DischargeCase::EightThirds);
    REQUIRE(st.has_value());
    ReducerOptions opt;
    opt.paranoid = true;
    auto recurse = [&](const Graph& h) {
        return color(h, DischargeCase::EightThirds, ReducerOptions{});
    };
    // mad(subdivided K4) < 8/3, so the recursion is in-contract
    ColorResult r = apply_and_extend(g, *st, DischargeCase::EightThirds, recurse, opt);
    CHECK(!verify(g, r.coloring, ColoringClass::Semistrong).has_value());
    CHECK(r.coloring.colors_used() <= 2 * max_degree(g) + 2);  // = 8
    for (const AuditRecord& a : r.audit)
        if (!a.soft) CHECK(a.observed >= a.claimed);
}

TEST_CASE("color() on cycles and trees (fallback territory)") {
    ColorResult c9 = color(cycle(9), DischargeCase::EightThirds);
    CHECK(c9.coloring.colors_used() == 3);
    CHECK(!verify(cycle(9), c9.coloring, ColoringClass::Semistrong).has_value());

    // star-of-stars tree with Delta = 4
    std::vector<Edge> es;
    for (int i = 1; i <= 4; ++i) es.emplace_back(0, i);
    int next = 5;
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j < 3; ++j) es.emplace_back(i, next++);
    Graph tree = Graph::from_edges(next, es);
    ColorResult tr = color(tree, DischargeCase::EightThirds);
    CHECK(tr.coloring.colors_used() <= 10);

    // a Delta=5 tree stays within 12: three levels of 5-ary branching
    std::vector<Edge> t5e;
    int nxt = 1;
    std::vector<int> level{0};
    for (int depth = 0; depth < 3; ++depth) {
        std::vector<int> next_level;
        for (int p : level) {
            int kids = depth == 0 ? 5 : 4;
            for (int j = 0; j < kids; ++j) {
                t5e.emplace_back(p, nxt);
                next_level.push_back(nxt++);
            }
        }
        level = next_level;
    }
    Graph t5 = Graph::from_edges(nxt, t5e);
    REQUIRE(max_degree(t5) == 5);
    ColorResult r5 = color(t5, DischargeCase::EightThirds);
    CHECK(r5.coloring.colors_used() <= 12);
    CHECK(!verify(t5, r5.coloring, ColoringClass::Semistrong).has_value());
}

TEST_CASE("color() handles disconnected graphs by component") {
    // two components: a pendant-laden cycle and a sparse gadget
    Graph a = attach_pendants(cycle(15), 0, 3);
    std::vector<Edge> es = a.edges();
    int off = a.vertex_count();
    Graph c9 = cycle(9);
    for (const Edge& e : c9.edges()) es.emplace_back(off + e.u, off + e.v);
    Graph g = Graph::from_edges(off + 9, es);
    REQUIRE(connected_components(g).size() == 2);
    ColorResult r = color(g, DischargeCase::EightThirds, ReducerOptions{true});
    CHECK(!verify(g, r.coloring, ColoringClass::Semistrong).has_value());
    CHECK(r.coloring.colors_used() <= 2 * max_degree(g) + 2);
}

TEST_CASE("color() rejects dense graphs with a witness") {
    try {
        color(complete(4), DischargeCase::EightThirds);
        FAIL("expected precondition rejection");
    } catch (const ColorError& e) {
        CHECK(e.kind == ColorError::Kind::Precondition);
        CHECK(e.witness.size() == 4);
    }
}

TEST_CASE("cycle cores are handled constructively") {
    Graph g = attach_pendants(attach_pendants(cycle(15), 0, 3), 4, 2);
    REQUIRE(max_degree(g) == 5);
    REQUIRE(g.edge_count() > 14);  // stays out of the exact fallback
    ColorResult r = color(g, DischargeCase::EightThirds, ReducerOptions{true});
    CHECK(!verify(g, r.coloring, ColoringClass::Semistrong).has_value());
    CHECK(r.coloring.colors_used() <= 12);
    bool saw_cycle_core = false;
    for (const auto& t : r.trace)
        if (t == "CYCLE_CORE") saw_cycle_core = true;
    CHECK(saw_cycle_core);
}

TEST_CASE("seeded corpus smoke run, both cases, paranoid checks on") {
    ReducerOptions opt;
    opt.paranoid = true;
    for (uint64_t seed = 0; seed < 30; ++seed) {
        int delta = 4 + static_cast<int>(seed % 5);
        for (DischargeCase which :
             {DischargeCase::EightThirds, DischargeCase::FourteenFifths}) {
            Graph g = sparse_test(which, delta, seed + 1000);
            ColorResult r = color(g, which, opt);
            int bound = 2 * delta + (which == DischargeCase::EightThirds ? 2 : 4);
            CHECK(!verify(g, r.coloring, ColoringClass::Semistrong).has_value());
            CHECK(r.coloring.colors_used() <= bound);
            for (const AuditRecord& a : r.audit)
                if (!a.soft) CHECK(a.observed >= a.claimed);
        }
    }
}

TEST_CASE("reducer palette is never better than the exact optimum") {
    int small = 0, reduced = 0;
    for (uint64_t seed = 0; seed < 220 && (small < 8 || reduced < 4); ++seed) {
        Graph g = sparse_test(DischargeCase::EightThirds, 4, seed + 50);
        bool uses_reductions = g.edge_count() > 14 && max_degree(g) >= 4;
        if (g.edge_count() > 20) continue;  // keep the exact side cheap
        if (uses_reductions)
            ++reduced;
        else if (g.edge_count() <= 14)
            ++small;
        else
            continue;
        ColorResult r = color(g, DischargeCase::EightThirds);
        SolveResult s = chromatic_index(g, ColoringClass::Semistrong);
        CHECK(r.coloring.colors_used() >= s.optimum);
        CHECK(s.optimum <= 2 * max_degree(g) + 2);
    }
    CHECK(small >= 1);
    CHECK(reduced >= 1);  // the comparison also covers the reduction path
}
