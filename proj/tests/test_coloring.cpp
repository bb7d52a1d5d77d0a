#include <doctest.h>

#include <set>
#include <sstream>

#include "edgechroma/coloring.hpp"
#include "edgechroma/generators.hpp"
#include "helpers.hpp"

using namespace ec;

namespace {

PartialColoring make(const Graph& g, int k, std::vector<std::pair<Edge, int>> entries) {
    PartialColoring phi(k, g.edge_count());
    for (auto& [e, c] : entries) phi.assign[g.edge_index(e)] = c;
    return phi;
}

PartialColoring random_partial(const Graph& g, int k, uint64_t seed, ColoringClass cls) {
    SplitMix64 rng(seed);
    PartialColoring phi(k, g.edge_count());
    std::vector<int> order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
    for (int i = g.edge_count() - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);
    for (int ei : order) {
        if (rng.below(3) == 0) continue;  // leave some uncolored
        auto avail = available_set(g, phi, ei, cls);
        if (!avail.empty()) phi.assign[ei] = avail[rng.below(avail.size())];
    }
    return phi;
}

}  // namespace

TEST_CASE("verify on the C_4 fixtures") {
    Graph c4 = cycle(4);
    PartialColoring alt = make(c4, 2, {{Edge(0, 1), 1}, {Edge(2, 3), 1}, {Edge(1, 2), 2}, {Edge(0, 3), 2}});
    CHECK(verify(c4, alt, ColoringClass::Proper) == std::nullopt);
    auto ss = verify(c4, alt, ColoringClass::Semistrong);
    REQUIRE(ss.has_value());
    CHECK(ss->cls == ColoringClass::Semistrong);
    auto ac = verify(c4, alt, ColoringClass::Acyclic);
    REQUIRE(ac.has_value());
    CHECK(ac->cycle.size() == 4);

    PartialColoring four = make(c4, 4, {{Edge(0, 1), 1}, {Edge(1, 2), 2}, {Edge(2, 3), 3}, {Edge(0, 3), 4}});
    CHECK(verify(c4, four, ColoringClass::Semistrong) == std::nullopt);
    CHECK(verify(c4, four, ColoringClass::Strong) == std::nullopt);
}

TEST_CASE("verify rejects palette violations") {
    Graph p2 = path(2);
    PartialColoring phi(1, 1);
    phi.assign[0] = 2;
    CHECK_THROWS_AS((void)verify(p2, phi, ColoringClass::Proper), InputError);
}

TEST_CASE("forbidden and available sets") {
    Graph p3 = path(3);
    PartialColoring phi = make(p3, 3, {{Edge(0, 1), 1}});
    CHECK(forbidden_set(p3, phi, p3.edge_index(1, 2), ColoringClass::Proper) ==
          std::vector<int>{1});

    PartialColoring empty(4, p3.edge_count());
    CHECK(forbidden_set(p3, empty, 0, ColoringClass::Semistrong).empty());

    Graph c4 = cycle(4);
    PartialColoring opp = make(c4, 4, {{Edge(2, 3), 1}});
    auto f = forbidden_set(c4, opp, c4.edge_index(0, 1), ColoringClass::Semistrong);
    CHECK(std::find(f.begin(), f.end(), 1) != f.end());
    CHECK_THROWS_AS(forbidden_set(c4, opp, c4.edge_index(2, 3), ColoringClass::Semistrong),
                    InputError);
}

TEST_CASE("strongly forbidden sets and the SF/F inclusion") {
    Graph k14 = star(4);
    PartialColoring phi = make(k14, 4, {{Edge(0, 1), 1}, {Edge(0, 2), 2}, {Edge(0, 3), 3}});
    CHECK(strongly_forbidden_set(k14, phi, k14.edge_index(0, 4)) ==
          std::vector<int>({1, 2, 3}));

    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = testutil::random_connected(9, static_cast<int>(seed % 8), seed + 5);
        PartialColoring p = random_partial(g, 6, seed, ColoringClass::Semistrong);
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            if (p.colored(ei)) continue;
            auto f = forbidden_set(g, p, ei, ColoringClass::Semistrong);
            auto sf = strongly_forbidden_set(g, p, ei);
            std::set<int> sfs(sf.begin(), sf.end());
            for (int c : f) CHECK(sfs.count(c) == 1);  // F subset of SF
            // A and F partition [1,k]
            auto a = available_set(g, p, ei, ColoringClass::Semistrong);
            CHECK(a.size() + f.size() == static_cast<size_t>(p.k));
        }
    }
}

TEST_CASE("coloring an edge with an available color keeps verify passing") {
    for (uint64_t seed = 0; seed < 24; ++seed) {
        ColoringClass cls = static_cast<ColoringClass>(seed % 5);
        Graph g = testutil::random_connected(8, static_cast<int>(seed % 6), seed + 9);
        PartialColoring p = random_partial(g, 7, seed, cls);
        REQUIRE(verify(g, p, cls) == std::nullopt);
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            if (p.colored(ei)) continue;
            for (int c : available_set(g, p, ei, cls)) {
                PartialColoring q = p;
                q.assign[ei] = c;
                CHECK(verify(g, q, cls) == std::nullopt);
            }
            for (int c : forbidden_set(g, p, ei, cls)) {
                PartialColoring q = p;
                q.assign[ei] = c;
                CHECK(verify(g, q, cls) != std::nullopt);
            }
        }
    }
}

TEST_CASE("class chain implications on random total colorings") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = testutil::random_connected(7, static_cast<int>(seed % 6), seed + 21);
        SplitMix64 rng(seed);
        PartialColoring phi(g.edge_count() + 1, g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i)
            phi.assign[i] = 1 + static_cast<int>(rng.below(phi.k));
        bool strong = !verify(g, phi, ColoringClass::Strong);
        bool ss = !verify(g, phi, ColoringClass::Semistrong);
        bool ur = !verify(g, phi, ColoringClass::UniquelyRestricted);
        bool proper = !verify(g, phi, ColoringClass::Proper);
        bool acyclic = !verify(g, phi, ColoringClass::Acyclic);
        if (strong) CHECK(ss);
        if (ss) CHECK(ur);
        if (ur) CHECK(proper);
        if (ur) CHECK(acyclic);
    }
}

TEST_CASE("violation evidence re-checks as a genuine violation") {
    Graph c4 = cycle(4);
    PartialColoring opp = make(c4, 2, {{Edge(0, 1), 1}, {Edge(2, 3), 1}});
    auto v = verify(c4, opp, ColoringClass::Semistrong);
    REQUIRE(v.has_value());
    CHECK(v->color == 1);
    CHECK(v->evidence.size() == 2);
    // the reported class is exactly the color-1 class
    CHECK(v->evidence == color_class(c4, opp, 1));

    auto u = verify(c4, opp, ColoringClass::UniquelyRestricted);
    REQUIRE(u.has_value());
    REQUIRE(u->cycle.size() == 4);
    for (size_t i = 0; i + 1 < u->cycle.size(); ++i)
        CHECK(c4.has_edge(u->cycle[i], u->cycle[i + 1]));
    CHECK(c4.has_edge(u->cycle.front(), u->cycle.back()));
}

TEST_CASE("coloring file format round-trips") {
    Graph g = prism(3);
    PartialColoring phi(9, g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) phi.assign[i] = i + 1;
    std::string text = write_coloring(g, phi);
    std::istringstream in(text);
    PartialColoring back = read_coloring(in, g);
    CHECK(back.k == phi.k);
    CHECK(back.assign == phi.assign);

    std::istringstream bad("k 2\nc 0 5 1\n");
    CHECK_THROWS_AS(read_coloring(bad, g), InputError);
    std::istringstream big("k 2\nc 0 1 3\n");
    CHECK_THROWS_AS(read_coloring(big, g), InputError);
}
