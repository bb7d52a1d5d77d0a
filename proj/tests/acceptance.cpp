// Acceptance suite: one checkable criterion per --criterion number, each
// printing a single PASS/FAIL line. Exit 0 iff everything requested passed.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "edgechroma/density.hpp"
#include "edgechroma/discharging.hpp"
#include "edgechroma/exact.hpp"
#include "edgechroma/generators.hpp"
#include "edgechroma/hierarchy.hpp"
#include "edgechroma/matching.hpp"
#include "edgechroma/reducer.hpp"
#include "edgechroma/structure.hpp"
#include "helpers.hpp"

using namespace ec;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

template <typename F>
bool run(int n, const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << n << " " << (out.pass ? "PASS" : "FAIL") << " [" << name << "]";
    if (!out.detail.empty()) line << " " << out.detail;
    line << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    return out.pass;
}

void expect_index(Outcome& out, const Graph& g, ColoringClass cls, int want,
                  const std::string& label) {
    SolveResult r = chromatic_index(g, cls);
    if (!r.exact || r.optimum != want)
        out.fail(label + ": got " + std::to_string(r.exact ? r.optimum : -1) + ", want " +
                 std::to_string(want));
}

// Join-graph exact values plus the one-sided 18 check for C7 v I2.
void criterion1(Outcome& out) {
    expect_index(out, cycle_join_I2(4), ColoringClass::Semistrong, 12, "ss(C4vI2)");
    expect_index(out, cycle_join_I2(4), ColoringClass::UniquelyRestricted, 12, "ur(C4vI2)");
    expect_index(out, cycle_join_I2(5), ColoringClass::UniquelyRestricted, 10, "ur(C5vI2)");

    Graph j = cycle_join_I2(7);
    // Upper side: 14 distinct colors on the join edges, then a semistrong
    // 4-coloring of the 7-cycle on 4 fresh colors.
    PartialColoring phi(18, j.edge_count());
    int next = 0;
    for (int i = 0; i < j.edge_count(); ++i) {
        const Edge& e = j.edge(i);
        if (e.v >= 7) phi.assign[i] = ++next;
    }
    if (next != 14) out.fail("expected 14 join edges");
    SolveResult c7 = chromatic_index(cycle(7), ColoringClass::Semistrong);
    if (c7.optimum != 4) out.fail("ss(C7) != 4");
    for (int i = 0; i < 7; ++i) {
        int a = i, b = (i + 1) % 7;
        phi.assign[j.edge_index(a, b)] = 14 + c7.witness.assign[cycle(7).edge_index(a, b)];
    }
    if (!phi.total()) out.fail("18-coloring incomplete");
    if (verify(j, phi, ColoringClass::Semistrong)) out.fail("18-coloring does not verify");
    if (phi.colors_used() != 18) out.fail("constructed coloring must use 18 colors");
    int lb = conflict_clique_lower_bound(j, ColoringClass::Semistrong);
    if (lb < 14) out.fail("clique bound " + std::to_string(lb) + " < 14");
    // The full value is only required one-sided, but the solver settles it
    // outright within the budget, so pin it exactly too.
    SolveOptions budget;
    budget.node_budget = 5000000;
    SolveResult full = chromatic_index(j, ColoringClass::Semistrong, budget);
    if (full.exact && full.optimum != 18)
        out.fail("ss(C7vI2) solved to " + std::to_string(full.optimum) + ", want 18");
    out.note("ss(C7vI2): verified 18-coloring, clique >= " + std::to_string(lb) +
             (full.exact ? ", full solve confirms 18" : ", full solve hit the budget"));
}

void criterion2(Outcome& out) {
    for (int n : {4, 7}) expect_index(out, cycle(n), ColoringClass::Semistrong, 4,
                                      "ss(C" + std::to_string(n) + ")");
    for (int n : {3, 5, 6, 8, 9, 10})
        expect_index(out, cycle(n), ColoringClass::Semistrong, 3,
                     "ss(C" + std::to_string(n) + ")");
    expect_index(out, complete_bipartite(3, 3), ColoringClass::Semistrong, 9, "ss(K33)");
    // Stated value is unattainable: 9 is the prism's STRONG index, and the
    // actual semistrong index is 6 (cross-triangle pairings give pendant-edge
    // P4 classes; a verified 6-witness plus an exhausted search). The assertion
    // is kept as specified and expected to stay red.
    expect_index(out, prism(3), ColoringClass::Semistrong, 9, "ss(prism)");
    if (!out.pass)
        out.note("note: semistrong index of the prism is 6 (verified witness, "
                 "exhausted search below 6); 9 matches its strong index");
}

void criterion3(Outcome& out) {
    const int runs = 10000;
    long long soft_shortfalls = 0, hard_checks = 0;
    for (DischargeCase which : {DischargeCase::EightThirds, DischargeCase::FourteenFifths}) {
        int bound_add = which == DischargeCase::EightThirds ? 2 : 4;
        for (int i = 0; i < runs; ++i) {
            uint64_t seed = 90000ull + i;
            int delta = 4 + i % 5;
            Graph g = sparse_test(which, delta, seed);
            if (g.vertex_count() > 60) {
                out.fail("corpus graph exceeds 60 vertices");
                return;
            }
            ColorResult r;
            try {
                r = color(g, which);
            } catch (const ColorError& e) {
                out.fail("seed " + std::to_string(seed) + " " +
                         discharge_case_name(which) + ": " + e.what());
                return;
            }
            if (verify(g, r.coloring, ColoringClass::Semistrong)) {
                out.fail("seed " + std::to_string(seed) + ": coloring does not verify");
                return;
            }
            if (r.coloring.colors_used() > 2 * delta + bound_add) {
                out.fail("seed " + std::to_string(seed) + ": palette exceeds bound");
                return;
            }
            for (const AuditRecord& a : r.audit) {
                if (a.soft) {
                    if (!a.ok()) ++soft_shortfalls;
                } else {
                    ++hard_checks;
                    if (!a.ok()) {
                        out.fail("seed " + std::to_string(seed) + ": availability bound " +
                                 a.tag + " observed " + std::to_string(a.observed) +
                                 " < claimed " + std::to_string(a.claimed));
                        return;
                    }
                }
            }
        }
    }
    out.note(std::to_string(2 * runs) + " runs, " + std::to_string(hard_checks) +
             " hard availability checks, " + std::to_string(soft_shortfalls) +
             " soft shortfalls logged");
}

std::vector<Graph> connected_up_to_8() {
    std::vector<Graph> all;
    for (int n = 1; n <= 7; ++n)
        for (Graph& g : enumerate_small(n)) all.push_back(std::move(g));
    // one augmentation layer to 8 vertices with canonical dedup
    std::set<uint64_t> seen;
    size_t count8 = 0;
    for (const Graph& base : enumerate_small(7)) {
        for (unsigned sub = 1; sub < (1u << 7); ++sub) {
            std::vector<Edge> es = base.edges();
            for (int v = 0; v < 7; ++v)
                if (sub >> v & 1) es.emplace_back(v, 7);
            Graph h = Graph::from_edges(8, es);
            if (seen.insert(canonical_form64(h)).second) {
                all.push_back(std::move(h));
                ++count8;
            }
        }
    }
    if (count8 != 11117)
        throw std::logic_error("8-vertex corpus has " + std::to_string(count8) +
                               " graphs, want 11117");
    return all;
}

void criterion4(Outcome& out) {
    long long matchings = 0;
    for (const Graph& g : connected_up_to_8()) {
        for (const auto& m : testutil::all_matchings(g)) {
            ++matchings;
            bool ind = is_induced_matching(g, m);
            bool ss = is_semistrong_matching(g, m);
            bool ur = is_uniquely_restricted_matching(g, m);
            if (ind && !ss) {
                out.fail("induced matching not semistrong");
                return;
            }
            if (ss && !ur) {
                out.fail("semistrong matching not uniquely restricted");
                return;
            }
            if (!m.empty()) {
                Graph gm = induced_submatching_graph(g, m).graph;
                bool unique_pm = count_perfect_matchings(gm) == 1;
                if (ur != unique_pm) {
                    out.fail("alternating-cycle predicate disagrees with PM count");
                    return;
                }
            }
        }
    }
    out.note(std::to_string(matchings) + " matchings checked over 12134 graphs");
}

void criterion5(Outcome& out) {
    for (int n : {3, 5, 7, 9, 12})
        if (mad(cycle(n)).value != Rational(2)) out.fail("mad(C_n) != 2");
    if (mad(complete(4)).value != Rational(3)) out.fail("mad(K4) != 3");
    if (mad(cycle_join_I2(7)).value != Rational(14, 3)) out.fail("mad(C7vI2) != 14/3");
    for (uint64_t seed = 0; seed < 500; ++seed) {
        int n = 6 + static_cast<int>(seed % 13);  // up to 18 vertices
        Graph g = testutil::random_connected(n, static_cast<int>(seed % 14), seed * 3 + 17);
        if (mad(g).value != mad_exhaustive(g).value) {
            out.fail("flow mad != oracle mad at seed " + std::to_string(seed));
            return;
        }
    }
    out.note("500 seeded graphs, flow == subset oracle");
}

void criterion6(Outcome& out) {
    // Over the sparse corpus the filter provably rejects every nonempty core
    // (mad < bound forces a deficient vertex, which the checklist excludes).
    // Assert the implication regardless.
    for (uint64_t seed = 0; seed < 2000; ++seed) {
        int delta = 4 + static_cast<int>(seed % 5);
        Graph core83 = core_view(sparse_test(DischargeCase::EightThirds, delta, seed)).core;
        if (check_conclusions_8_3(core83).empty()) {
            if (!deficiency_report(discharge_8_3(core83)).empty()) {
                out.fail("8/3 deficiency on a checklist-passing core, seed " +
                         std::to_string(seed));
                return;
            }
        } else if (deficiency_report(discharge_8_3(core83)).empty() &&
                   core83.vertex_count() > 0) {
            out.fail("nonempty 8/3 core with no deficiency failed the checklist, seed " +
                     std::to_string(seed));
            return;
        }
        Graph core145 =
            core_view(sparse_test(DischargeCase::FourteenFifths, delta, seed)).core;
        if (check_conclusions_14_5(core145).empty()) {
            if (!deficiency_report(discharge_14_5(core145)).empty()) {
                out.fail("14/5 deficiency on a checklist-passing core, seed " +
                         std::to_string(seed));
                return;
            }
        }
    }
    // Positive corpus: denser checklist-passing cores keep the test non-vacuous.
    int kept83 = 0, kept145 = 0;
    std::vector<Graph> positives{complete(4), cycle_join_I2(5), cycle_join_I2(7), prism(3)};
    {
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
        positives.push_back(Graph::from_edges(10, es));
    }
    for (uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = testutil::random_connected(10, 10 + static_cast<int>(seed % 8), seed);
        if (min_degree(g) >= 3) positives.push_back(g);
    }
    for (const Graph& core : positives) {
        if (check_conclusions_8_3(core).empty()) {
            ++kept83;
            if (!deficiency_report(discharge_8_3(core)).empty()) {
                out.fail("8/3 deficiency on a positive checklist-passing core");
                return;
            }
        }
        if (check_conclusions_14_5(core).empty()) {
            ++kept145;
            if (!deficiency_report(discharge_14_5(core)).empty()) {
                out.fail("14/5 deficiency on a positive checklist-passing core");
                return;
            }
        }
    }
    if (kept83 < 10 || kept145 < 3) out.fail("positive checklist corpus too small");
    // exact conservation on arbitrary graphs
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = testutil::random_connected(12, static_cast<int>(seed % 12), seed + 7);
        for (auto led : {discharge_8_3(g), discharge_14_5(g)}) {
            Rational si = 0, sf = 0;
            for (auto& x : led.initial) si += x;
            for (auto& x : led.final) sf += x;
            if (si != sf || si != Rational(2 * g.edge_count())) {
                out.fail("charge conservation broken");
                return;
            }
        }
    }
    out.note("filters kept " + std::to_string(kept83) + " (8/3) and " +
             std::to_string(kept145) + " (14/5) cores");
}

void criterion7(Outcome& out) {
    int graphs = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_small(n)) {
            ++graphs;
            std::vector<HierarchyRow> rows;
            try {
                rows = hierarchy(g);  // throws on chain violation
            } catch (const std::exception& e) {
                out.fail(std::string("chain violation: ") + e.what());
                return;
            }
            for (const auto& row : rows)
                if (!row.exact) {
                    out.fail("non-exact row without a budget");
                    return;
                }
        }
    }
    out.note(std::to_string(graphs) + " connected graphs, all five indices exact");
}

Graph dodecahedron() {
    std::vector<Edge> es;
    for (int i = 0; i < 10; ++i) {
        es.emplace_back(i, (i + 1) % 10);
        es.emplace_back(i, 10 + i);
        es.emplace_back(10 + i, 10 + (i + 2) % 10);
    }
    return Graph::from_edges(20, es);
}

Graph subdivide_all(const Graph& g) {
    Graph out = g;
    std::vector<Edge> base = g.edges();
    for (const Edge& e : base) out = subdivide(out, e, 1);
    return out;
}

void criterion8(Outcome& out) {
    std::vector<std::pair<std::string, Graph>> family = {
        {"subdivided cube", subdivide_all(prism(4))},
        {"subdivided 5-prism", subdivide_all(prism(5))},
        {"subdivided 6-prism", subdivide_all(prism(6))},
        {"subdivided dodecahedron", subdivide_all(dodecahedron())},
        {"twice-subdivided K4", [] {
             Graph g = complete(4);
             g = subdivide_all(g);
             return subdivide_all(g);
         }()},
    };
    for (auto& [name, g] : family) {
        auto gi = girth(g);
        if (!gi || *gi < 8) {
            out.fail(name + ": girth below 8");
            continue;
        }
        MadBelowResult r = mad_below(g, Rational(8, 3));
        if (!r.holds) out.fail(name + ": mad " + to_fraction_string(r.value) + " >= 8/3");
    }
    out.note("girth >= 8 families stay below 8/3");
}

}  // namespace

int main(int argc, char** argv) {
    int which = 0;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) which = std::atoi(argv[++i]);
    using Body = std::function<void(Outcome&)>;
    std::vector<std::pair<std::string, Body>> checks = {
        {"proposition-5 exact values", criterion1},
        {"cited cycle/K33/prism values", criterion2},
        {"constructive coloring property suite", criterion3},
        {"matching hierarchy vs PM-count, n <= 8", criterion4},
        {"mad exactness vs subset oracle", criterion5},
        {"discharging consistency", criterion6},
        {"chromatic-index chain, n <= 6", criterion7},
        {"girth >= 8 density gate", criterion8},
    };
    bool all = true;
    for (int i = 1; i <= static_cast<int>(checks.size()); ++i) {
        if (which != 0 && which != i) continue;
        all = run(i, checks[i - 1].first, checks[i - 1].second) && all;
    }
    return all ? 0 : 1;
}
