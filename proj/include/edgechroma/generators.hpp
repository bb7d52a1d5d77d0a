#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgechroma/discharging.hpp"
#include "edgechroma/graph.hpp"

namespace ec {

/// Splittable 64-bit generator; identical seeds give identical streams on
/// every platform, so corpus failures replay from the recorded seed.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dull); }
};

struct FamilySpec {
    std::string family;
    std::vector<long> params;
    uint64_t seed = 0;
};

/// Deterministic family dispatch; same spec, same edge list.
Graph gen(const FamilySpec& spec);

Graph cycle(int n);                        // n >= 3
Graph path(int n);                         // n >= 1 vertices
Graph star(int leaves);                    // K_{1,leaves}
Graph complete(int n);                     // n >= 1
Graph complete_bipartite(int a, int b);    // a, b >= 1
Graph prism(int n);                        // two n-cycles plus rungs, n >= 3
Graph cycle_join_I2(int delta);            // C_delta v I_2, delta >= 4
Graph subdivide(const Graph& base, const Edge& e, int t);
Graph attach_pendants(const Graph& base, int v, int t);

/// Seeded sparse graph with max degree exactly `delta` and mad verified below
/// the case bound: random bounded-degree tree, rejection-sampled extra edges,
/// then pendant attachment (which cannot raise mad past 2).
Graph sparse_test(DischargeCase which, int delta, uint64_t seed);

/// All connected graphs on exactly n vertices up to isomorphism, n <= 7.
std::vector<Graph> enumerate_small(int n);

/// Canonical adjacency bitmask (stride 8), n <= 8. Equal iff isomorphic.
uint64_t canonical_form64(const Graph& g);

}  // namespace ec
