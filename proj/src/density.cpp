#include "edgechroma/density.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>

namespace ec {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q <= 0) throw InputError("rational with nonpositive denominator: " + s);
        return Rational(p, q);
    } catch (const std::exception&) {
        throw InputError("cannot parse rational '" + s + "'");
    }
}

Rational girth_mad_bound(int g) {
    if (g < 3) throw InputError("girth bound needs g >= 3");
    return Rational(2 * g, g - 2);
}

namespace {

// Dinic max-flow on int64 capacities.
struct FlowNet {
    struct Arc {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit FlowNet(int n) : arcs(n) {}

    void add(int a, int b, long long cap) {
        arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size())});
        arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(arcs.size(), -1);
        std::deque<int> q{s};
        level[s] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const Arc& a : arcs[x])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[x] + 1;
                    q.push_back(a.to);
                }
        }
        return level[t] >= 0;
    }

    long long dfs(int x, int t, long long f) {
        if (x == t) return f;
        for (int& i = iter[x]; i < static_cast<int>(arcs[x].size()); ++i) {
            Arc& a = arcs[x][i];
            if (a.cap > 0 && level[a.to] == level[x] + 1) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter.assign(arcs.size(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }

    std::vector<char> source_side(int s) {
        std::vector<char> seen(arcs.size(), 0);
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const Arc& a : arcs[x])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push_back(a.to);
                }
        }
        return seen;
    }
};

long long edges_inside(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : vs) in[v] = 1;
    long long c = 0;
    for (const Edge& e : g.edges())
        if (in[e.u] && in[e.v]) ++c;
    return c;
}

// Goldberg feasibility test: is there a nonempty S with |E(S)|/|S| > p/q?
// Network: source -> edge node (cap q), edge node -> endpoints (inf),
// vertex -> sink (cap p). Min cut = q*m - max_S (q*e(S) - p*|S|).
struct DensityProbe {
    bool denser = false;
    std::vector<int> witness;
};

DensityProbe probe_density(const Graph& g, long long p, long long q) {
    int n = g.vertex_count(), m = g.edge_count();
    const long long kInf = std::numeric_limits<long long>::max() / 4;
    FlowNet net(2 + m + n);
    int src = 0, snk = 1 + m + n;
    for (int i = 0; i < m; ++i) {
        net.add(src, 1 + i, q);
        net.add(1 + i, 1 + m + g.edge(i).u, kInf);
        net.add(1 + i, 1 + m + g.edge(i).v, kInf);
    }
    for (int v = 0; v < n; ++v) net.add(1 + m + v, snk, p);
    long long flow = net.max_flow(src, snk);
    DensityProbe r;
    if (flow < q * static_cast<long long>(m)) {
        r.denser = true;
        auto side = net.source_side(src);
        for (int v = 0; v < n; ++v)
            if (side[1 + m + v]) r.witness.push_back(v);
    }
    return r;
}

// Subgraph density (edges over vertices) of a vertex set.
Rational density_of(const Graph& g, const std::vector<int>& vs) {
    return Rational(edges_inside(g, vs), static_cast<long long>(vs.size()));
}

// Smallest-denominator fraction in the closed interval [lo, hi] with
// 0 <= lo <= hi, by the Stern-Brocot / continued-fraction descent.
Rational smallest_denominator_in(const Rational& lo, const Rational& hi) {
    BigInt fl = numerator(lo) / denominator(lo);  // floor, operands nonnegative
    BigInt cl = fl + (Rational(fl) == lo ? 0 : 1);
    if (Rational(cl) <= hi) return Rational(cl);
    Rational lo2 = lo - Rational(fl), hi2 = hi - Rational(fl);
    return Rational(fl) + 1 / smallest_denominator_in(1 / hi2, 1 / lo2);
}

long long narrow_cast(const BigInt& x) {
    if (x > std::numeric_limits<long long>::max() / 4 || x < 0)
        throw InputError("density probe capacity out of range");
    return x.convert_to<long long>();
}

}  // namespace

MadResult mad(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw InputError("mad of empty graph");
    // Invariant: lo is an achieved density with its witness; rho* <= hi.
    MadResult best;
    if (g.edge_count() == 0) {
        best.value = 0;
        best.witness = {0};
        return best;
    }
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    Rational lo = density_of(g, all);
    std::vector<int> lo_witness = all;
    Rational hi(n);
    const Rational gap = Rational(1, static_cast<long long>(n) * n);
    while (hi - lo >= gap) {
        Rational mid = (lo + hi) / 2;
        auto r = probe_density(g, narrow_cast(numerator(mid)), narrow_cast(denominator(mid)));
        if (r.denser) {
            Rational got = density_of(g, r.witness);
            // The min-cut side is strictly denser than the guess.
            if (got <= mid) throw std::logic_error("density probe witness not denser");
            lo = got;
            lo_witness = r.witness;
        } else {
            hi = mid;
        }
    }
    // Densities are fractions with denominator <= n and the interval is
    // narrower than 1/n^2, so the achieved lo is the unique candidate left.
    Rational pinned = smallest_denominator_in(lo, hi);
    if (denominator(pinned) <= n && pinned != lo)
        throw std::logic_error("mad extraction mismatch");
    best.value = 2 * lo;
    best.witness = lo_witness;
    return best;
}

MadBelowResult mad_below(const Graph& g, const Rational& bound) {
    if (bound <= 0) throw InputError("mad_below needs a positive bound");
    MadResult m = mad(g);
    MadBelowResult r;
    r.holds = m.value < bound;
    r.value = m.value;
    if (!r.holds) r.witness = m.witness;
    return r;
}

MadResult mad_exhaustive(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw InputError("mad of empty graph");
    if (n > 20) throw InputError("mad_exhaustive limited to 20 vertices");
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int32_t> cnt(static_cast<size_t>(full) + 1, 0);
    long long bp = 0, bq = 1;  // best density e(S)/|S| as a fraction
    uint32_t bset = 1;
    for (uint32_t s = 1; s <= full; ++s) {
        int v = std::countr_zero(s);
        uint32_t rest = s & (s - 1);
        cnt[s] = cnt[rest] + std::popcount(adj[v] & rest);
        long long e = cnt[s], k = std::popcount(s);
        if (e * bq > bp * k) {
            bp = e;
            bq = k;
            bset = s;
        }
    }
    MadResult r;
    r.value = 2 * Rational(bp, bq);
    for (int v = 0; v < n; ++v)
        if (bset >> v & 1) r.witness.push_back(v);
    return r;
}

}  // namespace ec
