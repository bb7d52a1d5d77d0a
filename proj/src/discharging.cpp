#include "edgechroma/discharging.hpp"

#include <algorithm>

#include "edgechroma/structure.hpp"

namespace ec {

Rational discharge_bound(DischargeCase c) {
    return c == DischargeCase::EightThirds ? Rational(8, 3) : Rational(14, 5);
}

std::string discharge_case_name(DischargeCase c) {
    return c == DischargeCase::EightThirds ? "8/3" : "14/5";
}

DischargeCase parse_discharge_case(const std::string& s) {
    if (s == "8/3") return DischargeCase::EightThirds;
    if (s == "14/5") return DischargeCase::FourteenFifths;
    throw InputError("unknown discharging case '" + s + "' (want 8/3 or 14/5)");
}

namespace {

ChargeLedger fresh_ledger(const Graph& core, DischargeCase which) {
    ChargeLedger led;
    led.which = which;
    led.initial.reserve(core.vertex_count());
    for (int v = 0; v < core.vertex_count(); ++v) led.initial.emplace_back(degree(core, v));
    led.final = led.initial;
    return led;
}

void move_charge(ChargeLedger& led, int from, int to, Rational amount, std::string rule) {
    led.final[from] -= amount;
    led.final[to] += amount;
    led.transfers.push_back({from, to, std::move(amount), std::move(rule)});
}

}  // namespace

ChargeLedger discharge_8_3(const Graph& core) {
    ChargeLedger led = fresh_ledger(core, DischargeCase::EightThirds);
    StructureInfo info = classify(core);
    const Rational third(1, 3);
    // One donation per end incidence; coincident ends donate twice.
    for (const Thread& t : info.threads.threads)
        for (int end : {t.u1, t.u2})
            for (int x : t.interior) move_charge(led, end, x, third, "R1-thread");
    for (int v = 0; v < core.vertex_count(); ++v) {
        if (degree(core, v) < 3) continue;
        for (int y : core.neighbors(v))
            if (info.bad83[y]) move_charge(led, v, y, third, "R1-bad");
    }
    return led;
}

ChargeLedger discharge_14_5(const Graph& core) {
    ChargeLedger led = fresh_ledger(core, DischargeCase::FourteenFifths);
    StructureInfo info = classify(core);
    int n = core.vertex_count();
    auto cls = [&](int v) { return info.cls[v]; };
    bool has_poor = false;
    for (int v = 0; v < n; ++v)
        if (cls(v) == VertexClass::TwoPoor) has_poor = true;
    int dstar = n > 0 ? max_degree(core) : 0;
    for (int v = 0; v < n; ++v) {
        // R1: bad 3-vertex gives 2/5 to each nonpoor 2-neighbor.
        if (cls(v) == VertexClass::ThreeBad) {
            for (int y : core.neighbors(v))
                if (cls(y) == VertexClass::TwoNonpoor)
                    move_charge(led, v, y, Rational(2, 5), "R1");
        }
        // R2: good 3-vertex pays each bad 3-neighbor, 1/5 or 1/10 depending on
        // whether the receiver has a bad 3-neighbor of its own.
        if (cls(v) == VertexClass::ThreeGood) {
            for (int u : core.neighbors(v)) {
                if (cls(u) != VertexClass::ThreeBad) continue;
                if (info.bn145[u] > 0)
                    move_charge(led, v, u, Rational(1, 5), "R2-1");
                else
                    move_charge(led, v, u, Rational(1, 10), "R2-2");
            }
        }
        // R3: 4+-vertex gives 2/5 to nonpoor 2-neighbors, 1/5 to bad 3-neighbors.
        if (degree(core, v) >= 4) {
            for (int y : core.neighbors(v)) {
                if (cls(y) == VertexClass::TwoNonpoor)
                    move_charge(led, v, y, Rational(2, 5), "R3");
                else if (cls(y) == VertexClass::ThreeBad)
                    move_charge(led, v, y, Rational(1, 5), "R3");
            }
        }
        // R4: only when poor 2-vertices exist at all.
        if (has_poor && n > 0 && degree(core, v) == dstar) {
            for (int y : core.neighbors(v))
                if (cls(y) == VertexClass::TwoPoor)
                    move_charge(led, v, y, Rational(4, 5), "R4");
        }
    }
    return led;
}

std::vector<Deficiency> deficiency_report(const ChargeLedger& ledger) {
    Rational bound = discharge_bound(ledger.which);
    std::vector<Deficiency> out;
    for (size_t v = 0; v < ledger.final.size(); ++v)
        if (ledger.final[v] < bound)
            out.push_back({static_cast<int>(v), ledger.final[v], bound - ledger.final[v]});
    std::sort(out.begin(), out.end(), [](const Deficiency& a, const Deficiency& b) {
        if (a.shortfall != b.shortfall) return a.shortfall > b.shortfall;
        return a.vertex < b.vertex;
    });
    return out;
}

}  // namespace ec
