#pragma once

#include <string>
#include <vector>

#include "edgechroma/graph.hpp"
#include "edgechroma/rational.hpp"

namespace ec {

enum class DischargeCase { EightThirds, FourteenFifths };

Rational discharge_bound(DischargeCase c);
std::string discharge_case_name(DischargeCase c);
DischargeCase parse_discharge_case(const std::string& s);  // "8/3" | "14/5"

struct Transfer {
    int from, to;
    Rational amount;
    std::string rule;
};

struct ChargeLedger {
    DischargeCase which;
    std::vector<Rational> initial;  // = core degree
    std::vector<Transfer> transfers;
    std::vector<Rational> final;
};

/// 8/3-case rule R1: each 3+-vertex gives 1/3 to each 2-vertex on its incident
/// threads (once per end incidence) and to each of its bad neighbors
/// (bad = 3-vertex with two incident 1-threads).
ChargeLedger discharge_8_3(const Graph& core);

/// 14/5-case rules R1-R4 over the vertex classification.
ChargeLedger discharge_14_5(const Graph& core);

struct Deficiency {
    int vertex;
    Rational final;
    Rational shortfall;  // bound - final, > 0
};

/// Vertices with final charge below the case bound, largest shortfall first.
std::vector<Deficiency> deficiency_report(const ChargeLedger& ledger);

}  // namespace ec
