#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgechroma/coloring.hpp"
#include "edgechroma/discharging.hpp"
#include "edgechroma/graph.hpp"

namespace ec {

/// Extension strategy for one uncolored edge:
/// greedy over the available set, greedy over the strongly available set, or
/// greedy (over SA) after the step's color-exchange preconditioning.
enum class Strategy { GreedyA, GreedySA, SwapThenGreedy };

/// Exchange rule: when the two condition edges carry the same color in the
/// recursed coloring, swap the colors of the two exchange edges. A missing
/// second exchange edge refers to the pendant edge added by surgery.
struct SwapRule {
    Edge cond_a, cond_b;
    Edge swap_x;
    std::optional<Edge> swap_y;
};

struct AgendaItem {
    Edge e;
    Strategy strategy;
    int phase;          // availability bounds are stated per phase start
    int claimed;        // availability bound claimed at the phase start
    bool soft;          // Delta-dependent chained bound: log, don't fail
    std::vector<Edge> avoid;  // colors of these edges are additionally barred
};

/// One reducible configuration plus its extension recipe. The reduced graph
/// is the current graph minus delete_vs (or minus delete_es), plus one fresh
/// pendant edge when add_pendant_at is set.
struct ReductionStep {
    std::string tag;  // L5_1..L5_8, L6_1..L6_18, OBS_2, CYCLE_CORE
    std::vector<int> delete_vs;
    std::vector<Edge> delete_es;
    std::optional<int> add_pendant_at;
    std::vector<Edge> erase_after;  // recursed colors dropped before extending
    std::optional<SwapRule> swap;
    std::vector<AgendaItem> agenda;

    enum class Terminal { None, Star, CycleCore, SmallCore };
    Terminal terminal = Terminal::None;
    std::vector<int> payload;  // star center / whole component vertices
};

struct AuditRecord {
    std::string tag;
    Edge e{0, 1};
    Strategy strategy = Strategy::GreedyA;
    int claimed = 0;
    int observed = 0;  // at the item's phase start
    bool soft = false;
    bool ok() const { return observed >= claimed; }
};

struct ColorResult {
    PartialColoring coloring;
    int palette = 0;  // bound the run was performed under (2D+2 / 2D+4)
    std::vector<std::string> trace;
    std::vector<AuditRecord> audit;
};

struct ColorError : std::runtime_error {
    enum class Kind { Precondition, Irreducible, ExtensionExhausted };
    Kind kind;
    std::vector<int> witness;  // dense subgraph for Precondition
    std::string tag;           // lemma tag for ExtensionExhausted

    ColorError(Kind k, std::string msg, std::vector<int> w = {}, std::string t = {})
        : std::runtime_error(std::move(msg)), kind(k), witness(std::move(w)),
          tag(std::move(t)) {}
};

struct ReducerOptions {
    bool paranoid = false;  // verify the partial coloring after every step
};

/// First configuration in catalog order whose lemma conclusion is violated;
/// nullopt when nothing matches (on a graph meeting the case precondition
/// with Delta >= 4 that is the discharging contradiction, hence unreachable).
std::optional<ReductionStep> find_reducible(const Graph& g, DischargeCase which);

/// Colors the reduced graph through `recurse`, maps the coloring back, applies
/// the step's exchange rule and erasures, then colors the agenda greedily.
ColorResult apply_and_extend(const Graph& g, const ReductionStep& step,
                             DischargeCase which,
                             const std::function<ColorResult(const Graph&)>& recurse,
                             ReducerOptions opt = {});

/// Verified semistrong coloring with <= 2D+2 (mad < 8/3) or <= 2D+4
/// (mad < 14/5) colors. Throws ColorError on precondition failure.
ColorResult color(const Graph& g, DischargeCase which, ReducerOptions opt = {});

}  // namespace ec
