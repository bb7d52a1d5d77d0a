#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "edgechroma/density.hpp"
#include "edgechroma/discharging.hpp"
#include "edgechroma/generators.hpp"
#include "edgechroma/graph.hpp"
#include "edgechroma/hierarchy.hpp"
#include "edgechroma/reducer.hpp"
#include "edgechroma/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTimeout = 3;

long long default_budget() {
    if (const char* env = std::getenv("EDGECHROMA_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw ec::InputError("EDGECHROMA_BUDGET is not an integer");
        }
    }
    return -1;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ec::InputError("cannot open " + path + " for writing");
    out << content;
}

std::string join_ints(const std::vector<int>& vs) {
    std::ostringstream s;
    for (size_t i = 0; i < vs.size(); ++i) s << (i ? " " : "") << vs[i];
    return s.str();
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            uint64_t seed, const std::string& base_path, const std::string& out,
            bool dot) {
    ec::Graph g;
    if (family == "subdivide" || family == "attach_pendants") {
        if (base_path.empty()) throw ec::InputError(family + " needs --base <file>");
        ec::Graph base = ec::read_edge_list_file(base_path);
        if (family == "subdivide") {
            if (params.size() != 3) throw ec::InputError("subdivide takes <u> <v> <t>");
            g = ec::subdivide(base, ec::Edge(std::stoi(params[0]), std::stoi(params[1])),
                              std::stoi(params[2]));
        } else {
            if (params.size() != 2) throw ec::InputError("attach_pendants takes <v> <t>");
            g = ec::attach_pendants(base, std::stoi(params[0]), std::stoi(params[1]));
        }
    } else if (family == "sparse_test") {
        if (params.size() != 2) throw ec::InputError("sparse_test takes <8/3|14/5> <Delta>");
        g = ec::sparse_test(ec::parse_discharge_case(params[0]), std::stoi(params[1]), seed);
    } else {
        ec::FamilySpec spec;
        spec.family = family;
        for (const std::string& p : params) spec.params.push_back(std::stol(p));
        spec.seed = seed;
        g = ec::gen(spec);
    }
    write_output(out, dot ? ec::write_dot(g) : ec::write_edge_list(g));
    return kExitOk;
}

int cmd_mad(const std::string& path) {
    ec::Graph g = ec::read_edge_list_file(path);
    ec::MadResult r = ec::mad(g);
    std::cout << ec::to_fraction_string(r.value) << "\n";
    std::cout << "witness " << join_ints(r.witness) << "\n";
    return kExitOk;
}

int cmd_girth(const std::string& path) {
    ec::Graph g = ec::read_edge_list_file(path);
    auto gi = ec::girth(g);
    if (gi)
        std::cout << *gi << "\n";
    else
        std::cout << "inf\n";
    return kExitOk;
}

int cmd_classify(const std::string& path) {
    ec::Graph g = ec::read_edge_list_file(path);
    ec::CoreView cv = ec::core_view(g);
    ec::StructureInfo info = ec::classify(cv.core);
    std::cout << "vertex\tclass\tl_i\tbn_8_3\tbn_14_5\n";
    for (int x = 0; x < cv.core.vertex_count(); ++x) {
        std::ostringstream li;
        bool first = true;
        for (auto [len, cnt] : info.li[x]) {
            li << (first ? "" : ",") << len << ":" << cnt;
            first = false;
        }
        if (first) li << "-";
        std::cout << cv.core_to_old[x] << "\t" << ec::vertex_class_name(info.cls[x]) << "\t"
                  << li.str() << "\t" << info.bn83[x] << "\t" << info.bn145[x] << "\n";
    }
    for (const auto& comp : info.threads.cycle_components) {
        std::cout << "# cycle-component";
        for (int x : comp) std::cout << " " << cv.core_to_old[x];
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_discharge(const std::string& case_name, const std::string& path) {
    ec::Graph g = ec::read_edge_list_file(path);
    ec::DischargeCase which = ec::parse_discharge_case(case_name);
    ec::CoreView cv = ec::core_view(g);
    ec::ChargeLedger led = which == ec::DischargeCase::EightThirds
                               ? ec::discharge_8_3(cv.core)
                               : ec::discharge_14_5(cv.core);
    std::cout << "vertex\tinitial\tfinal\n";
    for (int x = 0; x < cv.core.vertex_count(); ++x)
        std::cout << cv.core_to_old[x] << "\t" << ec::to_fraction_string(led.initial[x])
                  << "\t" << ec::to_fraction_string(led.final[x]) << "\n";
    auto report = ec::deficiency_report(led);
    for (const auto& d : report)
        std::cout << "deficient " << cv.core_to_old[d.vertex] << " shortfall "
                  << ec::to_fraction_string(d.shortfall) << "\n";
    return report.empty() ? kExitOk : kExitPropertyFails;
}

int cmd_verify(const std::string& cls_name, const std::string& graph_path,
               const std::string& coloring_path) {
    ec::Graph g = ec::read_edge_list_file(graph_path);
    ec::ColoringClass cls = ec::parse_class(cls_name);
    ec::PartialColoring phi = ec::read_coloring_file(coloring_path, g);
    auto bad = ec::verify(g, phi, cls);
    if (!bad) {
        std::cout << "ok\n";
        return kExitOk;
    }
    std::cout << "violation class " << ec::class_name(bad->cls) << " color " << bad->color
              << ": " << bad->detail << "\n";
    for (const ec::Edge& e : bad->evidence)
        std::cout << "evidence-edge " << e.u << " " << e.v << "\n";
    if (!bad->cycle.empty()) std::cout << "evidence-cycle " << join_ints(bad->cycle) << "\n";
    return kExitPropertyFails;
}

int cmd_solve(const std::string& cls_name, const std::string& path, long long budget,
              int jobs, bool deterministic, const std::string& witness_out) {
    ec::Graph g = ec::read_edge_list_file(path);
    ec::SolveOptions opt;
    opt.node_budget = budget;
    opt.jobs = deterministic ? 1 : jobs;
    ec::SolveResult r = ec::chromatic_index(g, ec::parse_class(cls_name), opt);
    if (!r.exact) {
        std::cout << "timeout bounds " << r.lower_bound << ".." << r.upper_bound
                  << " nodes " << r.nodes << "\n";
        return kExitTimeout;
    }
    std::cout << "optimum " << r.optimum << " nodes " << r.nodes << " time " << r.seconds
              << "\n";
    if (!witness_out.empty()) write_output(witness_out, ec::write_coloring(g, r.witness));
    return kExitOk;
}

int cmd_color(const std::string& case_name, const std::string& path, bool trace,
              const std::string& out) {
    ec::Graph g = ec::read_edge_list_file(path);
    ec::DischargeCase which = ec::parse_discharge_case(case_name);
    try {
        ec::ColorResult r = ec::color(g, which);
        if (trace)
            for (const std::string& t : r.trace) std::cerr << "step " << t << "\n";
        write_output(out, ec::write_coloring(g, r.coloring));
        return kExitOk;
    } catch (const ec::ColorError& e) {
        if (e.kind == ec::ColorError::Kind::Precondition) {
            std::cerr << "precondition: " << e.what() << "\n";
            std::cerr << "witness " << join_ints(e.witness) << "\n";
            return kExitInputError;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFails;
    }
}

int cmd_hierarchy(const std::string& path, long long budget, int jobs) {
    ec::Graph g = ec::read_edge_list_file(path);
    ec::SolveOptions opt;
    opt.node_budget = budget;
    opt.jobs = jobs;
    std::vector<ec::HierarchyRow> rows;
    try {
        rows = ec::hierarchy(g, opt);
    } catch (const std::logic_error& e) {
        std::cerr << "chain violation: " << e.what() << "\n";
        return kExitPropertyFails;
    }
    bool timeout = false;
    for (const auto& row : rows) {
        if (row.exact)
            std::cout << ec::class_name(row.cls) << "\t" << row.value << "\texact\n";
        else {
            std::cout << ec::class_name(row.cls) << "\t-\tbounds " << row.lo << ".."
                      << row.hi << "\n";
            timeout = true;
        }
    }
    return timeout ? kExitTimeout : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semistrong / uniquely-restricted edge coloring toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string family, base_path, gen_out = "-";
    std::vector<std::string> params;
    uint64_t seed = 0;
    bool dot = false;
    gen->add_option("family", family)->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", seed);
    gen->add_option("--base", base_path, "base graph file (subdivide, attach_pendants)");
    gen->add_option("-o,--output", gen_out);
    gen->add_flag("--dot", dot, "emit DOT instead of edge-list");

    // mad / girth / classify
    std::string mad_path, girth_path, classify_path;
    auto* madc = app.add_subcommand("mad", "exact maximum average degree");
    madc->add_option("graph", mad_path)->required();
    auto* girthc = app.add_subcommand("girth", "length of a shortest cycle");
    girthc->add_option("graph", girth_path)->required();
    auto* classifyc = app.add_subcommand("classify", "core vertex classification");
    classifyc->add_option("graph", classify_path)->required();

    // discharge
    auto* dis = app.add_subcommand("discharge", "run the discharging rules on the core");
    std::string dis_case, dis_path;
    dis->add_option("--case", dis_case, "8/3 or 14/5")->required();
    dis->add_option("graph", dis_path)->required();

    // verify
    auto* ver = app.add_subcommand("verify", "check a coloring against a class");
    std::string ver_class, ver_graph, ver_coloring;
    ver->add_option("--class", ver_class, "proper|acyclic|ur|ss|strong")->required();
    ver->add_option("graph", ver_graph)->required();
    ver->add_option("coloring", ver_coloring)->required();

    // solve
    auto* sol = app.add_subcommand("solve", "exact chromatic index");
    std::string sol_class, sol_graph, sol_witness;
    long long sol_budget = default_budget();
    int sol_jobs = 1;
    bool deterministic = false;
    sol->add_option("--class", sol_class)->required();
    sol->add_option("--budget", sol_budget, "node budget (-1 unlimited)");
    sol->add_option("--jobs", sol_jobs);
    sol->add_flag("--deterministic", deterministic, "force single-threaded search");
    sol->add_option("--witness", sol_witness, "write the optimal coloring here");
    sol->add_option("graph", sol_graph)->required();

    // color
    auto* col = app.add_subcommand("color", "constructive semistrong coloring");
    std::string col_case, col_graph, col_out = "-";
    bool col_trace = false;
    col->add_option("--case", col_case, "8/3 or 14/5")->required();
    col->add_flag("--trace", col_trace, "log the lemma-tagged step chain to stderr");
    col->add_option("-o,--output", col_out);
    col->add_option("graph", col_graph)->required();

    // hierarchy
    auto* hier = app.add_subcommand("hierarchy", "all five chromatic indices");
    std::string hier_graph;
    long long hier_budget = default_budget();
    int hier_jobs = 1;
    hier->add_option("--budget", hier_budget);
    hier->add_option("--jobs", hier_jobs);
    hier->add_option("graph", hier_graph)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(family, params, seed, base_path, gen_out, dot);
        if (madc->parsed()) return cmd_mad(mad_path);
        if (girthc->parsed()) return cmd_girth(girth_path);
        if (classifyc->parsed()) return cmd_classify(classify_path);
        if (dis->parsed()) return cmd_discharge(dis_case, dis_path);
        if (ver->parsed()) return cmd_verify(ver_class, ver_graph, ver_coloring);
        if (sol->parsed())
            return cmd_solve(sol_class, sol_graph, sol_budget, sol_jobs, deterministic,
                             sol_witness);
        if (col->parsed()) return cmd_color(col_case, col_graph, col_trace, col_out);
        if (hier->parsed()) return cmd_hierarchy(hier_graph, hier_budget, hier_jobs);
    } catch (const ec::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFails;
    }
    return kExitInputError;
}
