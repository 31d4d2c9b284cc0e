// Command-line surface: solve, lift, orbit, export, catcheck.
// Exit codes: 0 success / feasible, 1 invalid input or budget exceeded,
// 2 infeasible instance.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rivercross/rivercross.hpp"

using namespace rivercross;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
    out << text;
}

Flavor parse_flavor(const std::string& name) {
    if (name == "hw") return Flavor::Hw;
    if (name == "mc") return Flavor::Mc;
    throw std::invalid_argument("flavor must be hw or mc");
}

struct SolveOptions {
    std::string flavor = "mc";
    int n = 3;
    int b = 0;  // 0 -> capacity(n)
    bool all = false;
    int max_len = -1;
    bool show_solutions = false;
    std::string format = "text";
    std::string output;
    int jobs = 1;
    int cap = 8;
    std::size_t path_cap = Budget{}.paths;
};

template <class Problem>
int run_solve(const SolveOptions& opt) {
    Budget budget;
    budget.couples = opt.cap;
    budget.paths = opt.path_cap;
    auto graph = build_graph(Problem{opt.n, opt.b}, budget);

    if (!is_feasible(graph)) {
        auto component = reachable_component(graph);
        if (opt.format == "json") {
            json j = {{"n", opt.n},     {"b", opt.b},
                      {"flavor", opt.flavor}, {"feasible", false},
                      {"component", component.size()}};
            emit(j.dump(2) + "\n", opt.output);
        } else {
            emit("unreachable; component=" + std::to_string(component.size()) + "\n",
                 opt.output);
        }
        return kExitInfeasible;
    }

    if (opt.all) {
        if (opt.max_len < 0)
            throw std::invalid_argument("--all needs --max-len");
        auto solutions = enumerate_solutions(graph, opt.max_len, budget, opt.jobs);
        if (opt.format == "json") {
            json j = solutions_document(graph.problem, opt.max_len,
                                        static_cast<std::uint64_t>(solutions.size()), solutions);
            j.erase("length");
            j["max_len"] = opt.max_len;
            emit(j.dump(2) + "\n", opt.output);
        } else {
            std::string out = "max-len=" + std::to_string(opt.max_len) +
                              " count=" + std::to_string(solutions.size()) + "\n";
            if (opt.show_solutions)
                for (const auto& s : solutions) out += to_text(s) + "\n";
            emit(out, opt.output);
        }
        return kExitOk;
    }

    auto res = shortest_solutions(graph);
    if (opt.format == "json") {
        emit(solutions_document(graph.problem, res.length, res.count, res.solutions).dump(2) +
                 "\n",
             opt.output);
    } else {
        std::string out = "length=" + std::to_string(res.length) +
                          " count=" + std::to_string(res.count) + "\n";
        if (opt.show_solutions)
            for (const auto& s : res.solutions) out += to_text(s) + "\n";
        emit(out, opt.output);
    }
    return kExitOk;
}

struct LiftOptions {
    std::string file;
    bool fiber = false;
    std::string format = "text";
    std::string output;
};

McPath read_mc_solution_file(const std::string& path, McProblem& problem_out) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open solution file: " + path);
    json doc = json::parse(in);
    if (!doc.contains("n")) throw std::invalid_argument("solution file needs an \"n\" field");
    int n = doc.at("n").get<int>();
    int b = doc.contains("b") ? doc.at("b").get<int>() : capacity(n);
    if (doc.contains("flavor") && doc.at("flavor").get<std::string>() != "mc")
        throw std::invalid_argument("lift expects a headcount (mc) solution file");
    if (!doc.contains("solution"))
        throw std::invalid_argument("solution file needs a \"solution\" array");
    problem_out = McProblem{n, b};
    return mc_path_from_json(problem_out, doc.at("solution"));
}

int run_lift(const LiftOptions& opt) {
    McProblem problem{3, 2};
    McPath mc = read_mc_solution_file(opt.file, problem);
    LiftResult lifted = lift_solution(problem, mc);

    std::optional<FiberLattice> fiber;
    if (opt.fiber || opt.format == "dot") fiber = enumerate_lifts(problem, mc);

    if (opt.format == "dot") {
        emit(to_dot(*fiber), opt.output);
        return kExitOk;
    }
    if (opt.format == "json") {
        json j;
        j["n"] = problem.n;
        j["b"] = problem.b;
        j["solution"] = to_json(lifted.path);
        j["trace"] = json::array();
        for (const auto& pi : lifted.trace) j["trace"].push_back(to_text(pi));
        if (fiber) {
            json sizes = json::array();
            for (const auto& layer : fiber->layers) sizes.push_back(layer.size());
            j["fiber"] = {{"count", fiber->path_count}, {"layers", sizes}};
        }
        emit(j.dump(2) + "\n", opt.output);
        return kExitOk;
    }

    std::string out;
    for (std::size_t i = 0; i < lifted.path.states.size(); ++i) {
        if (i > 0) out += "  " + to_text(lifted.path.moves[i - 1]) + "\n";
        out += to_text(lifted.path.states[i]) + "\n";
    }
    out += "trace=";
    for (std::size_t i = 0; i < lifted.trace.size(); ++i) {
        if (i > 0) out += ' ';
        out += to_text(lifted.trace[i]);
    }
    out += "\n";
    if (fiber) out += "fiber=" + std::to_string(fiber->path_count) + "\n";
    emit(out, opt.output);
    return kExitOk;
}

int run_orbit(const std::string& state_text, const std::string& output) {
    HwState s = parse_hw_state(state_text);
    Orbit o = orbit_of(s);
    std::string out;
    for (const auto& m : o.members) out += to_text(m) + "\n";
    out += "size=" + std::to_string(o.size()) + "\n";
    out += "representative=" + to_text(o.representative) + "\n";
    emit(out, output);
    return kExitOk;
}

struct ExportOptions {
    std::string flavor = "mc";
    int n = 3;
    int b = 0;
    bool graph = false;
    bool component = false;
    bool optimal = false;
    std::string format = "dot";
    std::string output;
    int cap = 8;
};

template <class Problem>
int run_export(const ExportOptions& opt) {
    Budget budget;
    budget.couples = opt.cap;
    auto graph = build_graph(Problem{opt.n, opt.b}, budget);

    std::vector<int> keep;
    if (opt.component) {
        keep = reachable_component(graph);
    } else if (!opt.optimal) {
        keep.resize(graph.vertices.size());
        for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
    }

    if (opt.optimal) {
        if (!is_feasible(graph)) {
            emit("unreachable; no optimal solutions\n", opt.output);
            return kExitInfeasible;
        }
        auto sub = optimal_subgraph(graph);
        if (opt.format == "json") {
            json j = {{"n", opt.n}, {"b", opt.b}, {"flavor", opt.flavor}};
            j["vertices"] = json::array();
            for (int v : sub.vertices)
                j["vertices"].push_back(to_text(graph.vertices[static_cast<std::size_t>(v)]));
            j["edges"] = json::array();
            for (const auto& [a, m, b2] : sub.edges)
                j["edges"].push_back({to_text(graph.vertices[static_cast<std::size_t>(a)]),
                                      to_text(m),
                                      to_text(graph.vertices[static_cast<std::size_t>(b2)])});
            emit(j.dump(2) + "\n", opt.output);
        } else {
            emit(to_dot(graph, sub), opt.output);
        }
        return kExitOk;
    }

    if (opt.format == "json") {
        json j = {{"n", opt.n}, {"b", opt.b}, {"flavor", opt.flavor}};
        j["vertices"] = json::array();
        for (int v : keep)
            j["vertices"].push_back(to_text(graph.vertices[static_cast<std::size_t>(v)]));
        j["edges"] = json::array();
        std::set<int> kept(keep.begin(), keep.end());
        for (int v : keep)
            for (const auto& [m, w] : graph.adj[static_cast<std::size_t>(v)])
                if (kept.count(w))
                    j["edges"].push_back({to_text(graph.vertices[static_cast<std::size_t>(v)]),
                                          to_text(m),
                                          to_text(graph.vertices[static_cast<std::size_t>(w)])});
        emit(j.dump(2) + "\n", opt.output);
    } else {
        emit(to_dot(graph, keep, opt.component ? "component" : "states"), opt.output);
    }
    return kExitOk;
}

struct CatcheckOptions {
    int n = 3;
    int b = 0;
    int bound = 6;
    int assoc_len = 4;
    std::uint64_t seed = 17;
    int jobs = 1;
    std::string format = "json";
    std::string output;
};

int run_catcheck(const CatcheckOptions& opt) {
    auto hw = build_graph(HwProblem{opt.n, opt.b});
    auto mc = build_graph(McProblem{opt.n, opt.b});

    std::vector<LawReport> laws;
    laws.push_back(check_category_laws(PathCategory<HwProblem>(hw, opt.bound), opt.assoc_len));
    laws.push_back(check_category_laws(PathCategory<McProblem>(mc, opt.bound), opt.assoc_len));
    laws.push_back(check_quotient_functor(PathCategory<HwProblem>(hw, opt.bound)));
    laws.push_back(check_equivalence_functor(PathCategory<HwProblem>(hw, opt.bound)));
    laws.push_back(check_orbit_category(PathCategory<HwProblem>(hw, opt.bound), opt.assoc_len,
                                        opt.seed));
    auto report = check_equivalence(hw, mc, opt.bound, opt.jobs);

    bool laws_ok = true;
    for (const auto& l : laws) laws_ok &= l.ok();

    if (opt.format == "json") {
        emit(to_json(report).dump(2) + "\n", opt.output);
    } else {
        std::string out;
        for (const auto& l : laws)
            out += l.name + ": " + (l.ok() ? "ok" : "VIOLATED") + " (" +
                   std::to_string(l.checked) + " checked)\n";
        out += std::string("full=") + (report.full ? "true" : "false") +
               " faithful=" + (report.faithful ? "true" : "false") +
               " essentially_surjective=" + (report.essentially_surjective ? "true" : "false") +
               "\n";
        emit(out, opt.output);
    }
    for (const auto& l : laws)
        for (const auto& v : l.violations) std::cerr << l.name << ": " << v << "\n";
    return laws_ok && report.ok() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"River-crossing toolkit: jealous husbands and missionaries-and-cannibals"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "count and list optimal solutions");
    solve->add_option("--flavor", solve_opt.flavor, "problem flavor")
        ->check(CLI::IsMember({"hw", "mc"}))
        ->required();
    solve->add_option("-n", solve_opt.n, "number of couples / pairs")->required();
    solve->add_option("-b", solve_opt.b, "boat capacity (default: smallest solvable)");
    solve->add_flag("--all", solve_opt.all, "enumerate all simple solutions up to --max-len");
    solve->add_option("--max-len", solve_opt.max_len, "length cap for --all");
    solve->add_flag("--show-solutions", solve_opt.show_solutions, "print each solution");
    solve->add_option("--format", solve_opt.format)->check(CLI::IsMember({"text", "json"}));
    solve->add_option("-o,--output", solve_opt.output, "write to a file instead of stdout");
    solve->add_option("--jobs", solve_opt.jobs, "worker threads for enumeration");
    solve->add_option("--state-cap", solve_opt.cap, "largest accepted n");
    solve->add_option("--path-cap", solve_opt.path_cap, "enumeration budget for --all");

    LiftOptions lift_opt;
    auto* lift = app.add_subcommand("lift", "lift a headcount solution to identities");
    lift->add_option("file", lift_opt.file, "JSON solution file")->required();
    lift->add_flag("--fiber", lift_opt.fiber, "also count and layer all lifts");
    lift->add_option("--format", lift_opt.format)->check(CLI::IsMember({"text", "json", "dot"}));
    lift->add_option("-o,--output", lift_opt.output);

    std::string orbit_state;
    std::string orbit_output;
    auto* orbit = app.add_subcommand("orbit", "list the relabelling orbit of a state");
    orbit->add_option("state", orbit_state, "state text, e.g. \"[w3 h1 h2 h3 | w1 w2 : R]\"")
        ->required();
    orbit->add_option("-o,--output", orbit_output);

    ExportOptions export_opt;
    auto* exp = app.add_subcommand("export", "emit state graphs as DOT or JSON");
    exp->add_option("--flavor", export_opt.flavor)
        ->check(CLI::IsMember({"hw", "mc"}))
        ->required();
    exp->add_option("-n", export_opt.n)->required();
    exp->add_option("-b", export_opt.b);
    exp->add_flag("--graph", export_opt.graph, "full state space (default)");
    exp->add_flag("--component", export_opt.component, "reachable component only");
    exp->add_flag("--optimal", export_opt.optimal, "union of all optimal solutions");
    exp->add_option("--format", export_opt.format)->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("-o,--output", export_opt.output);
    exp->add_option("--state-cap", export_opt.cap);

    CatcheckOptions cat_opt;
    auto* cat = app.add_subcommand("catcheck", "machine-check the category claims");
    cat->add_option("-n", cat_opt.n);
    cat->add_option("-b", cat_opt.b);
    cat->add_option("-L", cat_opt.bound, "path length bound");
    cat->add_option("--assoc-len", cat_opt.assoc_len, "length bound for associativity triples");
    cat->add_option("--seed", cat_opt.seed, "seed for sampled checks");
    cat->add_option("--jobs", cat_opt.jobs);
    cat->add_option("--format", cat_opt.format)->check(CLI::IsMember({"json", "text"}));
    cat->add_option("-o,--output", cat_opt.output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (solve_opt.b == 0) solve_opt.b = capacity(solve_opt.n);
            return parse_flavor(solve_opt.flavor) == Flavor::Hw
                       ? run_solve<HwProblem>(solve_opt)
                       : run_solve<McProblem>(solve_opt);
        }
        if (lift->parsed()) return run_lift(lift_opt);
        if (orbit->parsed()) return run_orbit(orbit_state, orbit_output);
        if (exp->parsed()) {
            if (export_opt.b == 0) export_opt.b = capacity(export_opt.n);
            if (export_opt.component + export_opt.optimal + export_opt.graph > 1)
                throw std::invalid_argument("pick one of --graph, --component, --optimal");
            return parse_flavor(export_opt.flavor) == Flavor::Hw
                       ? run_export<HwProblem>(export_opt)
                       : run_export<McProblem>(export_opt);
        }
        if (cat->parsed()) {
            if (cat_opt.b == 0) cat_opt.b = capacity(cat_opt.n);
            return run_catcheck(cat_opt);
        }
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
