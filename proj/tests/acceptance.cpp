// Acceptance suite: runs every release criterion at its stated limit and
// prints one PASS/FAIL line per criterion. Exits non-zero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "worked_example.hpp"
#include "rivercross/rivercross.hpp"

using namespace rivercross;

namespace {

struct Criterion {
    std::string label;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& why, const std::string& what) {
    if (!cond && why.empty()) why = what;
    return cond;
}

// --- criterion bodies -------------------------------------------------------

bool capacity_formula(std::string& why) {
    const std::vector<int> expected = {2, 2, 3, 3, 4, 4, 4, 4, 4};  // n = 2..10
    bool ok = true;
    for (int n = 2; n <= 10; ++n)
        ok &= expect(capacity(n) == expected[static_cast<std::size_t>(n - 2)], why,
                     "capacity(" + std::to_string(n) + ")");
    return ok;
}

bool mc_optimal_counts(std::string& why) {
    auto res = shortest_solutions(build_graph(McProblem{3, 2}));
    return expect(res.feasible && res.length == 11 && res.count == 4 &&
                      res.solutions.size() == 4,
                  why, "expected length 11 and 4 optimal solutions, got length " +
                           std::to_string(res.length) + " count " + std::to_string(res.count));
}

bool hw_optimal_count(std::string& why) {
    auto res = shortest_solutions(build_graph(HwProblem{3, 2}));
    return expect(res.feasible && res.count == 486 && res.solutions.size() == 486, why,
                  "expected 486 optimal solutions, got " + std::to_string(res.count));
}

bool fiber_count(std::string& why) {
    auto fiber = enumerate_lifts(McProblem{3, 2}, fixtures::mc_solution());
    return expect(fiber.path_count == 216, why,
                  "expected fiber 216, got " + std::to_string(fiber.path_count));
}

bool infeasible_components(std::string& why) {
    bool ok = true;
    for (auto [n, b] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}, {7, 3}}) {
        auto g = build_graph(McProblem{n, b});
        auto component = reachable_component(g);
        bool goal_reached =
            std::binary_search(component.begin(), component.end(), g.goal_index);
        ok &= expect(!goal_reached, why,
                     "goal reachable at n=" + std::to_string(n) + " b=" + std::to_string(b));
        ok &= expect(component.size() == static_cast<std::size_t>(2 * (n + b) - 1), why,
                     "component size " + std::to_string(component.size()) + " at n=" +
                         std::to_string(n) + " b=" + std::to_string(b));
    }
    return ok;
}

bool feasible_instances(std::string& why) {
    bool ok = true;
    for (auto [n, b] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {6, 4}}) {
        auto mc = shortest_solutions(build_graph(McProblem{n, b}));
        ok &= expect(mc.feasible && mc.count > 0, why,
                     "mc n=" + std::to_string(n) + " b=" + std::to_string(b) + " not solvable");
        auto hw = shortest_solutions(build_graph(HwProblem{n, b}));
        ok &= expect(hw.feasible && hw.count > 0, why,
                     "hw n=" + std::to_string(n) + " b=" + std::to_string(b) + " not solvable");
    }
    return ok;
}

bool bijection_exhaustive(std::string& why) {
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        auto mc_states = enumerate_mc_states(n);
        for (const auto& s : mc_states)
            ok &= expect(project(section(s)) == s, why, "project(section) != id at " + to_text(s));
        std::set<HwState> reps;
        for (const auto& s : enumerate_hw_states(n)) reps.insert(orbit_rep(s));
        ok &= expect(reps.size() == mc_states.size(), why,
                     "orbit count mismatch at n=" + std::to_string(n));
    }
    return ok;
}

bool lifting_soundness(std::string& why) {
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        McProblem p{n, capacity(n)};
        auto res = shortest_solutions(build_graph(p));
        ok &= expect(res.feasible, why, "no optimal solutions at n=" + std::to_string(n));
        for (const auto& sol : res.solutions) {
            LiftResult lifted = lift_solution(p, sol);
            ok &= expect(project_path(lifted.path) == sol, why,
                         "lift does not project back at n=" + std::to_string(n));
            ok &= expect(all_rotations(lifted.trace), why,
                         "non-rotation sorting permutation at n=" + std::to_string(n));
            ok &= expect(is_solution(HwProblem{n, p.b}, lifted.path), why,
                         "lift is not a solution at n=" + std::to_string(n));
        }
    }
    return ok;
}

bool action_laws(std::string& why) {
    bool ok = true;
    {  // exhaustive for n = 3
        HwProblem p{3, 2};
        auto states = p.states();
        const auto& perms = all_permutations(3);
        for (const auto& s : states) {
            ok &= expect(act(Permutation::identity(3), s) == s, why, "identity law");
            for (const auto& p1 : perms)
                for (const auto& p2 : perms)
                    ok &= expect(act(p1.after(p2), s) == act(p1, act(p2, s)), why,
                                 "composition law at " + to_text(s));
        }
        for (const auto& s : states) {
            auto succ = p.successors(s);
            for (const auto& pi : perms) {
                auto mapped = p.successors(act(pi, s));
                ok &= expect(mapped.size() == succ.size(), why, "equivariance size");
                for (const auto& [m, t] : succ) {
                    bool found = false;
                    for (const auto& [m2, t2] : mapped)
                        if (m2 == act(pi, m) && t2 == act(pi, t)) found = true;
                    ok &= expect(found, why, "equivariance at " + to_text(s));
                }
            }
        }
    }
    {  // randomized for n = 5, fixed seed
        HwProblem p{5, 3};
        auto states = p.states();
        const auto& perms = all_permutations(5);
        std::mt19937 rng(424243);
        std::uniform_int_distribution<std::size_t> pick_state(0, states.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_perm(0, perms.size() - 1);
        for (int i = 0; i < 10000; ++i) {
            const auto& s = states[pick_state(rng)];
            const auto& p1 = perms[pick_perm(rng)];
            const auto& p2 = perms[pick_perm(rng)];
            ok &= expect(act(p1.after(p2), s) == act(p1, act(p2, s)), why,
                         "composition law (n=5)");
        }
        for (int i = 0; i < 10000; ++i) {
            const auto& s = states[pick_state(rng)];
            auto succ = p.successors(s);
            if (succ.empty()) continue;
            std::uniform_int_distribution<std::size_t> pick_edge(0, succ.size() - 1);
            const auto& [m, t] = succ[pick_edge(rng)];
            const auto& pi = perms[pick_perm(rng)];
            auto mapped = p.successors(act(pi, s));
            bool found = false;
            for (const auto& [m2, t2] : mapped)
                if (m2 == act(pi, m) && t2 == act(pi, t)) found = true;
            ok &= expect(found, why, "equivariance (n=5)");
        }
    }
    return ok;
}

bool category_checks(std::string& why) {
    auto hw = build_graph(HwProblem{3, 2});
    auto mc = build_graph(McProblem{3, 2});
    bool ok = true;

    auto hw_laws = check_category_laws(PathCategory<HwProblem>(hw, 6), 4);
    ok &= expect(hw_laws.ok(), why, "identity-labelled category laws");
    auto mc_laws = check_category_laws(PathCategory<McProblem>(mc, 6), 4);
    ok &= expect(mc_laws.ok(), why, "headcount category laws");

    auto quotient = check_quotient_functor(PathCategory<HwProblem>(hw, 6));
    ok &= expect(quotient.ok(), why, "quotient functor laws");
    auto equivalence = check_equivalence_functor(PathCategory<HwProblem>(hw, 6));
    ok &= expect(equivalence.ok(), why, "equivalence functor laws");
    auto orbit = check_orbit_category(PathCategory<HwProblem>(hw, 6), 4, 17);
    ok &= expect(orbit.ok(), why, "orbit category laws");

    auto report = check_equivalence(hw, mc, 6);
    ok &= expect(report.full, why, "equivalence: not full");
    ok &= expect(report.faithful, why, "equivalence: not faithful");
    ok &= expect(report.essentially_surjective, why, "equivalence: not essentially surjective");
    return ok;
}

bool cross_count(std::string& why) {
    McProblem p{3, 2};
    auto mc = shortest_solutions(build_graph(p));
    std::uint64_t total = 0;
    for (const auto& sol : mc.solutions) total += enumerate_lifts(p, sol).path_count;
    return expect(total == 486, why, "fiber sum " + std::to_string(total) + " != 486");
}

bool figure_exports(std::string& why) {
    bool ok = true;

    // reachable component of the unsolvable four-couple instance: 11 states,
    // 11 transitions (listed here independently of the search code)
    auto g = build_graph(McProblem{4, 2});
    auto component = reachable_component(g);
    ok &= expect(component.size() == 11, why, "component size");

    std::set<std::string> nodes;
    for (int v : component) nodes.insert(to_text(g.vertices[static_cast<std::size_t>(v)]));
    std::set<std::string> expected_nodes = {
        "[(4,4)|(0,0):L]", "[(3,3)|(1,1):L]", "[(3,3)|(1,1):R]", "[(2,2)|(2,2):R]",
        "[(3,4)|(1,0):L]", "[(3,4)|(1,0):R]", "[(2,4)|(2,0):L]", "[(2,4)|(2,0):R]",
        "[(1,4)|(3,0):L]", "[(1,4)|(3,0):R]", "[(0,4)|(4,0):R]"};
    ok &= expect(nodes == expected_nodes, why, "component states differ from Figure 3");

    // undirected edges, written from their boat-left endpoint
    std::set<std::string> edges;
    for (int v : component) {
        const auto& s = g.vertices[static_cast<std::size_t>(v)];
        if (s.boat != Side::Left) continue;
        for (const auto& [m, w] : g.adj[static_cast<std::size_t>(v)])
            edges.insert(to_text(s) + " " + to_text(m) + " " +
                         to_text(g.vertices[static_cast<std::size_t>(w)]));
    }
    std::set<std::string> expected_edges = {
        "[(4,4)|(0,0):L] {(1,0):L} [(3,4)|(1,0):R]",
        "[(4,4)|(0,0):L] {(2,0):L} [(2,4)|(2,0):R]",
        "[(4,4)|(0,0):L] {(1,1):L} [(3,3)|(1,1):R]",
        "[(3,3)|(1,1):L] {(1,1):L} [(2,2)|(2,2):R]",
        "[(3,4)|(1,0):L] {(0,1):L} [(3,3)|(1,1):R]",
        "[(3,4)|(1,0):L] {(1,0):L} [(2,4)|(2,0):R]",
        "[(3,4)|(1,0):L] {(2,0):L} [(1,4)|(3,0):R]",
        "[(2,4)|(2,0):L] {(0,2):L} [(2,2)|(2,2):R]",
        "[(2,4)|(2,0):L] {(1,0):L} [(1,4)|(3,0):R]",
        "[(2,4)|(2,0):L] {(2,0):L} [(0,4)|(4,0):R]",
        "[(1,4)|(3,0):L] {(1,0):L} [(0,4)|(4,0):R]"};
    ok &= expect(edges == expected_edges, why, "component edges differ from Figure 3");

    std::string dot = to_dot(g, component, "component");
    std::size_t node_lines = 0;
    std::istringstream lines(dot);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind("  \"[", 0) == 0 && line.find(" -- ") == std::string::npos) ++node_lines;
    ok &= expect(node_lines == 11, why, "DOT node count");

    // fiber lattice of the worked example: 12 layers, orbit-sized
    auto fiber = enumerate_lifts(McProblem{3, 2}, fixtures::mc_solution());
    std::vector<std::size_t> sizes;
    for (const auto& layer : fiber.layers) sizes.push_back(layer.size());
    ok &= expect(sizes == std::vector<std::size_t>{1, 3, 3, 1, 3, 3, 3, 3, 1, 3, 3, 1}, why,
                 "fiber layer sizes");
    std::string fiber_dot = to_dot(fiber);
    std::size_t ranks = 0;
    for (std::size_t pos = 0; (pos = fiber_dot.find("rank=same", pos)) != std::string::npos;
         pos += 9)
        ++ranks;
    ok &= expect(ranks == 12, why, "fiber DOT layer count");
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"capacity formula matches for n = 2..10", 1.0, capacity_formula},
        {"mc n=3 b=2: optimal length 11, exactly 4 solutions", 1.0, mc_optimal_counts},
        {"hw n=3 b=2: exactly 486 optimal solutions", 10.0, hw_optimal_count},
        {"fiber of the worked 11-step solution has 216 lifts", 5.0, fiber_count},
        {"(4,2),(5,2),(6,3),(7,3): goal unreachable, component 2(n+b)-1", 4.0,
         infeasible_components},
        {"(4,3),(5,3),(6,4) all solvable, both flavors", 30.0, feasible_instances},
        {"projection/section bijection, exhaustive n = 2..5", 5.0, bijection_exhaustive},
        {"lifting sound on every optimal solution, n = 2..5", 30.0, lifting_soundness},
        {"group action and equivariance laws (n=3 exhaustive, n=5 randomized)", 10.0,
         action_laws},
        {"category checks at n=3 b=2 L=6 (laws, functors, equivalence)", 60.0, category_checks},
        {"fiber counts over the 4 optimal solutions sum to 486", 30.0, cross_count},
        {"figure exports: 11-state component, 12-layer fiber lattice", 10.0, figure_exports},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string why;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.limit_seconds) {
            ok = false;
            why = "exceeded time limit of " + std::to_string(c.limit_seconds) + "s";
        }
        if (!ok) ++failures;
        std::printf("[%2zu/%zu] %s (%.2fs, limit %.0fs) %s%s%s\n", i + 1, criteria.size(),
                    ok ? "PASS" : "FAIL", seconds, c.limit_seconds, c.label.c_str(),
                    why.empty() ? "" : " -- ", why.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
    else
        std::printf("ACCEPTANCE: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
