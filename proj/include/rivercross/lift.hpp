#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rivercross/path.hpp"
#include "rivercross/symmetry.hpp"

namespace rivercross {

// ---------------------------------------------------------------------------
// Lifting: reconstructing an identity-labelled (HW) walk from a headcount
// (MC) walk. Before each step the whole prefix is relabelled by a sorting
// permutation so that the departure bank holds the lowest-numbered wives in
// order; the step is then executed on index blocks. The sorting permutations
// are always cyclic shifts (rotations of the n-gon).

struct LiftResult {
    HwPath path;
    std::vector<Permutation> trace;  // sorting permutation applied before each step
};

namespace detail {

/// The permutation that renumbers wives so the departure bank gets 1..p in
/// order and the arrival bank gets p+1..n: inverse of t -> i_t where i_1..i_p
/// list the departure bank's wives ascending and i_{p+1}..i_n the arrival
/// bank's.
inline Permutation sorting_permutation(const HwState& s, Side departure) {
    std::vector<int> listing;
    listing.reserve(static_cast<std::size_t>(s.n));
    for (const Person& p : s.bank(departure).people())
        if (p.role == Role::Wife) listing.push_back(p.index);
    for (const Person& p : s.bank(other(departure)).people())
        if (p.role == Role::Wife) listing.push_back(p.index);
    return Permutation(std::move(listing)).inverse();
}

/// Executes one MC step on a departure-sorted HW state. `sorted` must have
/// wives 1..x on the departure bank; the block move matching the step's
/// trip shape is returned applied.
inline std::pair<HwMove, HwState> block_step(const HwState& sorted, const McMove& move) {
    Side dep_side = move.from;
    const PersonSet& dep = sorted.bank(dep_side);
    int n = sorted.n;
    int x = dep.wife_count();
    int c = move.cannibals;
    int m = move.missionaries;

    PersonSet load;
    if (dep.husband_count() == 0) {
        if (m != 0 || c < 1 || c > x)
            throw std::invalid_argument("lift: step does not match the departure bank");
        load = PersonSet::wives_block(x - c + 1, x);
    } else if (dep.husband_count() == n) {
        if (m == 0) {
            load = PersonSet::wives_block(x - c + 1, x);
        } else if (c == 0 && m == n) {
            load = PersonSet::husbands_block(1, n);
        } else if (m == (n - x) + c) {
            load = PersonSet::wives_block(x - c + 1, x)
                       .unite(PersonSet::husbands_block(x - c + 1, n));
        } else {
            throw std::invalid_argument("lift: step does not match the departure bank");
        }
    } else {
        if (m == x) {
            load = PersonSet::wives_block(x - c + 1, x)
                       .unite(PersonSet::husbands_block(1, x));
        } else if (m == c && c > 0) {
            load = PersonSet::wives_block(x - c + 1, x)
                       .unite(PersonSet::husbands_block(x - c + 1, x));
        } else {
            throw std::invalid_argument("lift: step does not match the departure bank");
        }
    }
    HwMove hw_move{load, dep_side};
    return {hw_move, apply(sorted, hw_move)};
}

}  // namespace detail

/// Lifts an MC walk to an HW walk of the same length, starting from the
/// canonical representative of the first state. Each lifted state projects
/// back onto its MC counterpart.
inline LiftResult lift_path(const McProblem& problem, const McPath& mc) {
    if (!valid_walk(problem, mc))
        throw std::invalid_argument("lift: input is not a valid walk");
    LiftResult out;
    out.path = HwPath::single(section(mc.states[0]));
    for (std::size_t i = 0; i < mc.moves.size(); ++i) {
        Permutation pi = detail::sorting_permutation(out.path.states.back(), mc.moves[i].from);
        out.path = act(pi, out.path);  // rewrite the whole prefix, then step
        out.trace.push_back(pi);
        auto [hw_move, next] = detail::block_step(out.path.states.back(), mc.moves[i]);
        if (project(next) != mc.states[i + 1])
            throw std::invalid_argument("lift: step " + std::to_string(i + 1) +
                                        " does not project onto the given walk");
        out.path.append(hw_move, next);
    }
    return out;
}

/// Lifts a full MC solution; rejects inputs that are not solutions.
inline LiftResult lift_solution(const McProblem& problem, const McPath& mc) {
    if (!is_solution(problem, mc))
        throw std::invalid_argument("lift: input is not a solution (initial to goal, no repeats)");
    return lift_path(problem, mc);
}

inline bool all_rotations(const std::vector<Permutation>& trace) {
    for (const Permutation& pi : trace)
        if (!pi.rotation_offset().has_value()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The fiber of an MC solution: every HW solution that projects onto it.
// Layer j holds the orbit of the j-th state's canonical representative;
// edges keep exactly the HW transitions whose move projects onto the j-th
// MC move. Path counting is a running product over the layers.

struct FiberLattice {
    std::vector<std::vector<HwState>> layers;
    // edges[j]: layer j -> layer j+1, as (index in layer j, move, index in layer j+1)
    std::vector<std::vector<std::tuple<int, HwMove, int>>> edges;
    std::uint64_t path_count = 0;
};

inline FiberLattice enumerate_lifts(const McProblem& problem, const McPath& mc) {
    if (!valid_walk(problem, mc))
        throw std::invalid_argument("enumerate_lifts: input is not a valid walk");
    FiberLattice out;
    out.layers.reserve(mc.states.size());
    for (const McState& s : mc.states) out.layers.push_back(orbit_of(section(s)).members);

    HwProblem hw{problem.n, problem.b};
    for (std::size_t j = 0; j + 1 < out.layers.size(); ++j) {
        std::vector<std::tuple<int, HwMove, int>> level;
        const auto& next_layer = out.layers[j + 1];
        for (std::size_t a = 0; a < out.layers[j].size(); ++a) {
            for (const auto& [move, t] : hw.successors(out.layers[j][a])) {
                if (project(move) != mc.moves[j]) continue;
                auto it = std::lower_bound(next_layer.begin(), next_layer.end(), t);
                if (it != next_layer.end() && *it == t)
                    level.emplace_back(static_cast<int>(a), move,
                                       static_cast<int>(it - next_layer.begin()));
            }
        }
        std::sort(level.begin(), level.end());
        out.edges.push_back(std::move(level));
    }

    std::vector<std::uint64_t> ways(out.layers.front().size(), 1);
    for (std::size_t j = 0; j < out.edges.size(); ++j) {
        std::vector<std::uint64_t> next(out.layers[j + 1].size(), 0);
        for (const auto& [a, move, b] : out.edges[j])
            next[static_cast<std::size_t>(b)] += ways[static_cast<std::size_t>(a)];
        ways = std::move(next);
    }
    for (std::uint64_t w : ways) out.path_count += w;
    return out;
}

/// Materializes the lattice's paths (all lifts), canonical order, capped.
inline std::vector<HwPath> fiber_paths(const FiberLattice& lattice, const Budget& budget = {}) {
    std::vector<HwPath> out;
    if (lattice.layers.empty()) return out;
    HwPath prefix;
    auto dfs = [&](auto&& self, std::size_t layer, int idx) -> void {
        if (layer + 1 == lattice.layers.size()) {
            if (out.size() >= budget.paths)
                throw budget_error("fiber_paths: path budget exceeded");
            out.push_back(prefix);
            return;
        }
        for (const auto& [a, move, b] : lattice.edges[layer]) {
            if (a != idx) continue;
            prefix.append(move, lattice.layers[layer + 1][static_cast<std::size_t>(b)]);
            self(self, layer + 1, b);
            prefix.states.pop_back();
            prefix.moves.pop_back();
        }
    };
    for (std::size_t i = 0; i < lattice.layers.front().size(); ++i) {
        prefix = HwPath::single(lattice.layers.front()[i]);
        dfs(dfs, 0, static_cast<int>(i));
    }
    return out;
}

}  // namespace rivercross
