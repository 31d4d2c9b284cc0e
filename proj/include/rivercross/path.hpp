#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "rivercross/model.hpp"

namespace rivercross {

/// An alternating sequence of states and moves: states[0] -f[0]-> states[1]
/// ... A path of length 0 (one state, no moves) is the identity walk used by
/// the category layer. Solutions are paths from the initial to the goal state
/// that never revisit a state.
template <class Problem>
struct Path {
    using State = typename Problem::State;
    using Move = typename Problem::Move;

    std::vector<State> states;
    std::vector<Move> moves;

    auto operator<=>(const Path&) const = default;

    int length() const { return static_cast<int>(moves.size()); }
    const State& source() const { return states.front(); }
    const State& target() const { return states.back(); }

    static Path single(const State& s) { return {{s}, {}}; }

    void append(const Move& m, const State& next) {
        moves.push_back(m);
        states.push_back(next);
    }
};

using HwPath = Path<HwProblem>;
using McPath = Path<McProblem>;

/// True when every step is an admissible transition of `p`.
template <class Problem>
bool valid_walk(const Problem& p, const Path<Problem>& path) {
    if (path.states.empty() || path.states.size() != path.moves.size() + 1) return false;
    for (const auto& s : path.states)
        if (s.n != p.n || !s.admissible()) return false;
    for (std::size_t i = 0; i < path.moves.size(); ++i) {
        bool found = false;
        for (const auto& [m, t] : p.successors(path.states[i]))
            if (m == path.moves[i] && t == path.states[i + 1]) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

template <class Problem>
bool has_repeated_state(const Path<Problem>& path) {
    for (std::size_t i = 0; i < path.states.size(); ++i)
        for (std::size_t j = i + 1; j < path.states.size(); ++j)
            if (path.states[i] == path.states[j]) return true;
    return false;
}

/// A solution is a simple valid walk from the initial state to the goal.
template <class Problem>
bool is_solution(const Problem& p, const Path<Problem>& path) {
    return valid_walk(p, path) && path.source() == p.initial() &&
           path.target() == p.goal() && !has_repeated_state(path);
}

template <class Problem>
std::string to_text(const Path<Problem>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.states.size(); ++i) {
        if (i > 0) out += " " + to_text(path.moves[i - 1]) + " ";
        out += to_text(path.states[i]);
    }
    return out;
}

/// Reconstructs the move sequence of a states-only walk (each move is the
/// bank difference, so it is uniquely determined).
template <class Problem>
Path<Problem> path_from_states(const Problem& p, const std::vector<typename Problem::State>& states) {
    if (states.empty()) throw std::invalid_argument("path_from_states: no states");
    Path<Problem> out = Path<Problem>::single(states[0]);
    for (std::size_t i = 1; i < states.size(); ++i) {
        bool found = false;
        for (const auto& [m, t] : p.successors(states[i - 1])) {
            if (t == states[i]) {
                out.append(m, t);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("path_from_states: no admissible move from " +
                                        to_text(states[i - 1]) + " to " + to_text(states[i]) +
                                        " (step " + std::to_string(i) + ")");
    }
    return out;
}

}  // namespace rivercross
