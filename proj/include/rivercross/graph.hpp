#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <vector>

#include "rivercross/budget.hpp"
#include "rivercross/model.hpp"

namespace rivercross {

/// The full admissible state space of one instance: vertices in canonical
/// order, adjacency lists sorted by move. Immutable after construction.
template <class Problem>
struct StateGraph {
    using State = typename Problem::State;
    using Move = typename Problem::Move;

    Problem problem;
    std::vector<State> vertices;
    std::vector<std::vector<std::pair<Move, int>>> adj;
    int initial_index = -1;
    int goal_index = -1;

    int index_of(const State& s) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
        if (it == vertices.end() || *it != s) return -1;
        return static_cast<int>(it - vertices.begin());
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (const auto& a : adj) total += a.size();
        return total;
    }
};

template <class Problem>
StateGraph<Problem> build_graph(const Problem& p, const Budget& budget = {}) {
    StateGraph<Problem> g{p, p.states(budget), {}, -1, -1};
    g.adj.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (const auto& [move, next] : p.successors(g.vertices[i])) {
            int j = g.index_of(next);
            if (j >= 0) g.adj[i].emplace_back(move, j);
        }
    }
    g.initial_index = g.index_of(p.initial());
    g.goal_index = g.index_of(p.goal());
    return g;
}

/// Indices of the states reachable from the initial state (BFS closure),
/// sorted ascending.
template <class Problem>
std::vector<int> reachable_component(const StateGraph<Problem>& g) {
    std::vector<bool> seen(g.vertices.size(), false);
    std::deque<int> queue;
    seen[static_cast<std::size_t>(g.initial_index)] = true;
    queue.push_back(g.initial_index);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& [move, w] : g.adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<int>(i));
    return out;
}

template <class Problem>
bool is_feasible(const StateGraph<Problem>& g) {
    auto component = reachable_component(g);
    return std::binary_search(component.begin(), component.end(), g.goal_index);
}

inline bool is_feasible(int n, int b, Flavor flavor, const Budget& budget = {}) {
    if (flavor == Flavor::Hw) return is_feasible(build_graph(HwProblem{n, b}, budget));
    return is_feasible(build_graph(McProblem{n, b}, budget));
}

}  // namespace rivercross
