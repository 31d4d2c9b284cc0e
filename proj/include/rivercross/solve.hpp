#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <future>
#include <limits>
#include <vector>

#include "rivercross/graph.hpp"
#include "rivercross/path.hpp"

namespace rivercross {

template <class Problem>
struct ShortestSolutions {
    bool feasible = false;
    int length = -1;
    std::uint64_t count = 0;
    std::vector<Path<Problem>> solutions;  // all optimal ones, canonical order
};

namespace detail {

template <class Problem>
std::vector<int> bfs_distances(const StateGraph<Problem>& g) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(g.initial_index)] = 0;
    queue.push_back(g.initial_index);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& [move, w] : g.adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace detail

/// BFS layering plus a walk of the shortest-path DAG. Optimal solutions are
/// counted by dynamic programming and enumerated in canonical order; both
/// answers come from the same layering but independent traversals.
template <class Problem>
ShortestSolutions<Problem> shortest_solutions(const StateGraph<Problem>& g) {
    ShortestSolutions<Problem> out;
    std::vector<int> dist = detail::bfs_distances(g);
    int goal_dist = dist[static_cast<std::size_t>(g.goal_index)];
    if (goal_dist < 0) return out;
    out.feasible = true;
    out.length = goal_dist;

    // paths-to-goal counts over the DAG of BFS-forward edges
    std::vector<std::uint64_t> ways(g.vertices.size(), 0);
    ways[static_cast<std::size_t>(g.goal_index)] = 1;
    std::vector<int> order(g.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return dist[static_cast<std::size_t>(a)] > dist[static_cast<std::size_t>(b)];
    });
    for (int v : order) {
        if (dist[static_cast<std::size_t>(v)] < 0 || v == g.goal_index) continue;
        std::uint64_t total = 0;
        for (const auto& [move, w] : g.adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] + 1)
                total += ways[static_cast<std::size_t>(w)];
        ways[static_cast<std::size_t>(v)] = total;
    }
    out.count = ways[static_cast<std::size_t>(g.initial_index)];

    // materialize every optimal path by DFS through the same DAG
    Path<Problem> prefix = Path<Problem>::single(g.vertices[static_cast<std::size_t>(g.initial_index)]);
    std::vector<int> stack{g.initial_index};
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == g.goal_index) {
            out.solutions.push_back(prefix);
            return;
        }
        for (const auto& [move, w] : g.adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] != dist[static_cast<std::size_t>(v)] + 1)
                continue;
            if (ways[static_cast<std::size_t>(w)] == 0) continue;
            prefix.append(move, g.vertices[static_cast<std::size_t>(w)]);
            self(self, w);
            prefix.states.pop_back();
            prefix.moves.pop_back();
        }
    };
    dfs(dfs, g.initial_index);
    return out;
}

/// Every simple path from the initial state to the goal with length at most
/// `max_len`, in canonical (DFS over sorted adjacency) order. `jobs > 1`
/// partitions the search by first move; the merge preserves the order.
template <class Problem>
std::vector<Path<Problem>> enumerate_solutions(const StateGraph<Problem>& g, int max_len,
                                               const Budget& budget = {}, int jobs = 1) {
    using P = Path<Problem>;
    if (max_len < 0) throw std::invalid_argument("enumerate_solutions: need max_len >= 0");

    auto search_from = [&](int first_target, const typename Problem::Move& first_move) {
        std::vector<P> found;
        std::vector<bool> visited(g.vertices.size(), false);
        visited[static_cast<std::size_t>(g.initial_index)] = true;
        visited[static_cast<std::size_t>(first_target)] = true;
        P prefix = P::single(g.vertices[static_cast<std::size_t>(g.initial_index)]);
        prefix.append(first_move, g.vertices[static_cast<std::size_t>(first_target)]);
        auto dfs = [&](auto&& self, int v) -> void {
            if (v == g.goal_index) {
                if (found.size() >= budget.paths)
                    throw budget_error("enumerate_solutions: path budget exceeded");
                found.push_back(prefix);
                return;
            }
            if (prefix.length() >= max_len) return;
            for (const auto& [move, w] : g.adj[static_cast<std::size_t>(v)]) {
                if (visited[static_cast<std::size_t>(w)]) continue;
                visited[static_cast<std::size_t>(w)] = true;
                prefix.append(move, g.vertices[static_cast<std::size_t>(w)]);
                self(self, w);
                prefix.states.pop_back();
                prefix.moves.pop_back();
                visited[static_cast<std::size_t>(w)] = false;
            }
        };
        dfs(dfs, first_target);
        return found;
    };

    const auto& first_edges = g.adj[static_cast<std::size_t>(g.initial_index)];
    if (max_len == 0 || g.initial_index == g.goal_index)
        return g.initial_index == g.goal_index
                   ? std::vector<P>{P::single(g.vertices[static_cast<std::size_t>(g.initial_index)])}
                   : std::vector<P>{};

    std::vector<std::vector<P>> parts(first_edges.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < first_edges.size(); ++i)
            parts[i] = search_from(first_edges[i].second, first_edges[i].first);
    } else {
        std::vector<std::future<std::vector<P>>> futures;
        futures.reserve(first_edges.size());
        for (const auto& [move, w] : first_edges)
            futures.push_back(std::async(std::launch::async, search_from, w, move));
        for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
    }

    std::vector<P> out;
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    if (total > budget.paths) throw budget_error("enumerate_solutions: path budget exceeded");
    out.reserve(total);
    for (auto& part : parts)
        for (auto& p : part) out.push_back(std::move(p));
    return out;
}

/// Union of all optimal solutions: the sub-state-space they traverse.
/// Vertices and edges keep graph indices; edges are (from, move, to).
template <class Problem>
struct OptimalSubgraph {
    std::vector<int> vertices;
    std::vector<std::tuple<int, typename Problem::Move, int>> edges;
};

template <class Problem>
OptimalSubgraph<Problem> optimal_subgraph(const StateGraph<Problem>& g) {
    OptimalSubgraph<Problem> out;
    auto res = shortest_solutions(g);
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<std::tuple<int, typename Problem::Move, int>> edges;
    for (const auto& sol : res.solutions) {
        for (std::size_t i = 0; i < sol.states.size(); ++i)
            seen[static_cast<std::size_t>(g.index_of(sol.states[i]))] = true;
        for (std::size_t i = 0; i < sol.moves.size(); ++i)
            edges.emplace_back(g.index_of(sol.states[i]), sol.moves[i],
                               g.index_of(sol.states[i + 1]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.edges = std::move(edges);
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.vertices.push_back(static_cast<int>(i));
    return out;
}

}  // namespace rivercross
