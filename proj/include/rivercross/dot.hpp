#pragma once

#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rivercross/graph.hpp"
#include "rivercross/lift.hpp"
#include "rivercross/solve.hpp"

namespace rivercross {

// ---------------------------------------------------------------------------
// Graphviz exports. Node names are the canonical state texts; states with
// the boat on the left bank are painted black. State graphs are undirected
// (every trip can be sailed back by the same load), so each transition pair
// appears once, written from its boat-left endpoint. Output is byte-stable:
// vertices and edges are emitted in canonical order.

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

template <class State>
std::string dot_node(const State& s) {
    std::string line = "  " + dot_quote(to_text(s));
    if (s.boat == Side::Left)
        line += " [style=filled, fillcolor=black, fontcolor=white]";
    return line + ";\n";
}

}  // namespace detail

/// DOT for a state graph restricted to `keep` (vertex indices, sorted).
template <class Problem>
std::string to_dot(const StateGraph<Problem>& g, const std::vector<int>& keep,
                   const std::string& name = "states") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=box, fontsize=10];\n";
    for (int v : keep) out << detail::dot_node(g.vertices[static_cast<std::size_t>(v)]);
    std::set<int> kept(keep.begin(), keep.end());
    for (int v : keep) {
        const auto& s = g.vertices[static_cast<std::size_t>(v)];
        if (s.boat != Side::Left) continue;  // one line per undirected pair
        for (const auto& [move, w] : g.adj[static_cast<std::size_t>(v)]) {
            if (!kept.count(w)) continue;
            out << "  " << detail::dot_quote(to_text(s)) << " -- "
                << detail::dot_quote(to_text(g.vertices[static_cast<std::size_t>(w)]))
                << " [label=" << detail::dot_quote(to_text(move)) << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

template <class Problem>
std::string to_dot(const StateGraph<Problem>& g, const std::string& name = "states") {
    std::vector<int> all(g.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return to_dot(g, all, name);
}

/// DOT for the union of all optimal solutions (directed along the solving
/// direction is meaningless here; transitions stay undirected).
template <class Problem>
std::string to_dot(const StateGraph<Problem>& g, const OptimalSubgraph<Problem>& sub,
                   const std::string& name = "optimal") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=box, fontsize=10];\n";
    for (int v : sub.vertices) out << detail::dot_node(g.vertices[static_cast<std::size_t>(v)]);
    for (const auto& [a, move, b] : sub.edges) {
        const auto& s = g.vertices[static_cast<std::size_t>(a)];
        if (s.boat != Side::Left) continue;
        out << "  " << detail::dot_quote(to_text(s)) << " -- "
            << detail::dot_quote(to_text(g.vertices[static_cast<std::size_t>(b)]))
            << " [label=" << detail::dot_quote(to_text(move)) << "];\n";
    }
    out << "}\n";
    return out.str();
}

/// DOT for a fiber lattice: one rank-same row per layer (orbit), edges
/// directed along the lifted solution. Node names carry the layer index so
/// a state revisited by the underlying solution appears once per layer.
inline std::string to_dot(const FiberLattice& lattice, const std::string& name = "fiber") {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
    auto node_id = [](std::size_t layer, int idx) {
        return "L" + std::to_string(layer) + "_" + std::to_string(idx);
    };
    for (std::size_t j = 0; j < lattice.layers.size(); ++j) {
        out << "  { rank=same;";
        for (std::size_t i = 0; i < lattice.layers[j].size(); ++i)
            out << " " << node_id(j, static_cast<int>(i)) << ";";
        out << " }\n";
        for (std::size_t i = 0; i < lattice.layers[j].size(); ++i) {
            const HwState& s = lattice.layers[j][i];
            out << "  " << node_id(j, static_cast<int>(i)) << " [label="
                << detail::dot_quote(to_text(s));
            if (s.boat == Side::Left)
                out << ", style=filled, fillcolor=black, fontcolor=white";
            out << "];\n";
        }
    }
    for (std::size_t j = 0; j < lattice.edges.size(); ++j)
        for (const auto& [a, move, b] : lattice.edges[j])
            out << "  " << node_id(j, a) << " -> " << node_id(j + 1, b)
                << " [label=" << detail::dot_quote(to_text(move)) << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace rivercross
