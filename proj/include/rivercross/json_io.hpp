#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rivercross/category.hpp"
#include "rivercross/path.hpp"
#include "rivercross/solve.hpp"

namespace rivercross {

// ---------------------------------------------------------------------------
// JSON schema. States and moves mirror their fields; people are their text
// names. Solution documents look like
//   {"n":3, "b":2, "flavor":"mc", "length":11, "count":4,
//    "solutions":[[state, move, state, ...], ...]}
// and a single-solution file for `lift` carries a "solution" array that may
// alternate states and moves or list states only (moves are re-derived).

using nlohmann::json;

inline json to_json(const HwState& s) {
    json j;
    j["left"] = json::array();
    j["right"] = json::array();
    for (const Person& p : s.left.people()) j["left"].push_back(to_text(p));
    for (const Person& p : s.right.people()) j["right"].push_back(to_text(p));
    j["boat"] = std::string(1, to_char(s.boat));
    j["n"] = s.n;
    return j;
}

inline json to_json(const McState& s) {
    json j;
    j["left"] = {{"cannibals", s.left.cannibals}, {"missionaries", s.left.missionaries}};
    j["right"] = {{"cannibals", s.right.cannibals}, {"missionaries", s.right.missionaries}};
    j["boat"] = std::string(1, to_char(s.boat));
    j["n"] = s.n;
    return j;
}

inline json to_json(const HwMove& m) {
    json j;
    j["load"] = json::array();
    for (const Person& p : m.load.people()) j["load"].push_back(to_text(p));
    j["from"] = std::string(1, to_char(m.from));
    return j;
}

inline json to_json(const McMove& m) {
    return {{"cannibals", m.cannibals},
            {"missionaries", m.missionaries},
            {"from", std::string(1, to_char(m.from))}};
}

namespace detail {

inline Side side_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "L") return Side::Left;
    if (s == "R") return Side::Right;
    throw std::invalid_argument("json: boat/from must be \"L\" or \"R\"");
}

inline PersonSet person_set_from_json(const json& j) {
    PersonSet out;
    for (const auto& e : j) {
        Person p = parse_person(e.get<std::string>());
        if (out.contains(p)) throw std::invalid_argument("json: duplicate person " + to_text(p));
        out.insert(p);
    }
    return out;
}

inline McBank bank_from_json(const json& j) {
    return {j.at("cannibals").get<int>(), j.at("missionaries").get<int>()};
}

}  // namespace detail

inline HwState hw_state_from_json(const json& j, int n = 0) {
    HwState s;
    s.left = detail::person_set_from_json(j.at("left"));
    s.right = detail::person_set_from_json(j.at("right"));
    s.boat = detail::side_from_json(j.at("boat"));
    s.n = j.contains("n") ? j.at("n").get<int>() : n;
    if (s.n == 0) s.n = (s.left.size() + s.right.size()) / 2;
    if (!s.admissible()) throw std::invalid_argument("json: state is not admissible");
    return s;
}

inline McState mc_state_from_json(const json& j, int n = 0) {
    McState s;
    s.left = detail::bank_from_json(j.at("left"));
    s.right = detail::bank_from_json(j.at("right"));
    s.boat = detail::side_from_json(j.at("boat"));
    s.n = j.contains("n") ? j.at("n").get<int>() : n;
    if (s.n == 0) s.n = s.left.cannibals + s.right.cannibals;
    if (!s.admissible()) throw std::invalid_argument("json: state is not admissible");
    return s;
}

inline HwMove hw_move_from_json(const json& j) {
    return {detail::person_set_from_json(j.at("load")), detail::side_from_json(j.at("from"))};
}

inline McMove mc_move_from_json(const json& j) {
    return {j.at("cannibals").get<int>(), j.at("missionaries").get<int>(),
            detail::side_from_json(j.at("from"))};
}

namespace detail {

inline bool looks_like_hw_move(const json& j) { return j.contains("load"); }
inline bool looks_like_mc_move(const json& j) {
    return j.contains("from") && !j.contains("boat");
}

}  // namespace detail

template <class Problem>
json to_json(const Path<Problem>& p) {
    json arr = json::array();
    for (std::size_t i = 0; i < p.states.size(); ++i) {
        if (i > 0) arr.push_back(to_json(p.moves[i - 1]));
        arr.push_back(to_json(p.states[i]));
    }
    return arr;
}

/// Reads a path from an array of states, or of alternating states and moves.
/// Each step is validated against the instance's transition rules.
inline McPath mc_path_from_json(const McProblem& problem, const json& arr) {
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("json: solution must be a non-empty array");
    std::vector<McState> states;
    std::vector<std::optional<McMove>> gaps;  // gap i sits between states i and i+1
    std::optional<McMove> pending;
    for (const auto& e : arr) {
        if (detail::looks_like_mc_move(e)) {
            if (states.empty() || pending)
                throw std::invalid_argument("json: move out of place in the solution array");
            pending = mc_move_from_json(e);
        } else {
            if (!states.empty()) {
                gaps.push_back(pending);
                pending.reset();
            }
            states.push_back(mc_state_from_json(e, problem.n));
        }
    }
    if (pending) throw std::invalid_argument("json: solution ends with a move");
    McPath path = path_from_states(problem, states);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] && *gaps[i] != path.moves[i])
            throw std::invalid_argument("json: move " + std::to_string(i + 1) +
                                        " does not match its endpoints");
    }
    return path;
}

template <class Problem>
json solutions_document(const Problem& problem, int length, std::uint64_t count,
                        const std::vector<Path<Problem>>& solutions) {
    json j;
    j["n"] = problem.n;
    j["b"] = problem.b;
    j["flavor"] = name(Problem::flavor);
    j["length"] = length;
    j["count"] = count;
    j["solutions"] = json::array();
    for (const auto& s : solutions) j["solutions"].push_back(to_json(s));
    return j;
}

inline json to_json(const EquivalenceReport& r) {
    return {{"n", r.n},
            {"b", r.b},
            {"L", r.bound},
            {"full", r.full},
            {"faithful", r.faithful},
            {"essentially_surjective", r.essentially_surjective},
            {"counterexamples", r.counterexamples}};
}

}  // namespace rivercross
