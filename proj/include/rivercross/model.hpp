#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "rivercross/budget.hpp"
#include "rivercross/core.hpp"

namespace rivercross {

// ---------------------------------------------------------------------------
// State taxonomy. Every admissible state falls in exactly one class, keyed by
// where the husbands (missionaries) are:
//   A - all on the right bank, B - all on the left bank,
//   C - on both banks, which forces matched couples (equal headcounts) per bank.

enum class StateType { A, B, C };

inline std::string to_label(StateType t, Flavor f) {
    std::string base = t == StateType::A ? "a" : t == StateType::B ? "b" : "c";
    return f == Flavor::Mc ? base + "'" : base;
}

inline StateType classify_state(const HwState& s) {
    if (s.left.husbands == 0) return StateType::A;
    if (s.left.husbands == PersonSet::index_mask(s.n)) return StateType::B;
    return StateType::C;
}

inline StateType classify_state(const McState& s) {
    if (s.left.missionaries == 0) return StateType::A;
    if (s.left.missionaries == s.n) return StateType::B;
    return StateType::C;
}

// ---------------------------------------------------------------------------
// Exhaustive state enumeration (brute force over all splits, safety-filtered).

inline std::vector<HwState> enumerate_hw_states(int n, const Budget& budget = {}) {
    if (n < 2) throw std::invalid_argument("enumerate_hw_states: need n >= 2");
    budget.check_couples(n);
    std::vector<HwState> out;
    std::uint16_t full = PersonSet::index_mask(n);
    for (std::uint32_t w = 0; w <= full; ++w) {
        for (std::uint32_t h = 0; h <= full; ++h) {
            PersonSet left{static_cast<std::uint16_t>(w), static_cast<std::uint16_t>(h)};
            PersonSet right = PersonSet::everyone(n).minus(left);
            if (!is_safe_hw(left) || !is_safe_hw(right)) continue;
            out.push_back({left, right, Side::Left, n});
            out.push_back({left, right, Side::Right, n});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<McState> enumerate_mc_states(int n, const Budget& budget = {}) {
    if (n < 2) throw std::invalid_argument("enumerate_mc_states: need n >= 2");
    budget.check_couples(n);
    std::vector<McState> out;
    for (int c = 0; c <= n; ++c) {
        for (int m = 0; m <= n; ++m) {
            McBank left{c, m};
            McBank right{n - c, n - m};
            if (!is_safe_mc(left.cannibals, left.missionaries)) continue;
            if (!is_safe_mc(right.cannibals, right.missionaries)) continue;
            out.push_back({left, right, Side::Left, n});
            out.push_back({left, right, Side::Right, n});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Transition generation: every safe boat load of size 1..b drawn from the
// boat's bank whose result is again admissible. Results come back sorted.

namespace detail {

/// Visits every submask of `mask`, including 0, in increasing numeric order.
template <class F>
void for_each_submask(std::uint16_t mask, F&& f) {
    std::uint16_t sub = 0;
    while (true) {
        f(sub);
        if (sub == mask) break;
        sub = static_cast<std::uint16_t>((sub - mask) & mask);
    }
}

}  // namespace detail

inline std::vector<std::pair<HwMove, HwState>> hw_successors(const HwState& s, int b) {
    if (b < 1) throw std::invalid_argument("hw_successors: need b >= 1");
    std::vector<std::pair<HwMove, HwState>> out;
    const PersonSet& dep = s.bank(s.boat);
    detail::for_each_submask(dep.wives, [&](std::uint16_t wsub) {
        detail::for_each_submask(dep.husbands, [&](std::uint16_t hsub) {
            PersonSet load{wsub, hsub};
            int sz = load.size();
            if (sz < 1 || sz > b || !is_safe_hw(load)) return;
            HwMove move{load, s.boat};
            HwState next = apply(s, move);
            if (is_safe_hw(next.left) && is_safe_hw(next.right))
                out.emplace_back(move, next);
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<McMove, McState>> mc_successors(const McState& s, int b) {
    if (b < 1) throw std::invalid_argument("mc_successors: need b >= 1");
    std::vector<std::pair<McMove, McState>> out;
    const McBank& dep = s.bank(s.boat);
    for (int c = 0; c <= std::min(dep.cannibals, b); ++c) {
        for (int m = 0; m <= std::min(dep.missionaries, b - c); ++m) {
            if (c + m < 1 || !is_safe_mc(c, m)) continue;
            McMove move{c, m, s.boat};
            McState next = apply(s, move);
            if (is_safe_mc(next.left.cannibals, next.left.missionaries) &&
                is_safe_mc(next.right.cannibals, next.right.missionaries))
                out.emplace_back(move, next);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Trip taxonomy. Every admissible transition matches one of six shapes,
// determined by the departure bank's class and the load's composition. The
// same labels apply to trips in either direction (the shapes are mirrored).
// Two corner overlaps exist (III is a special case of IV when no wife is on
// the arrival bank, and V meets VI when the whole bank departs); the
// classifier resolves them by first match in label order.

enum class TransitionCase { I = 1, II, III, IV, V, VI };

inline std::string to_label(TransitionCase t, Flavor f) {
    static const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi"};
    std::string base = roman[static_cast<int>(t) - 1];
    return f == Flavor::Mc ? base + "'" : base;
}

inline TransitionCase classify_transition(const HwMove& move, const HwState& from) {
    const PersonSet& dep = from.bank(move.from);
    const PersonSet& arr = from.bank(other(move.from));
    if (!move.load.subset_of(dep) || move.load.empty())
        throw std::invalid_argument("classify_transition: move does not depart from this state");
    std::uint16_t all = PersonSet::index_mask(from.n);
    if (dep.husbands == 0) {
        if (move.load.husbands == 0) return TransitionCase::I;
    } else if (dep.husbands == all) {
        if (move.load.husbands == 0) return TransitionCase::II;
        if (move.load.wives == 0 && move.load.husbands == all) return TransitionCase::III;
        // husbands of every wife on the arrival bank, plus whole couples
        std::uint16_t extra = static_cast<std::uint16_t>(move.load.husbands & ~arr.wives);
        if ((arr.wives & ~move.load.husbands) == 0 && extra == move.load.wives)
            return TransitionCase::IV;
    } else {
        if (move.load.husbands == dep.husbands) return TransitionCase::V;
        if (move.load.husbands == move.load.wives && move.load.wives != 0)
            return TransitionCase::VI;
    }
    throw std::logic_error("classify_transition: unclassifiable trip (model bug): " +
                           to_text(move) + " from " + to_text(from));
}

inline TransitionCase classify_transition(const McMove& move, const McState& from) {
    const McBank& dep = from.bank(move.from);
    const McBank& arr = from.bank(other(move.from));
    if (move.cannibals > dep.cannibals || move.missionaries > dep.missionaries ||
        move.size() < 1)
        throw std::invalid_argument("classify_transition: move does not depart from this state");
    if (dep.missionaries == 0) {
        if (move.missionaries == 0) return TransitionCase::I;
    } else if (dep.missionaries == from.n) {
        if (move.missionaries == 0) return TransitionCase::II;
        if (move.cannibals == 0 && move.missionaries == from.n) return TransitionCase::III;
        if (move.missionaries == arr.cannibals + move.cannibals) return TransitionCase::IV;
    } else {
        if (move.missionaries == dep.missionaries) return TransitionCase::V;
        if (move.missionaries == move.cannibals && move.cannibals > 0)
            return TransitionCase::VI;
    }
    throw std::logic_error("classify_transition: unclassifiable trip (model bug): " +
                           to_text(move) + " from " + to_text(from));
}

// ---------------------------------------------------------------------------
// Problem instances. These carry (n, b) and present the uniform surface the
// generic graph/solver/category code works against.

struct HwProblem {
    using State = HwState;
    using Move = HwMove;
    static constexpr Flavor flavor = Flavor::Hw;

    int n;
    int b;

    HwProblem(int n_, int b_) : n(n_), b(b_) {
        if (n < 2) throw std::invalid_argument("HwProblem: need n >= 2");
        if (n > kMaxCouples) throw std::invalid_argument("HwProblem: n too large");
        if (b < 1) throw std::invalid_argument("HwProblem: need b >= 1");
    }
    explicit HwProblem(int n_) : HwProblem(n_, capacity(n_)) {}

    State initial() const { return {PersonSet::everyone(n), {}, Side::Left, n}; }
    State goal() const { return {{}, PersonSet::everyone(n), Side::Right, n}; }
    std::vector<State> states(const Budget& budget = {}) const {
        return enumerate_hw_states(n, budget);
    }
    std::vector<std::pair<Move, State>> successors(const State& s) const {
        return hw_successors(s, b);
    }
};

struct McProblem {
    using State = McState;
    using Move = McMove;
    static constexpr Flavor flavor = Flavor::Mc;

    int n;
    int b;

    McProblem(int n_, int b_) : n(n_), b(b_) {
        if (n < 2) throw std::invalid_argument("McProblem: need n >= 2");
        if (b < 1) throw std::invalid_argument("McProblem: need b >= 1");
    }
    explicit McProblem(int n_) : McProblem(n_, capacity(n_)) {}

    State initial() const { return {{n, n}, {0, 0}, Side::Left, n}; }
    State goal() const { return {{0, 0}, {n, n}, Side::Right, n}; }
    std::vector<State> states(const Budget& budget = {}) const {
        return enumerate_mc_states(n, budget);
    }
    std::vector<std::pair<Move, State>> successors(const State& s) const {
        return mc_successors(s, b);
    }
};

}  // namespace rivercross
