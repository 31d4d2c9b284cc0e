#pragma once

#include <algorithm>
#include <vector>

#include "rivercross/core.hpp"
#include "rivercross/path.hpp"
#include "rivercross/permutation.hpp"

namespace rivercross {

// ---------------------------------------------------------------------------
// The symmetric group acts on people by relabelling couple indices:
// w_i -> w_pi(i), h_j -> h_pi(j). The action extends pointwise to sets,
// states, moves, and whole paths; boat location is untouched. Safety and
// admissibility are preserved, so the action restricts to the state space.

inline PersonSet act(const Permutation& pi, const PersonSet& x) {
    PersonSet out;
    for (int i = 1; i <= pi.size(); ++i) {
        std::uint16_t bit = static_cast<std::uint16_t>(1u << (i - 1));
        std::uint16_t image = static_cast<std::uint16_t>(1u << (pi.apply(i) - 1));
        if (x.wives & bit) out.wives |= image;
        if (x.husbands & bit) out.husbands |= image;
    }
    return out;
}

inline HwState act(const Permutation& pi, const HwState& s) {
    return {act(pi, s.left), act(pi, s.right), s.boat, s.n};
}

inline HwMove act(const Permutation& pi, const HwMove& m) {
    return {act(pi, m.load), m.from};
}

inline HwPath act(const Permutation& pi, const HwPath& path) {
    HwPath out;
    out.states.reserve(path.states.size());
    out.moves.reserve(path.moves.size());
    for (const auto& s : path.states) out.states.push_back(act(pi, s));
    for (const auto& m : path.moves) out.moves.push_back(act(pi, m));
    return out;
}

// ---------------------------------------------------------------------------
// Quotient maps. `project` forgets identities (wives become cannibals,
// husbands become missionaries) and is constant on orbits; `section` picks
// the canonical representative with the lowest indices on the left bank.
// They are mutually inverse between MC states and state orbits.

inline McState project(const HwState& s) {
    return {{s.left.wife_count(), s.left.husband_count()},
            {s.right.wife_count(), s.right.husband_count()},
            s.boat,
            s.n};
}

inline McMove project(const HwMove& m) {
    return {m.load.wife_count(), m.load.husband_count(), m.from};
}

inline McPath project_path(const HwPath& path) {
    McPath out;
    out.states.reserve(path.states.size());
    out.moves.reserve(path.moves.size());
    for (const auto& s : path.states) out.states.push_back(project(s));
    for (const auto& m : path.moves) out.moves.push_back(project(m));
    return out;
}

inline HwState section(const McState& s) {
    PersonSet left{PersonSet::index_mask(s.left.cannibals),
                   PersonSet::index_mask(s.left.missionaries)};
    PersonSet right = PersonSet::everyone(s.n).minus(left);
    return {left, right, s.boat, s.n};
}

/// Canonical orbit representative: section(project(s)).
inline HwState orbit_rep(const HwState& s) { return section(project(s)); }

struct Orbit {
    HwState representative;
    std::vector<HwState> members;  // sorted, deduplicated

    std::size_t size() const { return members.size(); }
};

/// Full orbit by an n! sweep (n stays desk-scale by construction).
inline Orbit orbit_of(const HwState& s) {
    Orbit out;
    out.representative = orbit_rep(s);
    for (const Permutation& pi : all_permutations(s.n))
        out.members.push_back(act(pi, s));
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()),
                      out.members.end());
    return out;
}

inline std::size_t stabilizer_size(const HwState& s) {
    std::size_t count = 0;
    for (const Permutation& pi : all_permutations(s.n))
        if (act(pi, s) == s) ++count;
    return count;
}

}  // namespace rivercross
