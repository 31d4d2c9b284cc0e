#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rivercross/graph.hpp"
#include "rivercross/lift.hpp"
#include "rivercross/path.hpp"
#include "rivercross/symmetry.hpp"

namespace rivercross {

// ---------------------------------------------------------------------------
// Path categories. Objects are states, morphisms are walks in the state
// space (revisits allowed), composition is concatenation, identities are
// length-0 walks. Hom-sets are infinite, so everything here is truncated at
// a length bound L: a composite longer than L is undefined at this bound,
// and every law is checked only over pairs/triples composable within L.

template <class Problem>
class PathCategory {
public:
    using State = typename Problem::State;
    using P = Path<Problem>;

    PathCategory(const StateGraph<Problem>& g, int bound, std::size_t walk_budget = Budget{}.walks)
        : g_(&g), bound_(bound), walk_budget_(walk_budget) {
        if (bound < 0) throw std::invalid_argument("PathCategory: need bound >= 0");
    }

    const StateGraph<Problem>& graph() const { return *g_; }
    int bound() const { return bound_; }

    P identity(const State& s) const { return P::single(s); }

    /// q after p: the concatenated walk, or nullopt when the endpoints do not
    /// meet or the result would exceed `bound`.
    static std::optional<P> join(const P& p, const P& q, int bound) {
        if (p.target() != q.source()) return std::nullopt;
        if (p.length() + q.length() > bound) return std::nullopt;
        P out = p;
        for (std::size_t i = 0; i < q.moves.size(); ++i)
            out.append(q.moves[i], q.states[i + 1]);
        return out;
    }

    std::optional<P> join(const P& p, const P& q) const { return join(p, q, bound_); }

    /// Calls f on every walk from `a` of length <= bound (identity included),
    /// in DFS order over the sorted adjacency lists.
    template <class F>
    void visit_walks(const State& a, F&& f) const {
        int start = g_->index_of(a);
        if (start < 0) throw std::invalid_argument("visit_walks: state not in the graph");
        std::size_t visited = 0;
        P prefix = P::single(a);
        auto rec = [&](auto&& self, int v) -> void {
            if (++visited > walk_budget_)
                throw budget_error("PathCategory: walk budget exceeded");
            f(static_cast<const P&>(prefix));
            if (prefix.length() >= bound_) return;
            for (const auto& [move, w] : g_->adj[static_cast<std::size_t>(v)]) {
                prefix.append(move, g_->vertices[static_cast<std::size_t>(w)]);
                self(self, w);
                prefix.states.pop_back();
                prefix.moves.pop_back();
            }
        };
        rec(rec, start);
    }

    std::vector<P> hom(const State& a, const State& b) const {
        std::vector<P> out;
        visit_walks(a, [&](const P& w) {
            if (w.target() == b) out.push_back(w);
        });
        return out;
    }

private:
    const StateGraph<Problem>* g_;
    int bound_;
    std::size_t walk_budget_;
};

/// The sub-walk states[i..j] of `p` (j inclusive, counted in states).
template <class Problem>
Path<Problem> subpath(const Path<Problem>& p, int i, int j) {
    Path<Problem> out;
    out.states.assign(p.states.begin() + i, p.states.begin() + j + 1);
    out.moves.assign(p.moves.begin() + i, p.moves.begin() + j);
    return out;
}

// ---------------------------------------------------------------------------
// The quotient category: objects are state orbits, morphisms are orbit
// sequences of states and moves realized by at least one actual walk.
// Both components are stored canonically, which makes equality structural.

/// Canonical representative of a move's orbit: the same shape (couples, lone
/// wives, lone husbands) packed onto the lowest indices.
inline HwMove move_orbit_rep(const HwMove& m) {
    std::uint16_t couples = static_cast<std::uint16_t>(m.load.wives & m.load.husbands);
    int c = std::popcount(couples);
    int lw = std::popcount(static_cast<std::uint16_t>(m.load.wives & ~couples));
    int lh = std::popcount(static_cast<std::uint16_t>(m.load.husbands & ~couples));
    PersonSet load = PersonSet::wives_block(1, c + lw)
                         .unite(PersonSet::husbands_block(1, c))
                         .unite(PersonSet::husbands_block(c + lw + 1, c + lw + lh));
    return {load, m.from};
}

struct OrbitPath {
    std::vector<HwState> objects;  // canonical orbit representatives
    std::vector<HwMove> arrows;    // canonical move representatives

    auto operator<=>(const OrbitPath&) const = default;

    int length() const { return static_cast<int>(arrows.size()); }
    const HwState& source() const { return objects.front(); }
    const HwState& target() const { return objects.back(); }
};

/// The quotient functor on morphisms: orbit of every state and move.
inline OrbitPath quotient_path(const HwPath& p) {
    OrbitPath out;
    out.objects.reserve(p.states.size());
    out.arrows.reserve(p.moves.size());
    for (const auto& s : p.states) out.objects.push_back(orbit_rep(s));
    for (const auto& m : p.moves) out.arrows.push_back(move_orbit_rep(m));
    return out;
}

inline std::optional<OrbitPath> join(const OrbitPath& p, const OrbitPath& q, int bound) {
    if (p.target() != q.source()) return std::nullopt;
    if (p.length() + q.length() > bound) return std::nullopt;
    OrbitPath out = p;
    out.objects.insert(out.objects.end(), q.objects.begin() + 1, q.objects.end());
    out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
    return out;
}

/// The equivalence functor on morphisms: headcounts of every component.
inline McPath project_orbit_path(const OrbitPath& p) {
    McPath out;
    out.states.reserve(p.objects.size());
    out.moves.reserve(p.arrows.size());
    for (const auto& s : p.objects) out.states.push_back(project(s));
    for (const auto& m : p.arrows) out.moves.push_back(project(m));
    return out;
}

// ---------------------------------------------------------------------------
// The orbit category. Objects are states; a morphism s1 -> s2 is a walk
// from s1 to twist(s2) for some permutation `twist`; hom-sets are the
// disjoint union over all twists, so the same walk appears once per
// permutation fixing its endpoint's orbit position.

struct OrbHom {
    Permutation twist;
    HwPath walk;  // walk: source -> act(twist, target-object)

    HwState source() const { return walk.source(); }
    HwState target_object() const { return act(twist.inverse(), walk.target()); }

    bool operator==(const OrbHom& o) const { return twist == o.twist && walk == o.walk; }
};

inline OrbHom orb_identity(const HwState& s) {
    return {Permutation::identity(s.n), HwPath::single(s)};
}

/// p1 then p2 (categorically p2 . p1): the twisted concatenation
/// (twist1 twist2, (twist1 . walk2) after walk1).
inline std::optional<OrbHom> join(const OrbHom& p1, const OrbHom& p2, int bound) {
    if (p2.walk.source() != p1.target_object()) return std::nullopt;
    if (p1.walk.length() + p2.walk.length() > bound) return std::nullopt;
    HwPath twisted = act(p1.twist, p2.walk);
    auto walk = PathCategory<HwProblem>::join(p1.walk, twisted, bound);
    if (!walk) return std::nullopt;
    return OrbHom{p1.twist.after(p2.twist), *walk};
}

/// Hom-set in the orbit category: for every permutation pi, every walk
/// s1 -> pi(s2), tagged with pi. Duplicate underlying walks are kept, one
/// per tag; the disjoint union is the point.
inline std::vector<OrbHom> orb_hom(const PathCategory<HwProblem>& cat, const HwState& s1,
                                   const HwState& s2) {
    std::vector<OrbHom> out;
    for (const Permutation& pi : all_permutations(s1.n)) {
        for (HwPath& w : cat.hom(s1, act(pi, s2)))
            out.push_back({pi, std::move(w)});
    }
    return out;
}

/// The functor Orb(Cat_HW) -> Cat_MC: headcounts of the underlying walk.
/// Well-defined because a twisted target projects like the target itself.
inline McPath orb_image(const OrbHom& p) { return project_path(p.walk); }

// ---------------------------------------------------------------------------
// Machine checks. Every check quantifies over composable-within-bound data
// only and reports the number of instances checked plus any violations.

struct LawReport {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }

    void violation(const std::string& what) {
        if (violations.size() < 8) violations.push_back(what);
        else if (violations.size() == 8) violations.push_back("...");
    }
};

/// Identity and associativity laws of a path category. Identities are
/// checked against every walk; associativity over every cut pair of every
/// walk of length <= triple_bound (both bracketings are then defined).
template <class Problem>
LawReport check_category_laws(const PathCategory<Problem>& cat, int triple_bound) {
    LawReport report;
    report.name = "category laws";
    for (const auto& v : cat.graph().vertices) {
        cat.visit_walks(v, [&](const Path<Problem>& w) {
            auto left = cat.join(cat.identity(w.source()), w);
            auto right = cat.join(w, cat.identity(w.target()));
            ++report.checked;
            if (!left || *left != w || !right || *right != w)
                report.violation("identity law fails at " + to_text(w));
            if (w.length() > triple_bound) return;
            for (int c1 = 0; c1 <= w.length(); ++c1) {
                for (int c2 = c1; c2 <= w.length(); ++c2) {
                    auto p1 = subpath(w, 0, c1);
                    auto p2 = subpath(w, c1, c2);
                    auto p3 = subpath(w, c2, w.length());
                    auto left_first = cat.join(*cat.join(p1, p2), p3);
                    auto right_first = cat.join(p1, *cat.join(p2, p3));
                    ++report.checked;
                    if (!left_first || !right_first || *left_first != *right_first)
                        report.violation("associativity fails at " + to_text(w));
                }
            }
        });
    }
    return report;
}

/// Functor laws of the quotient functor Cat_HW -> Cat_HW/~ over every
/// composable pair (each walk cut in two) and every identity.
inline LawReport check_quotient_functor(const PathCategory<HwProblem>& cat) {
    LawReport report;
    report.name = "quotient functor laws";
    for (const auto& v : cat.graph().vertices) {
        OrbitPath id_image = quotient_path(cat.identity(v));
        ++report.checked;
        if (id_image.length() != 0 || id_image.source() != orbit_rep(v))
            report.violation("identity image fails at " + to_text(v));
        cat.visit_walks(v, [&](const HwPath& w) {
            OrbitPath whole = quotient_path(w);
            for (int c = 0; c <= w.length(); ++c) {
                auto composed = join(quotient_path(subpath(w, 0, c)),
                                     quotient_path(subpath(w, c, w.length())), cat.bound());
                ++report.checked;
                if (!composed || *composed != whole)
                    report.violation("functor law fails at " + to_text(w));
            }
        });
    }
    return report;
}

/// Functor laws of the equivalence functor Cat_HW/~ -> Cat_MC over every
/// composable pair of quotient morphisms.
inline LawReport check_equivalence_functor(const PathCategory<HwProblem>& cat) {
    LawReport report;
    report.name = "equivalence functor laws";
    // all distinct quotient morphisms up to the bound, grouped by source orbit
    std::map<HwState, std::vector<OrbitPath>> by_source;
    std::vector<HwState> reps;
    for (const auto& v : cat.graph().vertices) {
        HwState rep = orbit_rep(v);
        if (by_source.count(rep)) continue;
        std::vector<OrbitPath> walks;
        cat.visit_walks(rep, [&](const HwPath& w) { walks.push_back(quotient_path(w)); });
        std::sort(walks.begin(), walks.end());
        walks.erase(std::unique(walks.begin(), walks.end()), walks.end());
        by_source.emplace(rep, std::move(walks));
    }
    for (const auto& [rep, walks] : by_source) {
        for (const OrbitPath& p : walks) {
            auto it = by_source.find(p.target());
            if (it == by_source.end()) continue;
            for (const OrbitPath& q : it->second) {
                auto pq = join(p, q, cat.bound());
                if (!pq) continue;
                ++report.checked;
                auto image = PathCategory<McProblem>::join(project_orbit_path(p),
                                                           project_orbit_path(q), cat.bound());
                if (!image || *image != project_orbit_path(*pq))
                    report.violation("functor law fails at " + to_text(project_orbit_path(*pq)));
            }
        }
    }
    return report;
}

/// Orbit-category checks: twisted-composition functor laws over every
/// (walk, cut, twist) triple, identity laws, and associativity over a
/// deterministic sample of twist triples (the walk/cut part is exhaustive
/// up to triple_bound).
inline LawReport check_orbit_category(const PathCategory<HwProblem>& cat, int triple_bound,
                                      std::uint64_t seed = 17) {
    LawReport report;
    report.name = "orbit category laws";
    int n = cat.graph().problem.n;
    const auto& perms = all_permutations(n);
    // small deterministic twist sample for the associativity triples
    std::vector<std::array<std::size_t, 3>> twist_triples;
    std::uint64_t x = seed ? seed : 1;
    for (int i = 0; i < 6; ++i) {
        auto next = [&] {
            x ^= x << 13; x ^= x >> 7; x ^= x << 17;
            return static_cast<std::size_t>(x % perms.size());
        };
        twist_triples.push_back({next(), next(), next()});
    }

    for (const auto& v : cat.graph().vertices) {
        OrbHom id = orb_identity(v);
        auto idid = join(id, id, cat.bound());
        ++report.checked;
        if (!idid || !(*idid == id)) report.violation("identity composition fails at " + to_text(v));

        cat.visit_walks(v, [&](const HwPath& w) {
            // identity laws for the morphism (e, w)
            OrbHom m{Permutation::identity(n), w};
            auto li = join(orb_identity(w.source()), m, cat.bound());
            auto ri = join(m, orb_identity(w.target()), cat.bound());
            ++report.checked;
            if (!li || !(*li == m) || !ri || !(*ri == m))
                report.violation("identity law fails at " + to_text(w));

            for (int c = 0; c <= w.length(); ++c) {
                for (const Permutation& pi1 : perms) {
                    // p1 = (pi1, w[:c]) : source -> pi1^{-1} mid, p2 = (pi2, pi1^{-1} w[c:])
                    OrbHom p1{pi1, subpath(w, 0, c)};
                    HwPath q2 = act(pi1.inverse(), subpath(w, c, w.length()));
                    OrbHom p2{perms[static_cast<std::size_t>(c) % perms.size()], q2};
                    auto composed = join(p1, p2, cat.bound());
                    ++report.checked;
                    if (!composed) {
                        report.violation("twisted composition undefined at " + to_text(w));
                        continue;
                    }
                    auto image = PathCategory<McProblem>::join(orb_image(p1), orb_image(p2),
                                                               cat.bound());
                    if (!image || *image != orb_image(*composed))
                        report.violation("orbit functor law fails at " + to_text(w));
                }
            }
            if (w.length() <= triple_bound) {
                for (const auto& [a, b, cidx] : twist_triples) {
                    for (int c1 = 0; c1 <= w.length(); ++c1) {
                        for (int c2 = c1; c2 <= w.length(); ++c2) {
                            OrbHom p1{perms[a], subpath(w, 0, c1)};
                            OrbHom p2{perms[b], act(perms[a].inverse(), subpath(w, c1, c2))};
                            HwPath q3 = act(perms[b].inverse(),
                                            act(perms[a].inverse(), subpath(w, c2, w.length())));
                            OrbHom p3{perms[cidx], q3};
                            auto left = join(*join(p1, p2, cat.bound()), p3, cat.bound());
                            auto right = join(p1, *join(p2, p3, cat.bound()), cat.bound());
                            ++report.checked;
                            if (!left || !right || !(*left == *right))
                                report.violation("orbit associativity fails at " + to_text(w));
                        }
                    }
                }
            }
        });
    }
    return report;
}

// ---------------------------------------------------------------------------
// The equivalence report: is the functor Cat_HW/~ -> Cat_MC full, faithful,
// and essentially surjective at this bound? Checked exhaustively per object
// pair. `image` lets a test substitute a corrupted morphism map (returning
// nullopt drops a morphism).

struct EquivalenceReport {
    int n = 0;
    int b = 0;
    int bound = 0;
    bool full = false;
    bool faithful = false;
    bool essentially_surjective = false;
    std::vector<std::string> counterexamples;

    bool ok() const { return full && faithful && essentially_surjective; }
};

using MorphismImage = std::function<std::optional<McPath>(const OrbitPath&)>;

inline EquivalenceReport check_equivalence(const StateGraph<HwProblem>& hw_graph,
                                           const StateGraph<McProblem>& mc_graph,
                                           int bound, int jobs = 1,
                                           MorphismImage image = {}) {
    EquivalenceReport report;
    report.n = hw_graph.problem.n;
    report.b = hw_graph.problem.b;
    report.bound = bound;
    if (!image) image = [](const OrbitPath& p) { return std::optional<McPath>(project_orbit_path(p)); };

    PathCategory<HwProblem> hw_cat(hw_graph, bound);
    PathCategory<McProblem> mc_cat(mc_graph, bound);

    // objects of the quotient category, one per MC state
    std::vector<HwState> objects;
    for (const auto& s : mc_graph.vertices) objects.push_back(section(s));

    bool full = true, faithful = true, ess = true;
    std::vector<std::string> examples;
    auto note = [&](const std::string& what) {
        if (examples.size() < 8) examples.push_back(what);
    };

    // essential surjectivity: every MC object is hit exactly
    for (const auto& s : mc_graph.vertices) {
        if (project(orbit_rep(section(s))) != s) {
            ess = false;
            note("essential surjectivity fails at " + to_text(s));
        }
    }

    // per source object: enumerate quotient morphisms, bucket by target,
    // compare image sets with the MC hom-sets
    auto check_source = [&](const HwState& rep) {
        std::vector<std::string> local;
        bool lfull = true, lfaithful = true;
        std::map<McState, std::vector<OrbitPath>> homs;
        hw_cat.visit_walks(rep, [&](const HwPath& w) {
            homs[project(w.target())].push_back(quotient_path(w));
        });
        for (auto& [target, morphisms] : homs) {
            std::sort(morphisms.begin(), morphisms.end());
            morphisms.erase(std::unique(morphisms.begin(), morphisms.end()), morphisms.end());
        }
        for (const auto& mc_target : mc_graph.vertices) {
            std::vector<McPath> images;
            auto it = homs.find(mc_target);
            if (it != homs.end()) {
                for (const OrbitPath& m : it->second) {
                    auto img = image(m);
                    if (img) images.push_back(*img);
                }
                std::sort(images.begin(), images.end());
                if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
                    lfaithful = false;
                    local.push_back("faithfulness fails from " + to_text(project(rep)) + " to " +
                                    to_text(mc_target));
                }
            }
            for (const McPath& p : mc_cat.hom(project(rep), mc_target)) {
                if (!std::binary_search(images.begin(), images.end(), p)) {
                    lfull = false;
                    local.push_back("no preimage for " + to_text(p));
                }
            }
        }
        return std::tuple<bool, bool, std::vector<std::string>>{lfull, lfaithful, local};
    };

    std::vector<std::tuple<bool, bool, std::vector<std::string>>> results(objects.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < objects.size(); ++i) results[i] = check_source(objects[i]);
    } else {
        std::vector<std::future<std::tuple<bool, bool, std::vector<std::string>>>> futures;
        futures.reserve(objects.size());
        for (const auto& rep : objects)
            futures.push_back(std::async(std::launch::async, check_source, rep));
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    }
    for (const auto& [lfull, lfaithful, local] : results) {
        full = full && lfull;
        faithful = faithful && lfaithful;
        for (const auto& e : local) note(e);
    }

    report.full = full;
    report.faithful = faithful;
    report.essentially_surjective = ess;
    report.counterexamples = std::move(examples);
    return report;
}

}  // namespace rivercross
