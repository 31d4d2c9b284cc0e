#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rivercross {

inline constexpr int kMaxCouples = 12;  // masks below are 16-bit

enum class Side : std::uint8_t { Left, Right };

inline Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline char to_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

enum class Flavor : std::uint8_t { Hw, Mc };

inline const char* name(Flavor f) { return f == Flavor::Hw ? "hw" : "mc"; }

enum class Role : std::uint8_t { Wife, Husband };

/// One wife or husband. Couples share an index; indices run 1..n.
struct Person {
    Role role;
    int index;

    auto operator<=>(const Person&) const = default;
};

inline std::string to_text(const Person& p) {
    return (p.role == Role::Wife ? "w" : "h") + std::to_string(p.index);
}

/// A set of people stored as two index bitmasks (bit i-1 = index i present).
/// Comparison order is (wives, husbands), which matches the canonical text
/// form (wives ascending, then husbands ascending).
struct PersonSet {
    std::uint16_t wives = 0;
    std::uint16_t husbands = 0;

    auto operator<=>(const PersonSet&) const = default;

    static std::uint16_t index_mask(int n) {
        return static_cast<std::uint16_t>((1u << n) - 1u);
    }
    /// Everyone in an n-couple instance.
    static PersonSet everyone(int n) { return {index_mask(n), index_mask(n)}; }
    /// Wives p..q (empty when p > q; p is clamped to 1); likewise husbands().
    static PersonSet wives_block(int p, int q) {
        if (p < 1) p = 1;
        if (p > q) return {};
        return {static_cast<std::uint16_t>(index_mask(q) & ~index_mask(p - 1)), 0};
    }
    static PersonSet husbands_block(int p, int q) {
        PersonSet w = wives_block(p, q);
        return {0, w.wives};
    }

    bool empty() const { return wives == 0 && husbands == 0; }
    int size() const { return std::popcount(wives) + std::popcount(husbands); }
    int wife_count() const { return std::popcount(wives); }
    int husband_count() const { return std::popcount(husbands); }

    bool contains(const Person& p) const {
        std::uint16_t bit = static_cast<std::uint16_t>(1u << (p.index - 1));
        return (p.role == Role::Wife ? wives : husbands) & bit;
    }
    void insert(const Person& p) {
        std::uint16_t bit = static_cast<std::uint16_t>(1u << (p.index - 1));
        (p.role == Role::Wife ? wives : husbands) |= bit;
    }

    bool subset_of(const PersonSet& o) const {
        return (wives & ~o.wives) == 0 && (husbands & ~o.husbands) == 0;
    }
    bool disjoint_with(const PersonSet& o) const {
        return (wives & o.wives) == 0 && (husbands & o.husbands) == 0;
    }

    PersonSet unite(const PersonSet& o) const {
        return {static_cast<std::uint16_t>(wives | o.wives),
                static_cast<std::uint16_t>(husbands | o.husbands)};
    }
    PersonSet minus(const PersonSet& o) const {
        return {static_cast<std::uint16_t>(wives & ~o.wives),
                static_cast<std::uint16_t>(husbands & ~o.husbands)};
    }

    /// Members in canonical order: wives ascending, then husbands ascending.
    std::vector<Person> people() const {
        std::vector<Person> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int i = 1; i <= kMaxCouples; ++i)
            if (wives & (1u << (i - 1))) out.push_back({Role::Wife, i});
        for (int i = 1; i <= kMaxCouples; ++i)
            if (husbands & (1u << (i - 1))) out.push_back({Role::Husband, i});
        return out;
    }
};

inline std::string to_text(const PersonSet& s) {
    std::string out;
    for (const Person& p : s.people()) {
        if (!out.empty()) out += ' ';
        out += to_text(p);
    }
    return out;
}

/// A group is safe when it has no husband at all, or contains the husband of
/// every wife in it.
inline bool is_safe_hw(const PersonSet& group) {
    return group.husbands == 0 || (group.wives & ~group.husbands) == 0;
}

/// A group is safe when it has no missionary, or at least as many
/// missionaries as cannibals.
inline bool is_safe_mc(int cannibals, int missionaries) {
    if (cannibals < 0 || missionaries < 0)
        throw std::invalid_argument("is_safe_mc: counts must be non-negative");
    return missionaries == 0 || cannibals <= missionaries;
}

/// Smallest boat that makes an n-couple instance solvable.
inline int capacity(int n) {
    if (n < 2) throw std::invalid_argument("capacity: need n >= 2");
    if (n <= 3) return 2;
    if (n <= 5) return 3;
    return 4;
}

// ---------------------------------------------------------------------------
// States and moves. The boat is always empty while a state is observed; the
// boat's bank is part of the state. Comparison order is (left bank, right
// bank, boat), the canonical enumeration order.

struct HwState {
    PersonSet left;
    PersonSet right;
    Side boat = Side::Left;
    int n = 0;

    auto operator<=>(const HwState&) const = default;

    const PersonSet& bank(Side s) const { return s == Side::Left ? left : right; }

    bool admissible() const {
        PersonSet all = PersonSet::everyone(n);
        return left.disjoint_with(right) && left.unite(right) == all &&
               is_safe_hw(left) && is_safe_hw(right);
    }
};

struct HwMove {
    PersonSet load;
    Side from = Side::Left;

    auto operator<=>(const HwMove&) const = default;
};

/// Bank occupancy in the headcount model: (cannibals, missionaries).
struct McBank {
    int cannibals = 0;
    int missionaries = 0;

    auto operator<=>(const McBank&) const = default;
};

struct McState {
    McBank left;
    McBank right;
    Side boat = Side::Left;
    int n = 0;

    auto operator<=>(const McState&) const = default;

    const McBank& bank(Side s) const { return s == Side::Left ? left : right; }

    bool admissible() const {
        return left.cannibals >= 0 && left.missionaries >= 0 &&
               right.cannibals >= 0 && right.missionaries >= 0 &&
               left.cannibals + right.cannibals == n &&
               left.missionaries + right.missionaries == n &&
               is_safe_mc(left.cannibals, left.missionaries) &&
               is_safe_mc(right.cannibals, right.missionaries);
    }
};

struct McMove {
    int cannibals = 0;
    int missionaries = 0;
    Side from = Side::Left;

    auto operator<=>(const McMove&) const = default;

    int size() const { return cannibals + missionaries; }
};

/// Sails `m.load` from its bank; the boat ends on the other side.
inline HwState apply(const HwState& s, const HwMove& m) {
    if (m.from != s.boat)
        throw std::invalid_argument("apply: move departs from the bank without the boat");
    const PersonSet& dep = s.bank(m.from);
    if (!m.load.subset_of(dep))
        throw std::invalid_argument("apply: boat load not present on the departure bank");
    if (m.load.empty())
        throw std::invalid_argument("apply: empty boat load");
    HwState out = s;
    PersonSet& d = (m.from == Side::Left) ? out.left : out.right;
    PersonSet& a = (m.from == Side::Left) ? out.right : out.left;
    d = d.minus(m.load);
    a = a.unite(m.load);
    out.boat = other(s.boat);
    return out;
}

inline McState apply(const McState& s, const McMove& m) {
    if (m.from != s.boat)
        throw std::invalid_argument("apply: move departs from the bank without the boat");
    const McBank& dep = s.bank(m.from);
    if (m.cannibals < 0 || m.missionaries < 0 || m.size() < 1)
        throw std::invalid_argument("apply: boat load must carry at least one person");
    if (m.cannibals > dep.cannibals || m.missionaries > dep.missionaries)
        throw std::invalid_argument("apply: boat load not present on the departure bank");
    McState out = s;
    McBank& d = (m.from == Side::Left) ? out.left : out.right;
    McBank& a = (m.from == Side::Left) ? out.right : out.left;
    d.cannibals -= m.cannibals;
    d.missionaries -= m.missionaries;
    a.cannibals += m.cannibals;
    a.missionaries += m.missionaries;
    out.boat = other(s.boat);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical text forms. These are the wire format used by the CLI, the DOT
// exporter, and the JSON schema; parsers accept any amount of whitespace.
//
//   HW state  [w1 w3 h1 h2 h3 | w2 : L]      HW move  {w2 w3 : L}
//   MC state  [(2,3)|(1,0):L]                MC move  {(2,0):L}

inline std::string to_text(const HwState& s) {
    return "[" + to_text(s.left) + " | " + to_text(s.right) + " : " + to_char(s.boat) + "]";
}

inline std::string to_text(const HwMove& m) {
    return "{" + to_text(m.load) + " : " + to_char(m.from) + "}";
}

inline std::string to_text(const McBank& b) {
    return "(" + std::to_string(b.cannibals) + "," + std::to_string(b.missionaries) + ")";
}

inline std::string to_text(const McState& s) {
    return "[" + to_text(s.left) + "|" + to_text(s.right) + ":" + to_char(s.boat) + "]";
}

inline std::string to_text(const McMove& m) {
    return std::string("{(") + std::to_string(m.cannibals) + "," +
           std::to_string(m.missionaries) + "):" + to_char(m.from) + "}";
}

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("parse: unexpected end of input");
        return s[pos];
    }
    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("parse: expected '") + c + "' in \"" + s + "\"");
        ++pos;
    }
    bool accept(char c) {
        if (done() || s[pos] != c) return false;
        ++pos;
        return true;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) throw std::invalid_argument("parse: expected a number in \"" + s + "\"");
        return std::stoi(s.substr(start, pos - start));
    }
    Side side() {
        char c = peek();
        ++pos;
        if (c == 'L') return Side::Left;
        if (c == 'R') return Side::Right;
        throw std::invalid_argument("parse: expected bank letter L or R in \"" + s + "\"");
    }
};

inline Person person(Cursor& c) {
    char r = c.peek();
    if (r != 'w' && r != 'h')
        throw std::invalid_argument("parse: expected a person like w3 or h1");
    ++c.pos;
    int idx = c.integer();
    if (idx < 1 || idx > kMaxCouples)
        throw std::invalid_argument("parse: person index out of range");
    return {r == 'w' ? Role::Wife : Role::Husband, idx};
}

/// People up to (but not consuming) the stop character.
inline PersonSet person_set(Cursor& c, char stop) {
    PersonSet out;
    while (c.peek() != stop) {
        Person p = person(c);
        if (out.contains(p)) throw std::invalid_argument("parse: duplicate person " + to_text(p));
        out.insert(p);
    }
    return out;
}

inline McBank mc_bank(Cursor& c) {
    c.expect('(');
    int cann = c.integer();
    c.expect(',');
    int mis = c.integer();
    c.expect(')');
    return {cann, mis};
}

}  // namespace detail

inline Person parse_person(const std::string& text) {
    detail::Cursor c{text};
    Person p = detail::person(c);
    if (!c.done()) throw std::invalid_argument("parse: trailing input after person");
    return p;
}

/// Parses the canonical HW state form. `n` may be 0 to infer it from the
/// population (every index 1..n must appear exactly twice overall).
inline HwState parse_hw_state(const std::string& text, int n = 0) {
    detail::Cursor c{text};
    c.expect('[');
    HwState s;
    s.left = detail::person_set(c, '|');
    c.expect('|');
    s.right = detail::person_set(c, ':');
    c.expect(':');
    s.boat = c.side();
    c.expect(']');
    if (!c.done()) throw std::invalid_argument("parse: trailing input after state");
    if (n == 0) {
        int people = s.left.size() + s.right.size();
        if (people == 0 || people % 2 != 0)
            throw std::invalid_argument("parse: cannot infer n from " + text);
        n = people / 2;
    }
    s.n = n;
    if (!s.admissible())
        throw std::invalid_argument("parse: state is not admissible: " + text);
    return s;
}

inline McState parse_mc_state(const std::string& text, int n = 0) {
    detail::Cursor c{text};
    c.expect('[');
    McState s;
    s.left = detail::mc_bank(c);
    c.expect('|');
    s.right = detail::mc_bank(c);
    c.expect(':');
    s.boat = c.side();
    c.expect(']');
    if (!c.done()) throw std::invalid_argument("parse: trailing input after state");
    if (n == 0) n = s.left.cannibals + s.right.cannibals;
    s.n = n;
    if (!s.admissible())
        throw std::invalid_argument("parse: state is not admissible: " + text);
    return s;
}

inline HwMove parse_hw_move(const std::string& text) {
    detail::Cursor c{text};
    c.expect('{');
    HwMove m;
    m.load = detail::person_set(c, ':');
    c.expect(':');
    m.from = c.side();
    c.expect('}');
    if (!c.done()) throw std::invalid_argument("parse: trailing input after move");
    return m;
}

inline McMove parse_mc_move(const std::string& text) {
    detail::Cursor c{text};
    c.expect('{');
    McBank b = detail::mc_bank(c);
    c.expect(':');
    McMove m{b.cannibals, b.missionaries, c.side()};
    c.expect('}');
    if (!c.done()) throw std::invalid_argument("parse: trailing input after move");
    return m;
}

}  // namespace rivercross
