#include <catch2/catch_amalgamated.hpp>

#include "rivercross/core.hpp"
#include "rivercross/model.hpp"

using namespace rivercross;

namespace {

PersonSet people(std::initializer_list<const char*> names) {
    PersonSet out;
    for (const char* n : names) out.insert(parse_person(n));
    return out;
}

}  // namespace

TEST_CASE("boat capacity formula") {
    CHECK(capacity(2) == 2);
    CHECK(capacity(3) == 2);
    CHECK(capacity(4) == 3);
    CHECK(capacity(5) == 3);
    CHECK(capacity(6) == 4);
    CHECK(capacity(100) == 4);
    CHECK_THROWS_AS(capacity(1), std::invalid_argument);
    CHECK_THROWS_AS(capacity(0), std::invalid_argument);
}

TEST_CASE("group safety, identity-labelled") {
    CHECK(is_safe_hw(people({"w1", "w2"})));
    CHECK_FALSE(is_safe_hw(people({"w1", "h2"})));
    CHECK(is_safe_hw(people({"w1", "h1", "h2"})));
    CHECK(is_safe_hw({}));
    CHECK(is_safe_hw(people({"h1", "h3"})));
}

TEST_CASE("group safety, headcount") {
    CHECK(is_safe_mc(3, 0));
    CHECK_FALSE(is_safe_mc(2, 1));
    CHECK(is_safe_mc(2, 2));
    CHECK(is_safe_mc(0, 0));
    CHECK_THROWS_AS(is_safe_mc(-1, 0), std::invalid_argument);
}

TEST_CASE("state enumeration counts") {
    CHECK(enumerate_hw_states(3).size() == 44);
    CHECK(enumerate_mc_states(3).size() == 20);
    CHECK(enumerate_mc_states(4).size() == 26);
}

TEST_CASE("state counts match the closed forms from the type taxonomy") {
    for (int n = 2; n <= 8; ++n) {
        auto hw = enumerate_hw_states(n);
        auto mc = enumerate_mc_states(n);
        CHECK(hw.size() == 2u * (3u * (1u << n) - 2u));
        CHECK(mc.size() == 2u * (3u * static_cast<unsigned>(n) + 1u));
        for (const auto& s : hw) CHECK(s.admissible());
        for (const auto& s : mc) CHECK(s.admissible());
    }
}

TEST_CASE("every admissible state falls in exactly one class") {
    for (int n = 2; n <= 6; ++n) {
        std::size_t a = 0, b = 0, c = 0;
        for (const auto& s : enumerate_hw_states(n)) {
            switch (classify_state(s)) {
                case StateType::A: ++a; break;
                case StateType::B: ++b; break;
                case StateType::C: ++c; break;
            }
            // class C means matched couples on both banks
            if (classify_state(s) == StateType::C) {
                CHECK(s.left.wives == s.left.husbands);
                CHECK(s.right.wives == s.right.husbands);
            }
        }
        CHECK(a == (1u << n) * 2u);
        CHECK(b == (1u << n) * 2u);
        CHECK(c == ((1u << n) - 2u) * 2u);

        std::size_t a2 = 0, b2 = 0, c2 = 0;
        for (const auto& s : enumerate_mc_states(n)) {
            switch (classify_state(s)) {
                case StateType::A: ++a2; break;
                case StateType::B: ++b2; break;
                case StateType::C: ++c2; break;
            }
        }
        CHECK(a2 == 2u * (static_cast<unsigned>(n) + 1u));
        CHECK(b2 == 2u * (static_cast<unsigned>(n) + 1u));
        CHECK(c2 == 2u * (static_cast<unsigned>(n) - 1u));
    }
}

TEST_CASE("enumeration rejects out-of-budget instances") {
    Budget tight;
    tight.couples = 4;
    CHECK_THROWS_AS(enumerate_hw_states(5, tight), budget_error);
    CHECK_THROWS_AS(enumerate_mc_states(9), budget_error);  // default cap is 8
    CHECK_THROWS_AS(enumerate_hw_states(1), std::invalid_argument);
}

TEST_CASE("canonical text forms") {
    HwState s{people({"w1", "w3", "h1", "h2", "h3"}), people({"w2"}), Side::Left, 3};
    CHECK(to_text(s) == "[w1 w3 h1 h2 h3 | w2 : L]");
    McState m{{2, 3}, {1, 0}, Side::Left, 3};
    CHECK(to_text(m) == "[(2,3)|(1,0):L]");
    CHECK(to_text(HwMove{people({"w2", "w3"}), Side::Left}) == "{w2 w3 : L}");
    CHECK(to_text(McMove{2, 0, Side::Left}) == "{(2,0):L}");
}

TEST_CASE("text round trip over every state") {
    for (const auto& s : enumerate_hw_states(3)) CHECK(parse_hw_state(to_text(s), 3) == s);
    for (const auto& s : enumerate_mc_states(4)) CHECK(parse_mc_state(to_text(s), 4) == s);
}

TEST_CASE("parser rejects malformed and inadmissible input") {
    CHECK_THROWS_AS(parse_hw_state("[w1 | w2 : L]"), std::invalid_argument);       // unsafe/partial
    CHECK_THROWS_AS(parse_hw_state("w1 w2 | : L"), std::invalid_argument);         // no brackets
    CHECK_THROWS_AS(parse_hw_state("[w1 w1 h1 h1 | : L]"), std::invalid_argument); // duplicate
    CHECK_THROWS_AS(parse_mc_state("[(2,1)|(1,2):L]"), std::invalid_argument);     // unsafe bank
    CHECK_THROWS_AS(parse_mc_state("[(2,3)|(1,0):X]"), std::invalid_argument);     // bad side
    CHECK_THROWS_AS(parse_person("x1"), std::invalid_argument);
    // whitespace tolerance
    CHECK(parse_hw_state("[ w1 h1  |  w2 h2 : R ]", 2) ==
          HwState{people({"w1", "h1"}), people({"w2", "h2"}), Side::Right, 2});
}

TEST_CASE("moves apply as bank differences") {
    HwProblem p{3, 2};
    HwState s = p.initial();
    HwMove m{people({"w2", "w3"}), Side::Left};
    HwState t = apply(s, m);
    CHECK(t == parse_hw_state("[w1 h1 h2 h3 | w2 w3 : R]", 3));
    CHECK_THROWS_AS(apply(t, m), std::invalid_argument);  // boat is on the other side
    CHECK_THROWS_AS(apply(s, HwMove{{}, Side::Left}), std::invalid_argument);

    McState ms{{3, 3}, {0, 0}, Side::Left, 3};
    CHECK(apply(ms, McMove{1, 1, Side::Left}) == McState{{2, 2}, {1, 1}, Side::Right, 3});
    CHECK_THROWS_AS(apply(ms, McMove{0, 0, Side::Left}), std::invalid_argument);
    CHECK_THROWS_AS(apply(ms, McMove{1, 0, Side::Right}), std::invalid_argument);
}
