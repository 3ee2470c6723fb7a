#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "qobdd/classical.hpp"
#include "qobdd/errors.hpp"
#include "qobdd/evaluator.hpp"

using namespace qobdd;

namespace {

InputAssignment in(const char* s) { return InputAssignment::from_string(s); }

// reference predicate: some pair of adjacent set bits
bool has_neighbored_ones(const InputAssignment& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a.bits[i] && a.bits[i + 1]) return true;
    return false;
}

bool contains(const std::vector<std::string>& findings, const std::string& fragment) {
    for (const auto& f : findings)
        if (f.find(fragment) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("adjacent-ones automaton on small inputs") {
    DetObdd d2 = build_no_n(2);
    CHECK(validate(d2).empty());
    CHECK(d2.width == 3);
    CHECK_FALSE(eval_det(d2, in("00")));
    CHECK_FALSE(eval_det(d2, in("01")));
    CHECK_FALSE(eval_det(d2, in("10")));
    CHECK(eval_det(d2, in("11")));

    DetObdd d3 = build_no_n(3);
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
        InputAssignment a = InputAssignment::from_index(3, idx);
        bool expected = a.to_string() == "011" || a.to_string() == "110" ||
                        a.to_string() == "111";
        CHECK(eval_det(d3, a) == expected);
    }

    DetObdd d4 = build_no_n(4);
    CHECK(eval_det(d4, in("0110")));
    CHECK_FALSE(eval_det(d4, in("1010")));
    CHECK_FALSE(eval_det(d4, in("0000")));
}

TEST_CASE("adjacent-ones automaton matches the brute-force predicate") {
    for (std::size_t n = 1; n <= 8; ++n) {
        DetObdd d = build_no_n(n);
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
            InputAssignment a = InputAssignment::from_index(n, idx);
            CHECK(eval_det(d, a) == has_neighbored_ones(a));
        }
    }
}

TEST_CASE("parity automaton and reversibility") {
    DetObdd parity = build_parity_obdd(4);
    CHECK(validate(parity).empty());
    CHECK(parity.width == 2);
    CHECK(eval_det(parity, in("0100")));
    CHECK(eval_det(parity, in("0111")));
    CHECK_FALSE(eval_det(parity, in("0000")));
    CHECK_FALSE(eval_det(parity, in("1100")));

    CHECK(is_reversible(parity));
    CHECK_FALSE(is_reversible(build_no_n(3)));  // two states merge on bit 0
}

TEST_CASE("lifting the parity automaton reproduces it exactly") {
    for (std::size_t n = 1; n <= 10; ++n) {
        DetObdd d = build_parity_obdd(n);
        QobddProgram lifted = lift_reversible(d);
        CHECK(validate(lifted.get()).empty());
        CHECK(lifted.get().width == 2);
        CHECK(lifted.get().accepting == d.accepting);
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
            InputAssignment a = InputAssignment::from_index(n, idx);
            // permutation arithmetic is exact, so compare without tolerance
            CHECK(acceptance(lifted, a) == (eval_det(d, a) ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("lifting rejects non-reversible automata") {
    CHECK_THROWS_AS(lift_reversible(build_no_n(3)), ValidationError);
    try {
        lift_reversible(build_no_n(3));
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("position 1") != std::string::npos);
    }
}

TEST_CASE("automaton validation names the defect") {
    DetObdd d = build_parity_obdd(2);

    SUBCASE("transition out of range") {
        d.delta[1][0][1] = 5;
        auto findings = validate(d);
        CHECK(contains(findings, "position 2 delta0"));
        CHECK(contains(findings, "out of range"));
    }
    SUBCASE("missing transition entries") {
        d.delta[0][1].pop_back();
        CHECK(contains(validate(d), "entries, expected 2"));
    }
    SUBCASE("wrong position count") {
        d.delta.pop_back();
        CHECK(contains(validate(d), "positions, expected 2"));
    }
    SUBCASE("accepting out of range") {
        d.accepting = {7};
        CHECK(contains(validate(d), "accepting state 7"));
    }
    SUBCASE("repeated ordering entry") {
        d.ordering.sigma = {1, 1};
        CHECK(contains(validate(d), "repeated"));
    }
}

TEST_CASE("deterministic evaluation validates the input size") {
    DetObdd d = build_parity_obdd(3);
    CHECK_THROWS_AS(eval_det(d, in("01")), std::invalid_argument);
    CHECK_THROWS_AS(build_no_n(0), std::invalid_argument);
    CHECK_THROWS_AS(build_parity_obdd(0), std::invalid_argument);
}
