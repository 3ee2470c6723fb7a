#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qobdd/collapse.hpp"
#include "qobdd/errors.hpp"
#include "qobdd/evaluator.hpp"
#include "qobdd/program.hpp"

using namespace qobdd;

namespace {

constexpr double kPi = 3.14159265358979323846;

// width-2, two-layer program computing parity with 0/1 acceptance: t set bits
// rotate by t*pi/4 per layer, t*pi/2 in total
KQobddProgram double_parity() { return build_rotation_program(2, kPi / 4, {1}, 2); }

}  // namespace

TEST_CASE("collapsed space indexing") {
    CollapsedSpace s{3, 2};
    CHECK(s.m() == 3);
    CHECK(s.block_dim() == 9);
    CHECK(s.dim() == 11);
    CHECK(s.t0() == 9);
    CHECK(s.t1() == 10);
    CHECK(s.index({1, 2}) == 5);
    for (std::size_t idx = 0; idx < 9; ++idx) CHECK(s.index(s.digits(idx)) == idx);
}

TEST_CASE("tensor layer transforms stack the layers of one position") {
    KQobddProgram id = build_identity_program(2, 2, {0}, 3);
    CHECK(max_abs_diff(tensor_layer_transforms(id, 0, 0), ComplexMatrix::identity(8)) == 0.0);

    KQobddProgram p = double_parity();
    ComplexMatrix rr = tensor_product(plane_rotation(kPi / 4), plane_rotation(kPi / 4));
    CHECK(max_abs_diff(tensor_layer_transforms(p, 0, 1), rr) < 1e-12);
    CHECK(max_abs_diff(tensor_layer_transforms(p, 1, 0), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("preparation column spreads the start state as specified") {
    ComplexMatrix v = build_v(2, 2);
    REQUIRE(v.rows() == 6);
    CHECK(is_unitary(v, Tolerance{1e-12}));
    const double expected[6] = {0.5, 0.5, 0.0, 0.0,
                                0.35355339059327373,   // 1/(2 sqrt 2)
                                0.61237243569579447};  // sqrt(3)/(2 sqrt 2)
    for (std::size_t r = 0; r < 6; ++r) {
        CHECK(v.at(r, 0).real() == doctest::Approx(expected[r]).epsilon(1e-12));
        CHECK(v.at(r, 0).imag() == 0.0);
    }

    for (std::size_t w = 1; w <= 3; ++w)
        for (std::size_t k = 1; k <= 3; ++k) CHECK(is_unitary(build_v(w, k), Tolerance{1e-12}));
}

TEST_CASE("uniform-guess collapse structure") {
    KQobddProgram p = double_parity();
    QobddProgram collapsed = collapse(p);
    const KQobddProgram& c = collapsed.get();
    CHECK(c.k == 1);
    CHECK(c.n == 2);
    CHECK(c.width == 6);
    CHECK(c.length() == 2);
    CHECK(c.size() == 12);
    CHECK(validate(c).empty());
    // block states with accepted last digit, plus the accepting sink
    CHECK(c.accepting == std::vector<std::size_t>{1, 3, 5});
}

TEST_CASE("per-guess amplitudes match path amplitudes") {
    KQobddProgram p = build_random_program(2, 2, 2, 311, {0});
    CollapsedSpace s{2, 2};
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
        InputAssignment a = InputAssignment::from_index(2, idx);
        ComplexMatrix u = ComplexMatrix::identity(4);
        for (std::size_t pos = 0; pos < p.n; ++pos)
            u = mat_mul(tensor_layer_transforms(p, pos, a.bits[p.ordering.sigma[pos]]), u);
        for (std::size_t guess = 0; guess < 2; ++guess) {
            StateVector start = StateVector::basis(4, s.index({0, guess}));
            StateVector final_state = apply(u, start);
            for (std::size_t j = 0; j < 2; ++j) {
                ComplexScalar direct = final_state[s.index({guess, j})];
                ComplexScalar via_path = path_amplitude(p, a, {guess, j});
                CHECK(std::abs(direct - via_path) < 1e-12);
            }
        }
    }
}

TEST_CASE("affine law holds whenever the guess space is trivial") {
    // k = 1: no guesses at all
    KQobddProgram p1 = build_rotation_program(2, kPi / 2, {1}, 1);
    QobddProgram c1 = collapse(p1);
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
        InputAssignment a = InputAssignment::from_index(2, idx);
        double predicted = predicted_acceptance(acceptance(p1, a), 2, 1);
        CHECK(acceptance(c1, a) == doctest::Approx(predicted).epsilon(1e-9));
    }

    // w = 1: a single guess
    KQobddProgram p2 = build_identity_program(1, 2, {0}, 3);
    QobddProgram c2 = collapse(p2);
    InputAssignment a0 = InputAssignment::from_index(2, 0);
    CHECK(acceptance(c2, a0) ==
          doctest::Approx(predicted_acceptance(1.0, 1, 3)).epsilon(1e-9));

    // identity layers: every guess tuple is confirmed
    KQobddProgram p3 = build_identity_program(2, 2, {0}, 2);
    QobddProgram c3 = collapse(p3);
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
        InputAssignment a = InputAssignment::from_index(2, idx);
        double predicted = predicted_acceptance(acceptance(p3, a), 2, 2);
        CHECK(acceptance(c3, a) == doctest::Approx(predicted).epsilon(1e-9));
    }
}

TEST_CASE("uniform-guess collapse of the double-parity program") {
    // The guess superposition is a product state, so the simulation cannot
    // reproduce the affine law once w >= 2 and k >= 2. These are the true
    // collapsed values, (1 + sin(t pi/2))/4 + 3/8 for t set bits, frozen as a
    // regression oracle next to the law's prediction for contrast.
    KQobddProgram p = double_parity();
    QobddProgram collapsed = collapse(p);

    const double actual[4] = {0.625, 0.875, 0.875, 0.625};
    const double predicted[4] = {0.375, 0.625, 0.625, 0.375};
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
        InputAssignment a = InputAssignment::from_index(2, idx);
        const double t = double((idx >> 1) + (idx & 1));
        const double closed_form = (1.0 + std::sin(t * kPi / 2)) / 4.0 + 3.0 / 8.0;
        CHECK(actual[idx] == doctest::Approx(closed_form).epsilon(1e-12));
        CHECK(acceptance(collapsed, a) == doctest::Approx(actual[idx]).epsilon(1e-9));
        CHECK(predicted_acceptance(acceptance(p, a), 2, 2) ==
              doctest::Approx(predicted[idx]).epsilon(1e-9));
        CollapseReport report = collapse_report(p, collapsed, a,
                                                predicted_acceptance(acceptance(p, a), 2, 2));
        CHECK(report.residual == doctest::Approx(0.25).epsilon(1e-9));
    }
}

TEST_CASE("predicted acceptance validates its argument") {
    CHECK(predicted_acceptance(0.5, 3, 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(predicted_acceptance(0.0, 2, 2) == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(predicted_acceptance(1.0, 2, 2) == doctest::Approx(0.625).epsilon(1e-12));
    CHECK_THROWS_AS(predicted_acceptance(1.5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(predicted_acceptance(-0.5, 2, 2), std::invalid_argument);
}

TEST_CASE("entangled-record collapse obeys its affine law everywhere") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        std::size_t w = 2 + seed % 2;
        KQobddProgram p = build_random_program(w, 2, 2, 400 + seed, {0});
        QobddProgram collapsed = collapse_entangled(p);
        CHECK(validate(collapsed.get()).empty());
        CHECK(collapsed.get().width ==
              static_cast<std::size_t>(std::pow(double(w), 3)) + 2);
        for (std::uint64_t idx = 0; idx < 4; ++idx) {
            InputAssignment a = InputAssignment::from_index(2, idx);
            double predicted = entangled_predicted_acceptance(acceptance(p, a), w, 2);
            CHECK(acceptance(collapsed, a) == doctest::Approx(predicted).epsilon(1e-9));
        }
    }
}

TEST_CASE("entangled-record collapse of the double-parity program") {
    KQobddProgram p = double_parity();
    QobddProgram collapsed = collapse_entangled(p);
    CHECK(collapsed.get().width == 10);  // 2^3 + 2
    const double expected[4] = {3.0 / 7, 4.0 / 7, 4.0 / 7, 3.0 / 7};
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
        InputAssignment a = InputAssignment::from_index(2, idx);
        CHECK(acceptance(collapsed, a) == doctest::Approx(expected[idx]).epsilon(1e-9));
        // the majority side of 1/2 is preserved
        CHECK((acceptance(p, a) > 0.5) == (acceptance(collapsed, a) > 0.5));
    }
}

TEST_CASE("entangled-record collapse fixes the half point") {
    // one set bit rotates by 2 * pi/8, acceptance sin^2(pi/4) = 1/2 exactly
    KQobddProgram p = build_rotation_program(1, kPi / 8, {1}, 2);
    QobddProgram collapsed = collapse_entangled(p);
    InputAssignment a = InputAssignment::from_string("1");
    CHECK(acceptance(p, a) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(acceptance(collapsed, a) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("collapse constructions refuse oversized state spaces") {
    KQobddProgram big = build_identity_program(10, 1, {0}, 4);  // 10^4 + 2 states
    CHECK_THROWS_AS(collapse(big), GuardError);
    KQobddProgram big_entangled = build_identity_program(10, 1, {0}, 3);  // 10^5 + 2
    CHECK_THROWS_AS(collapse_entangled(big_entangled), GuardError);
}
