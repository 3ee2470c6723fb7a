#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "qobdd/complex_linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qobdd;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool bit_identical(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

bool bit_identical(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

ComplexMatrix pauli_x() {
    ComplexMatrix x(2, 2);
    x.at(0, 1) = 1.0;
    x.at(1, 0) = 1.0;
    return x;
}

}  // namespace

TEST_CASE("plane rotation entries and composition") {
    ComplexMatrix r = plane_rotation(kPi / 6);
    CHECK(r.at(0, 0).real() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    CHECK(r.at(0, 1).real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(r.at(1, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.at(1, 1).real() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));

    // two quarter-turn halves make [[0,-1],[1,0]]
    ComplexMatrix quarter = mat_mul(plane_rotation(kPi / 4), plane_rotation(kPi / 4));
    ComplexMatrix expected(2, 2);
    expected.at(0, 1) = -1.0;
    expected.at(1, 0) = 1.0;
    CHECK(max_abs_diff(quarter, expected) < 1e-12);
}

TEST_CASE("identity and basis constructors") {
    ComplexMatrix id = ComplexMatrix::identity(3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(id.at(r, c) == (r == c ? ComplexScalar(1.0) : ComplexScalar(0.0)));

    StateVector e1 = StateVector::basis(4, 1);
    CHECK(e1.dim() == 4);
    CHECK(e1[1] == ComplexScalar(1.0));
    CHECK(e1.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("tensor product layout, left factor most significant") {
    ComplexMatrix xx = tensor_product(pauli_x(), pauli_x());
    REQUIRE(xx.rows() == 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(xx.at(r, c) == ((r + c == 3) ? ComplexScalar(1.0) : ComplexScalar(0.0)));

    // R(pi/2) x I2 swaps the two 2-dim blocks with a sign
    ComplexMatrix ri = tensor_product(plane_rotation(kPi / 2), ComplexMatrix::identity(2));
    ComplexMatrix expected(4, 4);
    expected.at(0, 2) = -1.0;
    expected.at(1, 3) = -1.0;
    expected.at(2, 0) = 1.0;
    expected.at(3, 1) = 1.0;
    CHECK(max_abs_diff(ri, expected) < 1e-12);
}

TEST_CASE("tensor product is multiplicative") {
    ComplexMatrix a = random_unitary(2, 11), b = random_unitary(3, 12);
    ComplexMatrix c = random_unitary(2, 13), d = random_unitary(3, 14);
    ComplexMatrix lhs = mat_mul(tensor_product(a, b), tensor_product(c, d));
    ComplexMatrix rhs = tensor_product(mat_mul(a, c), mat_mul(b, d));
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("mat_mul associativity and identity") {
    ComplexMatrix a = random_unitary(4, 1), b = random_unitary(4, 2), c = random_unitary(4, 3);
    CHECK(max_abs_diff(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))) < 1e-12);
    CHECK(max_abs_diff(mat_mul(a, ComplexMatrix::identity(4)), a) == 0.0);
    CHECK(max_abs_diff(mat_mul(ComplexMatrix::identity(4), a), a) == 0.0);
    CHECK_THROWS_AS(mat_mul(a, random_unitary(3, 4)), std::invalid_argument);
}

TEST_CASE("conj_transpose and unitarity checks") {
    ComplexMatrix u = random_unitary(5, 77);
    ComplexMatrix ut = conj_transpose(u);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            CHECK(ut.at(c, r) == std::conj(u.at(r, c)));

    CHECK(is_unitary(u));
    CHECK(unitarity_defect(u) < 1e-9);
    CHECK(max_abs_diff(mat_mul(ut, u), ComplexMatrix::identity(5)) < 1e-12);

    ComplexMatrix ones(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) ones.at(r, c) = 1.0;
    CHECK_FALSE(is_unitary(ones));

    CHECK_THROWS_AS(is_unitary(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("complete_unitary pins the target column verbatim") {
    StateVector target(2);
    target[0] = 1.0 / std::sqrt(2.0);
    target[1] = 1.0 / std::sqrt(2.0);
    ComplexMatrix u = complete_unitary(target, 0);
    CHECK(u.at(0, 0) == target[0]);
    CHECK(u.at(1, 0) == target[1]);
    CHECK(u.at(0, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(u.at(1, 1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(is_unitary(u));

    for (std::size_t dim = 1; dim <= 6; ++dim) {
        ComplexMatrix source = random_unitary(dim, 900 + dim);
        for (std::size_t pin = 0; pin < dim; ++pin) {
            StateVector col(dim);
            for (std::size_t r = 0; r < dim; ++r) col[r] = source.at(r, 0);
            ComplexMatrix completed = complete_unitary(col, pin);
            CHECK(is_unitary(completed, Tolerance{1e-9}));
            for (std::size_t r = 0; r < dim; ++r) CHECK(completed.at(r, pin) == col[r]);
        }
    }
}

TEST_CASE("complete_unitary argument validation") {
    CHECK_THROWS_AS(complete_unitary(StateVector(), 0), std::invalid_argument);

    StateVector e0 = StateVector::basis(3, 0);
    CHECK_THROWS_AS(complete_unitary(e0, 3), std::invalid_argument);

    StateVector too_long(2);
    too_long[0] = 2.0;
    CHECK_THROWS_AS(complete_unitary(too_long, 0), std::invalid_argument);
}

TEST_CASE("random_unitary is deterministic in dim and seed") {
    ComplexMatrix a = random_unitary(4, 42);
    ComplexMatrix b = random_unitary(4, 42);
    CHECK(bit_identical(a, b));
    CHECK_FALSE(bit_identical(a, random_unitary(4, 43)));
    for (std::size_t dim = 1; dim <= 8; ++dim)
        CHECK(unitarity_defect(random_unitary(dim, 5 * dim + 1)) < 1e-9);
}

TEST_CASE("parallel kernels are bit-identical to the serial references") {
    // below the parallel cutoffs
    {
        ComplexMatrix a = random_unitary(5, 21), b = random_unitary(5, 22);
        CHECK(bit_identical(mat_mul(a, b), serial::mat_mul(a, b)));
        CHECK(bit_identical(tensor_product(a, b), serial::tensor_product(a, b)));
        StateVector v(5);
        for (std::size_t i = 0; i < 5; ++i) v[i] = ComplexScalar(0.1 * double(i), -0.2);
        CHECK(bit_identical(apply(a, v), serial::apply(a, v)));
    }
    // above the cutoffs, with a forced thread count
    {
#ifdef _OPENMP
        omp_set_num_threads(3);
#endif
        ComplexMatrix a = random_unitary(64, 31), b = random_unitary(64, 32);
        CHECK(bit_identical(mat_mul(a, b), serial::mat_mul(a, b)));

        ComplexMatrix s = random_unitary(33, 33), t = random_unitary(33, 34);
        CHECK(bit_identical(tensor_product(s, t), serial::tensor_product(s, t)));

        ComplexMatrix big = random_unitary(150, 35);
        StateVector v(150);
        for (std::size_t i = 0; i < 150; ++i)
            v[i] = ComplexScalar(std::sin(double(i)), std::cos(double(i))) * 0.05;
        CHECK(bit_identical(apply(big, v), serial::apply(big, v)));
    }
}

TEST_CASE("max_abs_diff and shape guards") {
    ComplexMatrix a = ComplexMatrix::identity(2);
    ComplexMatrix b = a;
    b.at(1, 1) = ComplexScalar(1.0, 3e-4);
    CHECK(max_abs_diff(a, b) == doctest::Approx(3e-4).epsilon(1e-12));
    CHECK_THROWS_AS(max_abs_diff(a, ComplexMatrix(3, 3)), std::invalid_argument);

    StateVector u(2), w(2);
    u[0] = 1.0;
    w[0] = ComplexScalar(1.0, -2e-5);
    CHECK(max_abs_diff(u, w) == doctest::Approx(2e-5).epsilon(1e-12));
}
