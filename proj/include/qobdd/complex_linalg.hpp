#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qobdd {

using ComplexScalar = std::complex<double>;

// Absolute comparison tolerance. 1e-9 everywhere unless a caller says otherwise;
// construction-time identities are typically checked tighter (1e-12) by tests.
struct Tolerance {
    double eps = 1e-9;
};

// Dense row-major complex matrix. Entry (r, c) is <r|M|c>: states are column
// vectors and applying M maps a state v to M*v.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    ComplexScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const ComplexScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexScalar* data() { return data_.data(); }
    const ComplexScalar* data() const { return data_.data(); }

    bool same_shape(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
    std::string shape_string() const;

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ComplexScalar> data_;
};

struct StateVector {
    std::vector<ComplexScalar> amps;

    StateVector() = default;
    explicit StateVector(std::size_t dim) : amps(dim) {}

    std::size_t dim() const { return amps.size(); }
    ComplexScalar& operator[](std::size_t i) { return amps[i]; }
    const ComplexScalar& operator[](std::size_t i) const { return amps[i]; }

    // squared Euclidean norm, sum of |amp|^2
    double norm_sq() const;

    static StateVector basis(std::size_t dim, std::size_t index);
};

// Parallel kernels. Each output element is computed independently with a fixed
// accumulation order, so results are bit-identical to the serial:: references
// regardless of thread count.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector apply(const ComplexMatrix& m, const StateVector& v);

ComplexMatrix conj_transpose(const ComplexMatrix& m);

// max entrywise |a - b|; shapes must match
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

// true when max entry of |M^dagger M - I| is <= tol.eps; non-square matrices
// are rejected with std::invalid_argument
bool is_unitary(const ComplexMatrix& m, Tolerance tol = {});
// the deviation itself, for diagnostics
double unitarity_defect(const ComplexMatrix& m);

// Deterministic completion of a normalized target column to a full unitary.
// Column pinned_col is exactly the target; the remaining column slots are
// filled in ascending order by Gram-Schmidt over the standard basis vectors
// e_0, e_1, ... taken in ascending index order, skipping any candidate whose
// residual norm after projection is below tol.eps.
ComplexMatrix complete_unitary(const StateVector& target, std::size_t pinned_col,
                               Tolerance tol = {});

// Haar-style random unitary, deterministic in (dim, seed). Entries are filled
// row-major with complex standard normals produced by Box-Muller over raw
// mt19937_64 draws (53-bit mantissa mapping, no std::*_distribution, whose
// algorithms the standard leaves unspecified); columns are then orthonormalized
// by modified Gram-Schmidt in ascending order. A degenerate column is redrawn
// from the same stream.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

// 2x2 plane rotation [[cos t, -sin t], [sin t, cos t]]
ComplexMatrix plane_rotation(double theta);

namespace serial {
// Reference implementations: same element-level arithmetic as the parallel
// kernels, plain loops. Kept for equivalence tests and benchmarks.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector apply(const ComplexMatrix& m, const StateVector& v);
}  // namespace serial

}  // namespace qobdd
