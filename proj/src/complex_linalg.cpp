#include "qobdd/complex_linalg.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace qobdd {

namespace {

// below these sizes the parallel regions are pure overhead
constexpr std::int64_t kMulCutoff = 1 << 15;     // multiply-add count
constexpr std::int64_t kElemCutoff = 1 << 14;    // output element count

void check_mul_shapes(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: shape mismatch " + a.shape_string() + " * " +
                                    b.shape_string());
}

// one output element of a*b; fixed ascending accumulation order shared by the
// serial and parallel kernels so their results are bit-identical
inline ComplexScalar mul_element(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t i,
                                 std::size_t j) {
    ComplexScalar acc = 0.0;
    for (std::size_t t = 0; t < a.cols(); ++t) acc += a.at(i, t) * b.at(t, j);
    return acc;
}

inline ComplexScalar apply_element(const ComplexMatrix& m, const StateVector& v, std::size_t i) {
    ComplexScalar acc = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
    return acc;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

std::string ComplexMatrix::shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

bool ComplexMatrix::all_finite() const {
    for (const ComplexScalar& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const ComplexScalar& z : amps) s += std::norm(z);
    return s;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    StateVector v(dim);
    v[index] = 1.0;
    return v;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_mul_shapes(a, b);
    ComplexMatrix c(a.rows(), b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(a.rows());
    const std::int64_t cols = static_cast<std::int64_t>(b.cols());
    const std::int64_t work = rows * cols * static_cast<std::int64_t>(a.cols());
#pragma omp parallel for if (work >= kMulCutoff)
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::int64_t j = 0; j < cols; ++j)
            c.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                mul_element(a, b, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return c;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(c.rows());
#pragma omp parallel for if (rows * static_cast<std::int64_t>(c.cols()) >= kElemCutoff)
    for (std::int64_t r = 0; r < rows; ++r) {
        const std::size_t i1 = static_cast<std::size_t>(r) / b.rows();
        const std::size_t i2 = static_cast<std::size_t>(r) % b.rows();
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
            for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                c.at(static_cast<std::size_t>(r), j1 * b.cols() + j2) = a.at(i1, j1) * b.at(i2, j2);
    }
    return c;
}

StateVector apply(const ComplexMatrix& m, const StateVector& v) {
    if (m.cols() != v.dim())
        throw std::invalid_argument("apply: shape mismatch " + m.shape_string() + " * vector of dim " +
                                    std::to_string(v.dim()));
    StateVector r(m.rows());
    const std::int64_t rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for if (rows * static_cast<std::int64_t>(m.cols()) >= kMulCutoff)
    for (std::int64_t i = 0; i < rows; ++i)
        r[static_cast<std::size_t>(i)] = apply_element(m, v, static_cast<std::size_t>(i));
    return r;
}

ComplexMatrix conj_transpose(const ComplexMatrix& m) {
    ComplexMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(j, i) = std::conj(m.at(i, j));
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("max_abs_diff: shape mismatch " + a.shape_string() + " vs " +
                                    b.shape_string());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("max_abs_diff: dim mismatch " + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

double unitarity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("unitarity check requires a square matrix, got " +
                                    m.shape_string());
    ComplexMatrix g = mat_mul(conj_transpose(m), m);
    return max_abs_diff(g, ComplexMatrix::identity(m.rows()));
}

bool is_unitary(const ComplexMatrix& m, Tolerance tol) { return unitarity_defect(m) <= tol.eps; }

ComplexMatrix complete_unitary(const StateVector& target, std::size_t pinned_col, Tolerance tol) {
    const std::size_t dim = target.dim();
    if (dim == 0) throw std::invalid_argument("complete_unitary: empty target");
    if (pinned_col >= dim)
        throw std::invalid_argument("complete_unitary: pinned column " + std::to_string(pinned_col) +
                                    " out of range for dim " + std::to_string(dim));
    if (std::abs(std::sqrt(target.norm_sq()) - 1.0) > tol.eps)
        throw std::invalid_argument("complete_unitary: target is not normalized (norm " +
                                    std::to_string(std::sqrt(target.norm_sq())) + ")");

    std::vector<StateVector> basis_cols;
    basis_cols.push_back(target);
    std::vector<StateVector> extras;
    for (std::size_t cand = 0; cand < dim && extras.size() + 1 < dim; ++cand) {
        StateVector r = StateVector::basis(dim, cand);
        for (const StateVector& u : basis_cols) {
            ComplexScalar ip = 0.0;  // <u|r>, conjugate-linear in the first argument
            for (std::size_t i = 0; i < dim; ++i) ip += std::conj(u[i]) * r[i];
            for (std::size_t i = 0; i < dim; ++i) r[i] -= ip * u[i];
        }
        const double nrm = std::sqrt(r.norm_sq());
        if (nrm < tol.eps) continue;  // candidate already covered, skip
        for (std::size_t i = 0; i < dim; ++i) r[i] /= nrm;
        basis_cols.push_back(r);
        extras.push_back(r);
    }
    if (extras.size() + 1 != dim)
        throw std::runtime_error("complete_unitary: standard basis did not span the complement");

    ComplexMatrix u(dim, dim);
    std::size_t next_extra = 0;
    for (std::size_t c = 0; c < dim; ++c) {
        const StateVector& col = (c == pinned_col) ? target : extras[next_extra];
        if (c != pinned_col) ++next_extra;
        for (std::size_t i = 0; i < dim; ++i) u.at(i, c) = col[i];
    }
    return u;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// top 53 bits of a draw, mapped into (0,1]; never 0, so log is safe
inline double unit_open_closed(std::mt19937_64& g) {
    return static_cast<double>((g() >> 11) + 1) * 0x1.0p-53;
}
inline double unit_closed_open(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// one complex standard normal via Box-Muller
inline ComplexScalar complex_normal(std::mt19937_64& g) {
    const double u1 = unit_open_closed(g);
    const double u2 = unit_closed_open(g);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

}  // namespace

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) throw std::invalid_argument("random_unitary: dim must be >= 1");
    std::mt19937_64 gen(seed);
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = complex_normal(gen);

    // modified Gram-Schmidt over columns, ascending; redraw a column that
    // degenerates (probability ~0, but the stream keeps it deterministic)
    for (std::size_t c = 0; c < dim; ++c) {
        int attempts = 0;
        for (;;) {
            for (std::size_t p = 0; p < c; ++p) {
                ComplexScalar ip = 0.0;
                for (std::size_t i = 0; i < dim; ++i) ip += std::conj(m.at(i, p)) * m.at(i, c);
                for (std::size_t i = 0; i < dim; ++i) m.at(i, c) -= ip * m.at(i, p);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(m.at(i, c));
            nrm = std::sqrt(nrm);
            if (nrm >= 1e-12) {
                for (std::size_t i = 0; i < dim; ++i) m.at(i, c) /= nrm;
                break;
            }
            if (++attempts > 100)
                throw std::runtime_error("random_unitary: column kept degenerating");
            for (std::size_t i = 0; i < dim; ++i) m.at(i, c) = complex_normal(gen);
        }
    }
    return m;
}

ComplexMatrix plane_rotation(double theta) {
    ComplexMatrix r(2, 2);
    r.at(0, 0) = std::cos(theta);
    r.at(0, 1) = -std::sin(theta);
    r.at(1, 0) = std::sin(theta);
    r.at(1, 1) = std::cos(theta);
    return r;
}

namespace serial {

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_mul_shapes(a, b);
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = mul_element(a, b, i, j);
    return c;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t r = 0; r < c.rows(); ++r) {
        const std::size_t i1 = r / b.rows();
        const std::size_t i2 = r % b.rows();
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
            for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                c.at(r, j1 * b.cols() + j2) = a.at(i1, j1) * b.at(i2, j2);
    }
    return c;
}

StateVector apply(const ComplexMatrix& m, const StateVector& v) {
    if (m.cols() != v.dim())
        throw std::invalid_argument("apply: shape mismatch " + m.shape_string() + " * vector of dim " +
                                    std::to_string(v.dim()));
    StateVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) r[i] = apply_element(m, v, i);
    return r;
}

}  // namespace serial

}  // namespace qobdd
