#include "qobdd/evaluator.hpp"

#include <cmath>
#include <stdexcept>

#include "qobdd/errors.hpp"

namespace qobdd {

namespace {

void check_input(const KQobddProgram& p, const InputAssignment& a) {
    if (a.size() != p.n)
        throw std::invalid_argument("input has " + std::to_string(a.size()) +
                                    " bits, program reads " + std::to_string(p.n));
}

// w^e, saturating at cap+1 so callers can compare against cap without overflow
std::uint64_t pow_capped(std::uint64_t w, std::uint64_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > cap / (w == 0 ? 1 : w)) return cap + 1;
        r *= w;
        if (r > cap) return cap + 1;
    }
    return r;
}

// row * M for a row vector, fixed ascending accumulation order
StateVector row_times_matrix(const StateVector& row, const ComplexMatrix& m) {
    if (row.dim() != m.rows())
        throw std::invalid_argument("row-matrix product: dim " + std::to_string(row.dim()) +
                                    " vs " + m.shape_string());
    StateVector out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        ComplexScalar acc = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) acc += row[i] * m.at(i, j);
        out[j] = acc;
    }
    return out;
}

}  // namespace

InputAssignment InputAssignment::from_string(std::string_view s) {
    InputAssignment a;
    a.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("input bits must be 0 or 1, got '") + c + "'");
        a.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return a;
}

InputAssignment InputAssignment::from_index(std::size_t n, std::uint64_t lex_index) {
    InputAssignment a;
    a.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        a.bits[i] = static_cast<std::uint8_t>((lex_index >> (n - 1 - i)) & 1u);
    return a;
}

std::string InputAssignment::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

StateVector run(const KQobddProgram& p, const InputAssignment& a) {
    check_input(p, a);
    StateVector state = StateVector::basis(p.width, 0);
    for (std::size_t layer = 0; layer < p.k; ++layer)
        for (std::size_t pos = 0; pos < p.n; ++pos) {
            const int bit = a.bits[p.ordering.sigma[pos]];
            state = apply(p.pair_at(layer, pos).branch(bit), state);
        }
    return state;
}

ComplexScalar final_amplitude(const KQobddProgram& p, const InputAssignment& a,
                              std::size_t state) {
    if (state >= p.width)
        throw std::invalid_argument("state " + std::to_string(state) + " out of range 0.." +
                                    std::to_string(p.width - 1));
    return run(p, a)[state];
}

double acceptance(const KQobddProgram& p, const InputAssignment& a) {
    const StateVector beta = run(p, a);
    double acc = 0.0;
    for (std::size_t j : p.accepting) acc += std::norm(beta[j]);
    return acc;
}

ComplexMatrix layer_unitary(const KQobddProgram& p, std::size_t lambda,
                            const InputAssignment& a) {
    if (lambda < 1 || lambda > p.k)
        throw std::invalid_argument("layer " + std::to_string(lambda) + " out of range 1.." +
                                    std::to_string(p.k));
    check_input(p, a);
    ComplexMatrix u = ComplexMatrix::identity(p.width);
    for (std::size_t pos = 0; pos < p.n; ++pos) {
        const int bit = a.bits[p.ordering.sigma[pos]];
        u = mat_mul(p.pair_at(lambda - 1, pos).branch(bit), u);
    }
    return u;
}

LayerMatrices layer_matrices(const KQobddProgram& p, const InputAssignment& a) {
    LayerMatrices lm;
    ComplexMatrix u1 = layer_unitary(p, 1, a);
    lm.mu1 = StateVector(p.width);
    for (std::size_t j = 0; j < p.width; ++j) lm.mu1[j] = u1.at(j, 0);
    lm.mu.reserve(p.k >= 1 ? p.k - 1 : 0);
    for (std::size_t lambda = 2; lambda <= p.k; ++lambda) {
        ComplexMatrix u = layer_unitary(p, lambda, a);
        ComplexMatrix t(p.width, p.width);  // entry (i, j) = <j|U|i>, no conjugation
        for (std::size_t i = 0; i < p.width; ++i)
            for (std::size_t j = 0; j < p.width; ++j) t.at(i, j) = u.at(j, i);
        lm.mu.push_back(std::move(t));
    }
    return lm;
}

StateVector beta_by_matrix_product(const KQobddProgram& p, const InputAssignment& a) {
    LayerMatrices lm = layer_matrices(p, a);
    StateVector row = lm.mu1;
    for (const ComplexMatrix& m : lm.mu) row = row_times_matrix(row, m);
    return row;
}

ComplexScalar path_amplitude(const LayerMatrices& lm, const std::vector<std::size_t>& path) {
    const std::size_t k = lm.mu.size() + 1;
    const std::size_t w = lm.mu1.dim();
    if (path.size() != k)
        throw std::invalid_argument("path lists " + std::to_string(path.size()) +
                                    " states, expected k = " + std::to_string(k));
    for (std::size_t idx : path)
        if (idx >= w)
            throw std::invalid_argument("path state " + std::to_string(idx) +
                                        " out of range 0.." + std::to_string(w - 1));
    ComplexScalar amp = lm.mu1[path[0]];
    for (std::size_t l = 0; l + 1 < k; ++l) amp *= lm.mu[l].at(path[l], path[l + 1]);
    return amp;
}

ComplexScalar path_amplitude(const KQobddProgram& p, const InputAssignment& a,
                             const std::vector<std::size_t>& path) {
    return path_amplitude(layer_matrices(p, a), path);
}

ComplexScalar beta_by_path_sum(const KQobddProgram& p, const InputAssignment& a,
                               std::size_t exit_state) {
    if (exit_state >= p.width)
        throw std::invalid_argument("exit state " + std::to_string(exit_state) +
                                    " out of range 0.." + std::to_string(p.width - 1));
    const std::uint64_t tuples = pow_capped(p.width, p.k - 1, kPathSumGuard);
    if (tuples > kPathSumGuard)
        throw GuardError("path enumeration needs w^(k-1) = " + std::to_string(p.width) + "^" +
                         std::to_string(p.k - 1) + " tuples, over the limit of " +
                         std::to_string(kPathSumGuard) +
                         "; use the layer-product semantics instead");
    LayerMatrices lm = layer_matrices(p, a);
    std::vector<std::size_t> path(p.k, 0);
    path[p.k - 1] = exit_state;
    ComplexScalar sum = 0.0;
    // guess tuples in lexicographic order; the k = 1 case has the one empty tuple
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::uint64_t rest = t;
        for (std::size_t d = p.k - 1; d-- > 0;) {
            path[d] = static_cast<std::size_t>(rest % p.width);
            rest /= p.width;
        }
        sum += path_amplitude(lm, path);
    }
    return sum;
}

EvalReport evaluate(const KQobddProgram& p, const InputAssignment& a) {
    EvalReport r;
    r.beta = run(p, a);
    double acc = 0.0;
    for (std::size_t j : p.accepting) acc += std::norm(r.beta[j]);
    r.acceptance = acc;
    const StateVector mp = beta_by_matrix_product(p, a);
    r.residual_matrix_product = max_abs_diff(r.beta, mp);
    if (pow_capped(p.width, p.k - 1, kPathSumGuard) <= kPathSumGuard) {
        double worst = 0.0;
        for (std::size_t j = 0; j < p.width; ++j)
            worst = std::max(worst, std::abs(mp[j] - beta_by_path_sum(p, a, j)));
        r.residual_path_sum = worst;
    }
    return r;
}

std::vector<TruthRow> truth_map(const KQobddProgram& p, double threshold, bool strict) {
    if (p.n > kTruthMapMaxN)
        throw GuardError("truth map over " + std::to_string(p.n) + " variables exceeds the limit of " +
                         std::to_string(kTruthMapMaxN));
    const std::uint64_t count = std::uint64_t{1} << p.n;
    std::vector<TruthRow> rows(count);
    // rows are independent; lexicographic order comes from indexing, not from
    // completion order, so the result matches a sequential run bit for bit
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(count); ++idx) {
        TruthRow& row = rows[static_cast<std::size_t>(idx)];
        row.input = InputAssignment::from_index(p.n, static_cast<std::uint64_t>(idx));
        row.acceptance = acceptance(p, row.input);
        row.accept = strict ? row.acceptance > threshold : row.acceptance >= threshold;
    }
    return rows;
}

}  // namespace qobdd
