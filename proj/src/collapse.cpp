#include "qobdd/collapse.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qobdd/errors.hpp"

namespace qobdd {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, const char* what) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > kCollapseDimGuard) break;  // saturate past the guard
        r *= base;
    }
    if (r + 2 > kCollapseDimGuard)
        throw GuardError(std::string(what) + " needs " + std::to_string(base) + "^" +
                         std::to_string(exp) + "+2 states, over the limit of " +
                         std::to_string(kCollapseDimGuard));
    return r;
}

void check_collapsible(const KQobddProgram& p) {
    if (p.n == 0 || p.k == 0 || p.width == 0)
        throw std::invalid_argument("collapse: program must have n, k, width >= 1");
    if (p.pairs.size() != p.k * p.n)
        throw std::invalid_argument("collapse: program stores " + std::to_string(p.pairs.size()) +
                                    " pairs, expected " + std::to_string(p.k * p.n));
}

// block-diagonal extension by the identity on the two sink states
ComplexMatrix extend_with_sinks(const ComplexMatrix& m) {
    ComplexMatrix r(m.rows() + 2, m.cols() + 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j);
    r.at(m.rows(), m.cols()) = 1.0;
    r.at(m.rows() + 1, m.cols() + 1) = 1.0;
    return r;
}

}  // namespace

std::size_t CollapsedSpace::m() const {
    std::size_t r = 1;
    for (std::size_t i = 1; i < k; ++i) r *= w;
    return r;
}

std::size_t CollapsedSpace::block_dim() const { return m() * w; }

std::size_t CollapsedSpace::index(const std::vector<std::size_t>& digits) const {
    if (digits.size() != k)
        throw std::invalid_argument("collapsed index needs " + std::to_string(k) + " digits, got " +
                                    std::to_string(digits.size()));
    std::size_t idx = 0;
    for (std::size_t d : digits) {
        if (d >= w)
            throw std::invalid_argument("collapsed digit " + std::to_string(d) +
                                        " out of range 0.." + std::to_string(w - 1));
        idx = idx * w + d;
    }
    return idx;
}

std::vector<std::size_t> CollapsedSpace::digits(std::size_t index) const {
    if (index >= block_dim())
        throw std::invalid_argument("collapsed index " + std::to_string(index) +
                                    " outside the block of dim " + std::to_string(block_dim()));
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
        d[i] = index % w;
        index /= w;
    }
    return d;
}

ComplexMatrix tensor_layer_transforms(const KQobddProgram& p, std::size_t position, int eps) {
    check_collapsible(p);
    if (position >= p.n)
        throw std::invalid_argument("position " + std::to_string(position) + " out of range 0.." +
                                    std::to_string(p.n - 1));
    ComplexMatrix m = p.pair_at(0, position).branch(eps);
    for (std::size_t layer = 1; layer < p.k; ++layer)
        m = tensor_product(m, p.pair_at(layer, position).branch(eps));
    return m;
}

ComplexMatrix build_v(std::size_t w, std::size_t k) {
    if (w == 0 || k == 0) throw std::invalid_argument("build_v: w and k must be >= 1");
    checked_pow(w, k, "preparation matrix");
    const CollapsedSpace space{w, k};
    const double m = static_cast<double>(space.m());
    StateVector col(space.dim());
    for (std::size_t i = 0; i < space.m(); ++i) col[i] = 1.0 / std::sqrt(2.0 * m);
    col[space.t0()] = 1.0 / (2.0 * std::sqrt(m));
    col[space.t1()] = std::sqrt(2.0 * m - 1.0) / (2.0 * std::sqrt(m));
    return complete_unitary(col, 0);
}

QobddProgram collapse(const KQobddProgram& p) {
    check_collapsible(p);
    checked_pow(p.width, p.k, "collapse");
    const CollapsedSpace space{p.width, p.k};
    const ComplexMatrix v = build_v(p.width, p.k);

    KQobddProgram out;
    out.n = p.n;
    out.k = 1;
    out.width = space.dim();
    out.ordering = p.ordering;
    out.pairs.reserve(p.n);
    for (std::size_t pos = 0; pos < p.n; ++pos) {
        TransformationPair pair;
        for (int eps = 0; eps <= 1; ++eps) {
            ComplexMatrix t = extend_with_sinks(tensor_layer_transforms(p, pos, eps));
            if (pos == 0) t = mat_mul(t, v);  // preparation acts before the first test
            (eps ? pair.t1 : pair.t0) = std::move(t);
        }
        out.pairs.push_back(std::move(pair));
    }
    for (std::size_t x = 0; x < space.block_dim(); ++x)
        if (p.accepts_state(x % p.width)) out.accepting.push_back(x);
    out.accepting.push_back(space.t1());
    return QobddProgram(std::move(out));
}

double predicted_acceptance(double acc, std::size_t w, std::size_t k) {
    if (w == 0 || k == 0) throw std::invalid_argument("predicted_acceptance: w, k must be >= 1");
    if (acc < -1e-12 || acc > 1.0 + 1e-12)
        throw std::invalid_argument("predicted_acceptance: acceptance " + std::to_string(acc) +
                                    " outside [0, 1]");
    const double m = std::pow(static_cast<double>(w), static_cast<double>(k - 1));
    return acc / (2.0 * m) + (2.0 * m - 1.0) / (4.0 * m);
}

QobddProgram collapse_entangled(const KQobddProgram& p) {
    check_collapsible(p);
    const std::size_t block = checked_pow(p.width, 2 * p.k - 1, "entangled collapse");
    const std::size_t w = p.width;
    const std::size_t dim = block + 2;
    const double m = std::pow(static_cast<double>(w), static_cast<double>(p.k - 1));
    const double gamma = m / std::sqrt(2.0 * m * m - 1.0);
    const double gamma1 = std::sqrt((m * m - 1.0) / (2.0 * m * m - 1.0));

    // preparation: gamma/sqrt(m) on |0, i2, i2, ..., ik, ik>, gamma1 on t1
    StateVector prep(dim);
    const std::size_t tuples = static_cast<std::size_t>(m + 0.5);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rest = t;
        std::size_t idx = 0;  // digits c1=0, then (r_l, c_l) pairs, most significant first
        std::vector<std::size_t> guess(p.k >= 1 ? p.k - 1 : 0);
        for (std::size_t d = guess.size(); d-- > 0;) {
            guess[d] = rest % w;
            rest /= w;
        }
        // leading digit c1 = 0 contributes nothing to the index
        for (std::size_t d = 0; d < guess.size(); ++d) idx = (idx * w + guess[d]) * w + guess[d];
        prep[idx] = gamma / std::sqrt(m);
    }
    prep[block + 1] = gamma1;
    const ComplexMatrix vprime = complete_unitary(prep, 0);

    // decode: B undone on each (output, record) pair, identity on the last track
    ComplexMatrix zblock = ComplexMatrix::identity(1);
    if (p.k >= 2) {
        StateVector phi(w * w);
        for (std::size_t i = 0; i < w; ++i) phi[i * w + i] = 1.0 / std::sqrt(static_cast<double>(w));
        const ComplexMatrix bdag = conj_transpose(complete_unitary(phi, 0));
        for (std::size_t l = 0; l + 1 < p.k; ++l) zblock = tensor_product(zblock, bdag);
    }
    zblock = tensor_product(zblock, ComplexMatrix::identity(w));
    const ComplexMatrix z = extend_with_sinks(zblock);

    KQobddProgram out;
    out.n = p.n;
    out.k = 1;
    out.width = dim;
    out.ordering = p.ordering;
    out.pairs.reserve(p.n);
    for (std::size_t pos = 0; pos < p.n; ++pos) {
        TransformationPair pair;
        for (int eps = 0; eps <= 1; ++eps) {
            ComplexMatrix wb = p.pair_at(0, pos).branch(eps);
            for (std::size_t layer = 1; layer < p.k; ++layer) {
                wb = tensor_product(wb, ComplexMatrix::identity(w));  // record track idles
                wb = tensor_product(wb, p.pair_at(layer, pos).branch(eps));
            }
            ComplexMatrix t = extend_with_sinks(wb);
            if (pos == 0) t = mat_mul(t, vprime);
            if (pos == p.n - 1) t = mat_mul(z, t);
            (eps ? pair.t1 : pair.t0) = std::move(t);
        }
        out.pairs.push_back(std::move(pair));
    }
    for (std::size_t j : p.accepting) out.accepting.push_back(j);
    out.accepting.push_back(block + 1);
    return QobddProgram(std::move(out));
}

double entangled_predicted_acceptance(double acc, std::size_t w, std::size_t k) {
    if (w == 0 || k == 0)
        throw std::invalid_argument("entangled_predicted_acceptance: w, k must be >= 1");
    if (acc < -1e-12 || acc > 1.0 + 1e-12)
        throw std::invalid_argument("entangled_predicted_acceptance: acceptance " +
                                    std::to_string(acc) + " outside [0, 1]");
    const double m = std::pow(static_cast<double>(w), static_cast<double>(k - 1));
    return acc / (2.0 * m * m - 1.0) + (m * m - 1.0) / (2.0 * m * m - 1.0);
}

CollapseReport collapse_report(const KQobddProgram& original, const KQobddProgram& collapsed,
                               const InputAssignment& a, double predicted) {
    CollapseReport r;
    r.original = acceptance(original, a);
    r.collapsed = acceptance(collapsed, a);
    r.predicted = predicted;
    r.residual = std::abs(r.collapsed - r.predicted);
    return r;
}

}  // namespace qobdd
