#include "qobdd/program.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qobdd {

VariableOrdering VariableOrdering::natural(std::size_t n) {
    VariableOrdering o;
    o.sigma.resize(n);
    for (std::size_t i = 0; i < n; ++i) o.sigma[i] = i;
    return o;
}

bool KQobddProgram::accepts_state(std::size_t index) const {
    return std::binary_search(accepting.begin(), accepting.end(), index);
}

QobddProgram::QobddProgram(KQobddProgram p) : p_(std::move(p)) {
    if (p_.k != 1)
        throw std::invalid_argument("QobddProgram requires k = 1, got k = " +
                                    std::to_string(p_.k));
}

std::vector<std::string> validate(const KQobddProgram& p, Tolerance tol) {
    std::vector<std::string> out;
    auto complain = [&out](std::string msg) { out.push_back(std::move(msg)); };

    if (p.n == 0) complain("variable count n must be >= 1");
    if (p.k == 0) complain("layer count k must be >= 1");
    if (p.width == 0) complain("width must be >= 1");

    if (p.ordering.sigma.size() != p.n) {
        complain("ordering has " + std::to_string(p.ordering.sigma.size()) + " entries, expected " +
                 std::to_string(p.n));
    } else {
        std::vector<bool> seen(p.n, false);
        for (std::size_t pos = 0; pos < p.n; ++pos) {
            const std::size_t var = p.ordering.sigma[pos];
            if (var >= p.n) {
                complain("ordering position " + std::to_string(pos + 1) + ": variable index " +
                         std::to_string(var + 1) + " out of range 1.." + std::to_string(p.n));
            } else if (seen[var]) {
                complain("ordering position " + std::to_string(pos + 1) + ": variable " +
                         std::to_string(var + 1) + " repeated");
            } else {
                seen[var] = true;
            }
        }
    }

    if (p.pairs.size() != p.k * p.n) {
        complain("program stores " + std::to_string(p.pairs.size()) + " pairs, expected k*n = " +
                 std::to_string(p.k * p.n));
        return out;  // per-pair checks would index out of bounds
    }

    for (std::size_t layer = 0; layer < p.k; ++layer) {
        for (std::size_t pos = 0; pos < p.n; ++pos) {
            const TransformationPair& pair = p.pair_at(layer, pos);
            for (int bit = 0; bit <= 1; ++bit) {
                const ComplexMatrix& m = pair.branch(bit);
                const std::string where = "layer " + std::to_string(layer + 1) + " position " +
                                          std::to_string(pos + 1) + " t" + std::to_string(bit);
                if (m.rows() != p.width || m.cols() != p.width) {
                    complain(where + ": shape " + m.shape_string() + ", expected " +
                             std::to_string(p.width) + "x" + std::to_string(p.width));
                    continue;
                }
                if (!m.all_finite()) {
                    complain(where + ": non-finite entry");
                    continue;
                }
                const double defect = unitarity_defect(m);
                if (defect > tol.eps)
                    complain(where + ": not unitary (defect " + std::to_string(defect) + ")");
            }
        }
    }

    std::size_t prev = 0;
    bool first = true;
    for (std::size_t idx : p.accepting) {
        if (idx >= p.width)
            complain("accepting state " + std::to_string(idx) + " out of range 0.." +
                     std::to_string(p.width == 0 ? 0 : p.width - 1));
        if (!first && idx <= prev) complain("accepting set not strictly increasing");
        prev = idx;
        first = false;
    }

    return out;
}

KQobddProgram build_rotation_program(std::size_t n, double theta,
                                     std::vector<std::size_t> accepting, std::size_t k) {
    if (n == 0) throw std::invalid_argument("build_rotation_program: n must be >= 1");
    if (k == 0) throw std::invalid_argument("build_rotation_program: k must be >= 1");
    KQobddProgram p;
    p.n = n;
    p.k = k;
    p.width = 2;
    p.ordering = VariableOrdering::natural(n);
    TransformationPair pair{ComplexMatrix::identity(2), plane_rotation(theta)};
    p.pairs.assign(k * n, pair);
    p.accepting = std::move(accepting);
    std::sort(p.accepting.begin(), p.accepting.end());
    return p;
}

QobddProgram build_rotation_program(std::size_t n, double theta,
                                    std::vector<std::size_t> accepting) {
    return QobddProgram(build_rotation_program(n, theta, std::move(accepting), 1));
}

KQobddProgram build_identity_program(std::size_t width, std::size_t n,
                                     std::vector<std::size_t> accepting, std::size_t k) {
    if (width == 0 || n == 0 || k == 0)
        throw std::invalid_argument("build_identity_program: width, n and k must be >= 1");
    KQobddProgram p;
    p.n = n;
    p.k = k;
    p.width = width;
    p.ordering = VariableOrdering::natural(n);
    TransformationPair pair{ComplexMatrix::identity(width), ComplexMatrix::identity(width)};
    p.pairs.assign(k * n, pair);
    p.accepting = std::move(accepting);
    std::sort(p.accepting.begin(), p.accepting.end());
    return p;
}

KQobddProgram build_random_program(std::size_t width, std::size_t k, std::size_t n,
                                   std::uint64_t seed, std::vector<std::size_t> accepting) {
    if (width == 0 || n == 0 || k == 0)
        throw std::invalid_argument("build_random_program: width, n and k must be >= 1");
    KQobddProgram p;
    p.n = n;
    p.k = k;
    p.width = width;
    p.ordering = VariableOrdering::natural(n);
    std::mt19937_64 seeds(seed);
    p.pairs.reserve(k * n);
    for (std::size_t i = 0; i < k * n; ++i) {
        ComplexMatrix t0 = random_unitary(width, seeds());
        ComplexMatrix t1 = random_unitary(width, seeds());
        p.pairs.push_back(TransformationPair{std::move(t0), std::move(t1)});
    }
    p.accepting = std::move(accepting);
    std::sort(p.accepting.begin(), p.accepting.end());
    return p;
}

}  // namespace qobdd
