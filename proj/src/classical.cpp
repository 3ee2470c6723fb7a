#include "qobdd/classical.hpp"

#include <algorithm>

#include "qobdd/errors.hpp"

namespace qobdd {

bool DetObdd::accepts_state(std::size_t index) const {
    return std::binary_search(accepting.begin(), accepting.end(), index);
}

std::vector<std::string> validate(const DetObdd& d) {
    std::vector<std::string> out;
    if (d.n == 0) out.push_back("variable count n must be >= 1");
    if (d.width == 0) out.push_back("width must be >= 1");

    if (d.ordering.sigma.size() != d.n) {
        out.push_back("ordering has " + std::to_string(d.ordering.sigma.size()) +
                      " entries, expected " + std::to_string(d.n));
    } else {
        std::vector<bool> seen(d.n, false);
        for (std::size_t pos = 0; pos < d.n; ++pos) {
            const std::size_t var = d.ordering.sigma[pos];
            if (var >= d.n)
                out.push_back("ordering position " + std::to_string(pos + 1) +
                              ": variable index out of range");
            else if (seen[var])
                out.push_back("ordering position " + std::to_string(pos + 1) +
                              ": variable repeated");
            else
                seen[var] = true;
        }
    }

    if (d.delta.size() != d.n) {
        out.push_back("automaton stores " + std::to_string(d.delta.size()) +
                      " positions, expected " + std::to_string(d.n));
        return out;
    }
    for (std::size_t pos = 0; pos < d.n; ++pos)
        for (int bit = 0; bit <= 1; ++bit) {
            const std::vector<std::size_t>& f = d.delta[pos][bit];
            const std::string where =
                "position " + std::to_string(pos + 1) + " delta" + std::to_string(bit);
            if (f.size() != d.width) {
                out.push_back(where + ": " + std::to_string(f.size()) + " entries, expected " +
                              std::to_string(d.width));
                continue;
            }
            for (std::size_t s = 0; s < f.size(); ++s)
                if (f[s] >= d.width)
                    out.push_back(where + ": state " + std::to_string(s) + " maps to " +
                                  std::to_string(f[s]) + ", out of range");
        }

    for (std::size_t idx : d.accepting)
        if (idx >= d.width)
            out.push_back("accepting state " + std::to_string(idx) + " out of range");
    return out;
}

bool eval_det(const DetObdd& d, const InputAssignment& a) {
    if (a.size() != d.n)
        throw std::invalid_argument("input has " + std::to_string(a.size()) +
                                    " bits, automaton reads " + std::to_string(d.n));
    std::size_t state = 0;
    for (std::size_t pos = 0; pos < d.n; ++pos)
        state = d.delta[pos][a.bits[d.ordering.sigma[pos]]][state];
    return d.accepts_state(state);
}

DetObdd build_no_n(std::size_t n) {
    if (n == 0) throw std::invalid_argument("build_no_n: n must be >= 1");
    DetObdd d;
    d.n = n;
    d.width = 3;
    d.ordering = VariableOrdering::natural(n);
    const std::vector<std::size_t> on_zero = {0, 0, 2};
    const std::vector<std::size_t> on_one = {1, 2, 2};
    d.delta.assign(n, {on_zero, on_one});
    d.accepting = {2};
    d.name = "no_" + std::to_string(n);
    return d;
}

DetObdd build_parity_obdd(std::size_t n) {
    if (n == 0) throw std::invalid_argument("build_parity_obdd: n must be >= 1");
    DetObdd d;
    d.n = n;
    d.width = 2;
    d.ordering = VariableOrdering::natural(n);
    const std::vector<std::size_t> keep = {0, 1};
    const std::vector<std::size_t> swap = {1, 0};
    d.delta.assign(n, {keep, swap});
    d.accepting = {1};
    d.name = "parity_" + std::to_string(n);
    return d;
}

bool is_reversible(const DetObdd& d) {
    for (std::size_t pos = 0; pos < d.delta.size(); ++pos)
        for (int bit = 0; bit <= 1; ++bit) {
            std::vector<bool> hit(d.width, false);
            for (std::size_t s = 0; s < d.delta[pos][bit].size(); ++s) {
                const std::size_t img = d.delta[pos][bit][s];
                if (img >= d.width || hit[img]) return false;
                hit[img] = true;
            }
            if (d.delta[pos][bit].size() != d.width) return false;
        }
    return true;
}

QobddProgram lift_reversible(const DetObdd& d) {
    std::vector<std::string> findings = validate(d);
    if (!findings.empty()) throw ValidationError("lift: invalid automaton: " + findings.front());
    for (std::size_t pos = 0; pos < d.n; ++pos)
        for (int bit = 0; bit <= 1; ++bit) {
            std::vector<bool> hit(d.width, false);
            for (std::size_t img : d.delta[pos][bit]) {
                if (hit[img])
                    throw ValidationError("lift: position " + std::to_string(pos + 1) + " delta" +
                                          std::to_string(bit) + " is not a bijection");
                hit[img] = true;
            }
        }

    KQobddProgram p;
    p.n = d.n;
    p.k = 1;
    p.width = d.width;
    p.ordering = d.ordering;
    p.pairs.reserve(d.n);
    for (std::size_t pos = 0; pos < d.n; ++pos) {
        TransformationPair pair{ComplexMatrix(d.width, d.width), ComplexMatrix(d.width, d.width)};
        for (std::size_t s = 0; s < d.width; ++s) {
            pair.t0.at(d.delta[pos][0][s], s) = 1.0;
            pair.t1.at(d.delta[pos][1][s], s) = 1.0;
        }
        p.pairs.push_back(std::move(pair));
    }
    p.accepting = d.accepting;
    p.name = d.name;
    p.comment = d.comment;
    return QobddProgram(std::move(p));
}

}  // namespace qobdd
