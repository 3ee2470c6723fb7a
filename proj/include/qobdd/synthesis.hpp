#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qobdd/program.hpp"

namespace qobdd {

// Index mapping for the product state space D1 x D2: the left factor is the
// most significant digit, so (i, j) sits at i*w2 + j.
struct ProductStateIndexing {
    std::size_t w1 = 0;
    std::size_t w2 = 0;

    std::size_t index(std::size_t i, std::size_t j) const { return i * w2 + j; }
    std::pair<std::size_t, std::size_t> pair_of(std::size_t idx) const {
        return {idx / w2, idx % w2};
    }
    std::size_t dim() const { return w1 * w2; }
};

// Position-wise tensor product of two programs over the same variables: width
// w1*w2, same n, k and ordering, pair (T0 x S0, T1 x S1) at every position,
// with the given accepting set. The final amplitude of |d1 d2> is the product
// of the factors' final amplitudes of |d1> and |d2>.
KQobddProgram tensor_programs(const KQobddProgram& b1, const KQobddProgram& b2,
                              std::vector<std::size_t> accepting);

// Conjunction: accepting set F1 x F2, acceptance p1*p2.
KQobddProgram and_synthesis(const KQobddProgram& b1, const KQobddProgram& b2);

// Disjunction: accepting set F1 x D2 union D1 x F2, acceptance p1+p2-p1*p2.
KQobddProgram or_synthesis(const KQobddProgram& b1, const KQobddProgram& b2);

// Negation: same transformations, complemented accepting set, acceptance 1-p.
KQobddProgram not_synthesis(const KQobddProgram& b);

}  // namespace qobdd
