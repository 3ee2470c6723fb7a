#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qobdd/complex_linalg.hpp"

namespace qobdd {

// Read order of the n variables: position p (0-based) tests variable sigma[p]
// (0-based). Documents store the same list 1-based.
struct VariableOrdering {
    std::vector<std::size_t> sigma;

    static VariableOrdering natural(std::size_t n);
    std::size_t positions() const { return sigma.size(); }
};

// The two unitaries selected by the tested bit at one position.
struct TransformationPair {
    ComplexMatrix t0, t1;

    const ComplexMatrix& branch(int bit) const { return bit ? t1 : t0; }
};

// A k-layer quantum OBDD over n variables with state space of dimension
// `width`. Each of the k layers reads every variable once, in the shared
// ordering; pairs are stored layer-major (layer 0 positions 0..n-1 first).
// The start state is always index 0; `accepting` is a sorted set of exit
// state indices, possibly empty.
struct KQobddProgram {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t width = 0;
    VariableOrdering ordering;
    std::vector<TransformationPair> pairs;
    std::vector<std::size_t> accepting;
    std::string name;
    std::string comment;

    std::size_t length() const { return k * n; }
    std::size_t size() const { return width * length(); }

    // layer and position are 0-based here
    const TransformationPair& pair_at(std::size_t layer, std::size_t position) const {
        return pairs[layer * n + position];
    }
    TransformationPair& pair_at(std::size_t layer, std::size_t position) {
        return pairs[layer * n + position];
    }

    bool accepts_state(std::size_t index) const;
};

// Single-pass program: a KQobddProgram whose k is exactly 1.
class QobddProgram {
public:
    explicit QobddProgram(KQobddProgram p);

    const KQobddProgram& get() const { return p_; }
    operator const KQobddProgram&() const { return p_; }

private:
    KQobddProgram p_;
};

// Every violated invariant, one message per finding, each naming the layer,
// position and matrix it concerns. Empty result means the program is valid.
std::vector<std::string> validate(const KQobddProgram& p, Tolerance tol = {});

// Width-2 rotation program over n variables, natural ordering: every position
// applies the identity on bit 0 and the plane rotation R(theta) on bit 1.
// On an input with t ones the final state is R(t*theta) applied to the start.
QobddProgram build_rotation_program(std::size_t n, double theta,
                                    std::vector<std::size_t> accepting);
// k-layer variant: the same pairs in every layer, so t ones give R(k*t*theta).
KQobddProgram build_rotation_program(std::size_t n, double theta,
                                     std::vector<std::size_t> accepting, std::size_t k);

// All pairs identity; useful as an always-accept / always-reject baseline
// depending on whether the accepting set contains the start state.
KQobddProgram build_identity_program(std::size_t width, std::size_t n,
                                     std::vector<std::size_t> accepting, std::size_t k = 1);

// Random program with independent Haar-style unitaries for every matrix,
// deterministic in the seed: per-matrix seeds are drawn from one mt19937_64
// stream in storage order (layer-major position order, t0 before t1).
KQobddProgram build_random_program(std::size_t width, std::size_t k, std::size_t n,
                                   std::uint64_t seed, std::vector<std::size_t> accepting);

}  // namespace qobdd
