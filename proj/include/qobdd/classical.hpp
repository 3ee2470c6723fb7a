#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qobdd/evaluator.hpp"
#include "qobdd/program.hpp"

namespace qobdd {

// Deterministic OBDD in automaton form: one total transition function per
// position and bit over a fixed state set, start state 0, accepting subset.
struct DetObdd {
    std::size_t n = 0;
    std::size_t width = 0;
    VariableOrdering ordering;
    // delta[pos][bit][state] is the successor state
    std::vector<std::array<std::vector<std::size_t>, 2>> delta;
    std::vector<std::size_t> accepting;
    std::string name;
    std::string comment;

    bool accepts_state(std::size_t index) const;
};

std::vector<std::string> validate(const DetObdd& d);

bool eval_det(const DetObdd& d, const InputAssignment& a);

// Width-3 automaton accepting exactly the inputs with two adjacent ones:
// state 0 "previous bit was 0", state 1 "previous bit was 1", state 2 found
// (absorbing, accepting). Natural ordering.
DetObdd build_no_n(std::size_t n);

// Width-2 parity automaton: bit 0 keeps the state, bit 1 swaps; accepts odd
// inputs. Reversible, so it lifts exactly.
DetObdd build_parity_obdd(std::size_t n);

// True when every per-position transition is a bijection on the state set.
bool is_reversible(const DetObdd& d);

// Permutation-matrix lift of a reversible DetObdd: T^eps maps e_i to
// e_{delta(i)}, same ordering and accepting set. Acceptance of the lift is
// exactly 0 or 1 and matches eval_det. Throws ValidationError when the input
// is not reversible (naming a colliding position) or otherwise invalid.
QobddProgram lift_reversible(const DetObdd& d);

}  // namespace qobdd
