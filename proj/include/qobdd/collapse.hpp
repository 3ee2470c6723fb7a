#pragma once

#include <cstddef>
#include <vector>

#include "qobdd/evaluator.hpp"
#include "qobdd/program.hpp"

namespace qobdd {

// collapsed simulations refuse state spaces above this dimension
inline constexpr std::size_t kCollapseDimGuard = 10'000;

// Index layout of the collapsed state space D^k plus two sink states. Block
// states are k-digit base-w numbers, first digit most significant; t0 (the
// rejecting sink) and t1 (the accepting sink) follow the block.
struct CollapsedSpace {
    std::size_t w = 0;
    std::size_t k = 0;

    std::size_t m() const;          // w^(k-1), number of guess tuples
    std::size_t block_dim() const;  // w^k
    std::size_t dim() const { return block_dim() + 2; }
    std::size_t t0() const { return block_dim(); }
    std::size_t t1() const { return block_dim() + 1; }

    std::size_t index(const std::vector<std::size_t>& digits) const;
    std::vector<std::size_t> digits(std::size_t index) const;
};

// Tensor of the position's selected matrices across all k layers, layer 1 as
// the most significant factor: T(pos)^eps x T(n+pos)^eps x ... Position is
// 0-based.
ComplexMatrix tensor_layer_transforms(const KQobddProgram& p, std::size_t position, int eps);

// The preparation unitary: column 0 spreads amplitude 1/sqrt(2m) over the m
// block states whose first digit is 0, puts 1/(2 sqrt(m)) on the rejecting
// sink and sqrt(2m-1)/(2 sqrt(m)) on the accepting sink; the remaining
// columns are the deterministic Gram-Schmidt completion.
ComplexMatrix build_v(std::size_t w, std::size_t k);

// Single-pass uniform-guess simulation: width w^k+2, same n and ordering.
// Position 0 composes the preparation before its tensor transform; every
// other position applies its tensor transform extended by the identity on the
// sinks. Accepting: block states whose last digit is accepted, plus t1.
//
// The guess superposition is a product state across layers, so amplitudes of
// different guess tuples never interfere; the acceptance of the result is an
// affine image of the original acceptance (predicted_acceptance) only when
// m = 1, that is k = 1 or w = 1. What it computes in general is
//   1/2 * sum_{j in F} |<j| U_k(a) u>|^2 + (2m-1)/(4m),  u = uniform vector.
// collapse_entangled below restores the interference at a wider state space.
QobddProgram collapse(const KQobddProgram& p);

// The affine law acc/(2m) + (2m-1)/(4m) targeted by collapse; fixes 1/2.
double predicted_acceptance(double acc, std::size_t w, std::size_t k);

// Single-pass simulation that keeps, for each layer beyond the first, a
// record track entangled with the layer's guessed input (pair states
// sum_i |ii>/sqrt(w)); a fixed decode folded into the last position projects
// record/output pairs back onto |00>, which makes the per-guess amplitudes
// interfere exactly like the layer product. Width w^(2k-1)+2; accepting
// states are |0...0 j> for accepted j, plus t1.
QobddProgram collapse_entangled(const KQobddProgram& p);

// The exact affine law of collapse_entangled: acc/(2m^2-1) + (m^2-1)/(2m^2-1).
// Slope is positive and the fixed point is 1/2, so strict and weak threshold
// comparisons against 1/2 survive the map in both directions.
double entangled_predicted_acceptance(double acc, std::size_t w, std::size_t k);

struct CollapseReport {
    double original = 0.0;
    double collapsed = 0.0;
    double predicted = 0.0;
    double residual = 0.0;  // |collapsed - predicted|
};

CollapseReport collapse_report(const KQobddProgram& original, const KQobddProgram& collapsed,
                               const InputAssignment& a, double predicted);

}  // namespace qobdd
