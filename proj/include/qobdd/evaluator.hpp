#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qobdd/program.hpp"

namespace qobdd {

// Bit vector of length n; bits[i] is the value of variable i (0-based).
// Lexicographic input order treats bits[0] as the most significant digit.
struct InputAssignment {
    std::vector<std::uint8_t> bits;

    static InputAssignment from_string(std::string_view s);
    static InputAssignment from_index(std::size_t n, std::uint64_t lex_index);
    std::string to_string() const;
    std::size_t size() const { return bits.size(); }
};

// Per-layer transfer data for one input: mu1[j] is the amplitude to reach
// state j after layer 1 from the start; mu[l] is the layer-(l+2) matrix with
// entry (i, j) the amplitude to go from entry state i to exit state j. The
// layer matrices are transposes of the unitaries, not adjoints.
struct LayerMatrices {
    StateVector mu1;
    std::vector<ComplexMatrix> mu;
};

struct EvalReport {
    StateVector beta;                         // final amplitudes, sequential semantics
    double acceptance = 0.0;                  // sum of |beta_j|^2 over accepting j
    double residual_matrix_product = 0.0;     // max |sequential - layer product|
    std::optional<double> residual_path_sum;  // absent when enumeration is guarded off
};

// exhaustive path enumeration refuses above this many guess tuples (w^(k-1))
inline constexpr std::uint64_t kPathSumGuard = 1'000'000;
// truth tables refuse above this many variables
inline constexpr std::size_t kTruthMapMaxN = 20;

// Sequential semantics: apply the selected transformation of every position of
// every layer, in order, to the start state e0.
StateVector run(const KQobddProgram& p, const InputAssignment& a);

ComplexScalar final_amplitude(const KQobddProgram& p, const InputAssignment& a, std::size_t state);
double acceptance(const KQobddProgram& p, const InputAssignment& a);

// Product of layer lambda's selected matrices, position 1 rightmost; lambda is
// 1-based (1..k).
ComplexMatrix layer_unitary(const KQobddProgram& p, std::size_t lambda, const InputAssignment& a);

LayerMatrices layer_matrices(const KQobddProgram& p, const InputAssignment& a);

// Layer-product semantics: the row vector mu1^T * mu(2) * ... * mu(k).
StateVector beta_by_matrix_product(const KQobddProgram& p, const InputAssignment& a);

// Amplitude of one computation path. The path lists k state indices: the exit
// states guessed after layers 1..k-1 followed by the final exit state.
ComplexScalar path_amplitude(const LayerMatrices& lm, const std::vector<std::size_t>& path);
ComplexScalar path_amplitude(const KQobddProgram& p, const InputAssignment& a,
                             const std::vector<std::size_t>& path);

// Path-sum semantics for one exit state: sum of path_amplitude over all guess
// tuples in lexicographic order. Throws GuardError above kPathSumGuard tuples.
ComplexScalar beta_by_path_sum(const KQobddProgram& p, const InputAssignment& a,
                               std::size_t exit_state);

// All three semantics plus their cross-check residuals.
EvalReport evaluate(const KQobddProgram& p, const InputAssignment& a);

struct TruthRow {
    InputAssignment input;
    double acceptance = 0.0;
    bool accept = false;
};

// Acceptance for every input, rows in lexicographic input order. Inputs are
// evaluated concurrently but the result is bit-identical to sequential
// evaluation. `strict` selects > threshold; otherwise >= threshold.
std::vector<TruthRow> truth_map(const KQobddProgram& p, double threshold = 0.5,
                                bool strict = true);

}  // namespace qobdd
