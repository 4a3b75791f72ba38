#pragma once

#include "qexch/float_state.hpp"
#include "qexch/state_vector.hpp"

#include <set>
#include <string>
#include <vector>

namespace qexch {

enum class ErrorKind { Identity, Pauli, Exchange, PermutationOp, Product };

// Symbolic error operator: identity, single-qubit Pauli, pairwise exchange,
// qubit permutation, or a flattened product of those.
class ErrorOp {
    ErrorKind kind_ = ErrorKind::Identity;
    PauliAxis axis_ = PauliAxis::X;
    int qubit_ = 0;
    int j_ = 0, k_ = 0;
    Permutation perm_;
    std::vector<ErrorOp> factors_;
    std::string label_ = "I";

    ErrorOp() = default;

public:
    static ErrorOp identity();
    static ErrorOp pauli(PauliAxis axis, int qubit);
    static ErrorOp exchange(int j, int k);
    static ErrorOp permutation(Permutation perm);
    // Operator-ordered factors: the last factor acts first.
    static ErrorOp product(std::vector<ErrorOp> factors);

    ErrorKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    PauliAxis axis() const { return axis_; }
    int qubit() const { return qubit_; }
    int exchange_j() const { return j_; }
    int exchange_k() const { return k_; }
    const Permutation& perm() const { return perm_; }
    const std::vector<ErrorOp>& factors() const { return factors_; }

    StateVector apply(const StateVector& state) const;
    FloatState apply(const FloatState& state) const;
};

// Apply e2 first, then e1; the result is flattened.
ErrorOp compose_errors(const ErrorOp& e1, const ErrorOp& e2);

// The four-Pauli form (I.I + Z.Z + X.X + Y.Y)/2 on qubits j,k, evaluated
// literally. Kept as an independent route beside the transposition fast path.
StateVector exchange_as_pauli_sum(int j, int k, const StateVector& state);

enum class ErrorClass { Identity, X, Y, Z, Exchange };

// Ordered basic-error set; the identity always sits at index 0.
struct ErrorSet {
    int n = 0;
    std::vector<ErrorOp> ops;

    static ErrorSet from_ops(int n, std::vector<ErrorOp> ops);
    std::size_t size() const { return ops.size(); }
    // e.g. "1 identity + 9 X + 9 Y + 9 Z + 36 exchange (unordered pairs j<k)"
    std::string composition() const;
};

// Deterministic ordering: identity, X_1..X_n, Y_1..Y_n, Z_1..Z_n, then E_jk
// in lexicographic (j, k) order, restricted to the requested classes.
ErrorSet make_error_set(int n, const std::set<ErrorClass>& classes);

// Comma-separated tokens from {identity, x, y, z, pauli, exchange};
// "pauli" expands to x,y,z.
std::set<ErrorClass> parse_error_classes(const std::string& text);

}  // namespace qexch
