#pragma once

#include "qexch/exact_scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qexch {

inline constexpr int kMaxQubits = 24;

// One-line image of a permutation of {1..n}: perm[j-1] is where position j goes.
using Permutation = std::vector<int>;

enum class PauliAxis { X, Y, Z };

char pauli_axis_char(PauliAxis axis);

// Computational basis ket on n qubits. Qubit 1 is the leftmost symbol of the
// bit string; packed so that ascending integer order equals string order.
struct BasisState {
    std::uint32_t bits = 0;
    int n = 0;

    static BasisState parse(std::string_view text);
    std::string to_string() const;
    int bit(int qubit) const { return static_cast<int>((bits >> (n - qubit)) & 1u); }
    int weight() const;
};

// Sparse exact state over n qubits. Immutable after construction: every
// operation returns a new value. Zero amplitudes are never stored.
class StateVector {
    int n_;
    int radicand_;
    std::map<std::uint32_t, ExactScalar> amps_;

    void insert_term(std::uint32_t key, const ExactScalar& amp);

public:
    StateVector(int n, int radicand);

    // |bits>, amplitude one.
    static StateVector basis(std::string_view bits, int radicand = 1);
    // coeff * sum over all C(n, weight) distinct strings with the given weight.
    static StateVector perm_sum(int n, int weight, const ExactScalar& coeff);

    int n() const { return n_; }
    int radicand() const { return radicand_; }
    std::size_t term_count() const { return amps_.size(); }
    bool is_zero() const { return amps_.empty(); }
    const std::map<std::uint32_t, ExactScalar>& amplitudes() const { return amps_; }
    ExactScalar amplitude(std::uint32_t key) const;

    StateVector operator+(const StateVector& o) const;
    StateVector operator-(const StateVector& o) const;
    StateVector scaled(const ExactScalar& factor) const;

    StateVector apply_pauli(PauliAxis axis, int qubit) const;
    StateVector apply_permutation(const Permutation& perm) const;

    // Hamming weight -> number of stored terms with that weight.
    std::map<int, std::size_t> weight_histogram() const;

    ExactScalar norm_squared() const;

    bool operator==(const StateVector& o) const;
    bool operator!=(const StateVector& o) const { return !(*this == o); }
};

// Conjugate-linear in the left argument.
ExactScalar inner_product(const StateVector& lhs, const StateVector& rhs);

void validate_permutation(const Permutation& perm, int n);
Permutation compose_permutations(const Permutation& second, const Permutation& first);
Permutation transposition(int n, int j, int k);

std::string format_bits(std::uint32_t key, int n);

}  // namespace qexch
