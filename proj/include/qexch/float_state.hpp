#pragma once

#include "qexch/state_vector.hpp"

#include <complex>
#include <cstdint>
#include <map>

namespace qexch {

// Floating-point companion of StateVector for the recovery and search layers.
class FloatState {
    int n_;
    std::map<std::uint32_t, std::complex<double>> amps_;

public:
    explicit FloatState(int n);

    static FloatState from_exact(const StateVector& s);

    int n() const { return n_; }
    std::size_t term_count() const { return amps_.size(); }
    const std::map<std::uint32_t, std::complex<double>>& amplitudes() const { return amps_; }
    std::complex<double> amplitude(std::uint32_t key) const;

    void add_term(std::uint32_t key, std::complex<double> amp);
    void add_scaled(const FloatState& o, std::complex<double> factor);

    FloatState scaled(std::complex<double> factor) const;
    FloatState operator+(const FloatState& o) const;

    double norm_squared() const;
    double norm() const;
    FloatState normalized() const;

    FloatState apply_pauli(PauliAxis axis, int qubit) const;
    FloatState apply_permutation(const Permutation& perm) const;
};

std::complex<double> inner_product(const FloatState& lhs, const FloatState& rhs);

}  // namespace qexch
