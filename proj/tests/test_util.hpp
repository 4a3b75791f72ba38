#pragma once

#include "qexch/exact_scalar.hpp"
#include "qexch/rng.hpp"
#include "qexch/state_vector.hpp"

#include <random>
#include <vector>

namespace qexch::testing {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    return Rational(num(rng), den(rng));
}

inline ExactScalar random_scalar(std::mt19937_64& rng, int radicand) {
    return ExactScalar(random_rational(rng), random_rational(rng), random_rational(rng),
                       random_rational(rng), radicand);
}

inline ExactScalar random_nonzero_scalar(std::mt19937_64& rng, int radicand) {
    for (;;) {
        ExactScalar s = random_scalar(rng, radicand);
        if (!s.is_zero()) return s;
    }
}

// Sparse state with 1..max_terms random basis terms and random amplitudes.
inline StateVector random_state(std::mt19937_64& rng, int n, int radicand, int max_terms = 6) {
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> key(0, (1u << n) - 1u);
    for (;;) {
        StateVector state(n, radicand);
        int terms = term_count(rng);
        for (int t = 0; t < terms; ++t) {
            StateVector one = StateVector::basis(format_bits(key(rng), n), radicand)
                                  .scaled(random_scalar(rng, radicand));
            state = state + one;
        }
        if (!state.is_zero()) return state;
    }
}

}  // namespace qexch::testing
