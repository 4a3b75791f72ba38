#pragma once

#include "qexch/state_vector.hpp"

#include <cstdint>
#include <random>

namespace qexch {

// splitmix64 step; used to derive independent streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(split_seed(seed, stream));
}

// Fisher-Yates shuffle of the identity, driven by `rng`.
inline Permutation random_permutation(int n, std::mt19937_64& rng) {
    Permutation perm(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) perm[q - 1] = q;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(perm[i], perm[pick(rng)]);
    }
    return perm;
}

}  // namespace qexch
