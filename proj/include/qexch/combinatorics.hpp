#pragma once

#include "qexch/rational.hpp"

namespace qexch {

// Exact binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (int j = 1; j <= k; ++j) {
        result *= (n - k + j);
        result /= j;
    }
    return result;
}

}  // namespace qexch
