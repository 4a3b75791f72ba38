#pragma once

#include "qexch/exact_scalar.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qexch {

using ExactMatrix = std::vector<std::vector<ExactScalar>>;

// Rank over Q(i, sqrt(m)) by Gaussian elimination with first-nonzero pivoting.
int exact_rank(ExactMatrix rows);

// Rank of a set of sparse vectors (key -> amplitude) over the same field.
// Rows are reduced in the given order against the pivots found so far.
int sparse_row_rank(std::vector<std::map<std::uint32_t, ExactScalar>> rows);

}  // namespace qexch
