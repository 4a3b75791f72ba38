#include "qexch/exact_linalg.hpp"

namespace qexch {

int exact_rank(ExactMatrix rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t found = pivot_row;
        while (found < rows.size() && rows[found][col].is_zero()) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        ExactScalar inv = rows[pivot_row][col].inv();
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            ExactScalar factor = rows[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] -= factor * rows[pivot_row][c];
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

int sparse_row_rank(std::vector<std::map<std::uint32_t, ExactScalar>> rows) {
    // pivot key -> index of the row owning that pivot
    std::map<std::uint32_t, std::size_t> pivots;
    std::vector<std::map<std::uint32_t, ExactScalar>> basis;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto hit = pivots.find(lead->first);
            if (hit == pivots.end()) break;
            const auto& pivot_row = basis[hit->second];
            ExactScalar factor = lead->second * pivot_row.begin()->second.inv();
            for (const auto& [key, value] : pivot_row) {
                auto [it, fresh] = row.emplace(key, ExactScalar::zero(value.radicand()));
                it->second -= factor * value;
                if (it->second.is_zero()) row.erase(it);
            }
        }
        if (!row.empty()) {
            pivots.emplace(row.begin()->first, basis.size());
            basis.push_back(std::move(row));
        }
    }
    return static_cast<int>(basis.size());
}

}  // namespace qexch
