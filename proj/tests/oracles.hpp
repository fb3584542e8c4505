#pragma once

// Reference implementations used only by the tests. These deliberately
// take the dumbest correct route (plain recursion, cofactor expansion,
// additive Pascal triangle) so they share no code path with the library
// algorithms they cross-check.

#include <vector>

#include "young/bigint.hpp"
#include "young/exact_matrix.hpp"
#include "young/partition.hpp"

namespace oracle {

inline young::Partition conjugate_by_counting(const young::Partition& p) {
    std::vector<int> heights;
    for (int j = 1; p.col_height(j) > 0; ++j) heights.push_back(0);
    for (int part : p.parts()) {
        for (int j = 1; j <= part; ++j) heights[static_cast<std::size_t>(j) - 1] += 1;
    }
    return young::Partition(heights);
}

inline young::Int recursive_path_count(const young::Partition& p, young::BoxCoord at,
                                       young::BoxCoord to) {
    if (at.row < to.row || at.col > to.col) return 0;
    if (at == to) return 1;
    young::Int total = 0;
    young::BoxCoord north{at.row - 1, at.col};
    if (p.contains(north)) total += recursive_path_count(p, north, to);
    young::BoxCoord east{at.row, at.col + 1};
    if (p.contains(east)) total += recursive_path_count(p, east, to);
    return total;
}

inline young::Int cofactor_determinant(const young::ExactMatrix& m) {
    const int n = m.order();
    if (n == 0) return 1;
    if (n == 1) return m.at(1, 1);
    young::Int total = 0;
    for (int c = 1; c <= n; ++c) {
        young::ExactMatrix sub(n - 1);
        for (int r = 2; r <= n; ++r) {
            int sub_c = 1;
            for (int cc = 1; cc <= n; ++cc) {
                if (cc == c) continue;
                sub.at(r - 1, sub_c) = m.at(r, cc);
                ++sub_c;
            }
        }
        young::Int term = m.at(1, c) * cofactor_determinant(sub);
        if (c % 2 == 1) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

inline young::Int pascal_binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::vector<young::Int> row{1};
    for (int level = 1; level <= a; ++level) {
        std::vector<young::Int> next(static_cast<std::size_t>(level) + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k] += row[k];
            next[k + 1] += row[k];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(b)];
}

}  // namespace oracle
