#pragma once

#include <cstddef>
#include <vector>

#include "conic/rational.hpp"

namespace conic {

/// Rank of the matrix whose rows are given, by exact Gaussian elimination.
inline std::size_t rank_of(std::vector<RVector> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    Rational f, t;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && sgn(rows[p][c]) == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0)
                continue;
            f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(rows[rank][j]) == 0)
                    continue;
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), rows[rank][j].get_mpq_t());
                rows[i][j] -= t;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace conic
