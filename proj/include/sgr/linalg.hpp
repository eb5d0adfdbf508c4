#pragma once

#include <cstdlib>
#include <vector>

namespace sgr {

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Intermediate entries are minors of the input, held in 128-bit integers;
/// boundary matrices here have entries in {-1,0,1} and small dimensions, so
/// the Hadamard bound keeps everything far below overflow.
inline int exact_rank(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    __int128 prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace sgr
