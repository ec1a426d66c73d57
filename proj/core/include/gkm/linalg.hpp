#pragma once

#include "gkm/rational.hpp"

#include <cstddef>
#include <vector>

namespace gkm {

/// Row-major rational matrix. Rows may be empty; the column count is carried
/// separately where it matters so that empty systems keep their width.
using QMatrix = std::vector<QVector>;

struct RankNullspace {
    std::size_t rank = 0;
    std::vector<QVector> nullspace;  // exact basis of the kernel
};

/// Reduces `m` to reduced row echelon form in place and returns the pivot
/// column indices. Zero rows sink to the bottom.
std::vector<std::size_t> rref(QMatrix& m, std::size_t cols);

/// Rank via Gaussian elimination over Q (destructive copy).
std::size_t matrix_rank(QMatrix m, std::size_t cols);

/// Exact rank and kernel basis. rank + nullspace.size() == cols.
RankNullspace rank_and_nullspace(const QMatrix& m, std::size_t cols);

/// Rank of the span of a set of vectors, all of length `cols`.
std::size_t span_rank(const std::vector<QVector>& vectors, std::size_t cols);

}  // namespace gkm
