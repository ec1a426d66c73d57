#include "gkm/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gkm {

std::vector<std::size_t> rref(QMatrix& m, std::size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("rref: ragged matrix");

    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        if (sel != pivot_row) std::swap(m[sel], m[pivot_row]);

        QVector& prow = m[pivot_row];
        if (prow[col] != 1) {
            const Rational inv = Rational(1) / prow[col];
            for (std::size_t j = col; j < cols; ++j)
                if (prow[j] != 0) prow[j] *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == pivot_row) continue;
            const Rational factor = m[r][col];
            if (factor == 0) continue;
            QVector& row = m[r];
            for (std::size_t j = col; j < cols; ++j)
                if (prow[j] != 0) row[j] -= factor * prow[j];
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

std::size_t matrix_rank(QMatrix m, std::size_t cols) {
    return rref(m, cols).size();
}

RankNullspace rank_and_nullspace(const QMatrix& m, std::size_t cols) {
    QMatrix work = m;
    const std::vector<std::size_t> pivots = rref(work, cols);

    RankNullspace out;
    out.rank = pivots.size();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVector v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -work[i][free_col];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

std::size_t span_rank(const std::vector<QVector>& vectors, std::size_t cols) {
    QMatrix m = vectors;
    return matrix_rank(std::move(m), cols);
}

}  // namespace gkm
