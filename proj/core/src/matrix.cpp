#include "slicekit/matrix.hpp"

#include <algorithm>

namespace slicekit {

std::vector<std::size_t> RationalMatrix::reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < rows_ && at(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == rows_) continue;
        if (pivot_row != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(pivot_row, c));
        const Rational inv = 1 / at(row, col);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            const Rational factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace_basis(RationalMatrix m) {
    const auto pivots = m.reduce();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(RationalMatrix m) { return m.reduce().size(); }

}  // namespace slicekit
