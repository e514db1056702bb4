#include "mirrorgw/linalg.hpp"

#include <stdexcept>

namespace mgw {

LinearSolution solve_linear(QMatrix a, std::vector<Rational> b) {
    const size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("right-hand side length mismatch");
    const size_t cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");

    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        Rational inv = a[row][col].inverse();
        for (size_t c = col; c < cols; ++c) a[row][c] *= inv;
        b[row] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (size_t c = col; c < cols; ++c)
                if (!a[row][c].is_zero()) a[r][c] -= f * a[row][c];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolution s;
    s.rank = static_cast<int>(row);
    s.consistent = true;
    for (size_t r = row; r < rows; ++r)
        if (!b[r].is_zero()) s.consistent = false;
    s.unique = s.consistent && row == cols;
    s.x.assign(cols, Rational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) s.x[pivot_col[r]] = b[r];
    return s;
}

}  // namespace mgw
