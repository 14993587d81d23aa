#include "conwaylink/linalg.hpp"

namespace cwl {

LinearSolve solve_linear(RatMat A, RatVec b) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    if (static_cast<int>(b.size()) != rows) throw usage_error("solve_linear: size mismatch");

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int r = row; r < rows; ++r)
            if (A[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(A[row], A[sel]);
        std::swap(b[row], b[sel]);
        Rat inv = 1 / A[row][col];
        for (int c = col; c < cols; ++c) A[row][c] *= inv;
        b[row] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (int c = col; c < cols; ++c) A[r][c] -= f * A[row][c];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolve out;
    out.rank = row;
    out.rank_augmented = row;
    for (int r = row; r < rows; ++r)
        if (b[r] != 0) { out.rank_augmented = row + 1; break; }
    out.consistent = out.rank == out.rank_augmented;
    if (out.consistent) {
        out.solution.assign(cols, Rat(0));
        for (int k = 0; k < row; ++k) out.solution[pivot_col[k]] = b[k];
        std::vector<bool> is_pivot(cols, false);
        for (int c : pivot_col) is_pivot[c] = true;
        for (int c = 0; c < cols; ++c)
            if (!is_pivot[c]) out.free_columns.push_back(c);
    }
    return out;
}

int rank_rational(RatMat A) {
    RatVec b(A.size(), Rat(0));
    return solve_linear(std::move(A), std::move(b)).rank;
}

LaurentPoly bareiss_determinant(std::vector<std::vector<LaurentPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw usage_error("bareiss_determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw usage_error("bareiss_determinant: not square");
    const auto vars = m[0][0].vars();
    LaurentPoly prev = LaurentPoly::constant(vars, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t sel = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { sel = i; break; }
            if (sel == k) return LaurentPoly::zero(vars);
            std::swap(m[k], m[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly::zero(vars);
        }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

int rank_poly_matrix(std::vector<std::vector<LaurentPoly>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    const auto vars = m[0][0].vars();
    LaurentPoly prev = LaurentPoly::constant(vars, 1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = row; r < rows; ++r)
            if (!m[r][col].is_zero()) { sel = r; break; }
        if (sel == rows) continue;
        std::swap(m[row], m[sel]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = divide_exact(m[i][j] * m[row][col] - m[i][col] * m[row][j], prev);
            m[i][col] = LaurentPoly::zero(vars);
        }
        prev = m[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

}  // namespace cwl
