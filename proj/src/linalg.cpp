#include "dinv/linalg.hpp"

#include <stdexcept>

namespace dinv {

Rref rref(const QMat& a)
{
    Rref out;
    out.r = a;
    out.trans = QMat::identity(a.rows());
    QMat& r = out.r;
    QMat& t = out.trans;

    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (r(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row) {
            r.swap_rows(piv, row);
            t.swap_rows(piv, row);
        }
        Rat inv = 1 / r(row, col);
        for (int j = 0; j < a.cols(); ++j)
            r(row, j) *= inv;
        for (int j = 0; j < t.cols(); ++j)
            t(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || r(i, col) == 0)
                continue;
            Rat f = r(i, col);
            for (int j = 0; j < a.cols(); ++j)
                r(i, j) -= f * r(row, j);
            for (int j = 0; j < t.cols(); ++j)
                t(i, j) -= f * t(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

int rank(const QMat& a)
{
    return rref(a).rank;
}

SolveResult rank_and_solve(const QMat& a, const std::optional<QMat>& b)
{
    if (b && (b->cols() != 1 || b->rows() != a.rows()))
        throw std::invalid_argument("rank_and_solve: rhs shape mismatch");

    Rref e = rref(a);
    SolveResult out;
    out.rank = e.rank;

    // Kernel: one basis vector per free column.
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : e.pivot_cols)
        is_pivot[c] = true;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c])
            continue;
        QMat v(a.cols(), 1);
        v(c, 0) = 1;
        for (int i = 0; i < e.rank; ++i)
            v(e.pivot_cols[i], 0) = -e.r(i, c);
        out.kernel_basis.push_back(v);
    }

    if (b) {
        QMat tb = e.trans * *b;
        bool consistent = true;
        for (int i = e.rank; i < a.rows(); ++i)
            if (tb(i, 0) != 0) {
                consistent = false;
                break;
            }
        if (consistent) {
            QMat x(a.cols(), 1);
            for (int i = 0; i < e.rank; ++i)
                x(e.pivot_cols[i], 0) = tb(i, 0);
            out.solution = x;
        }
    }
    return out;
}

std::optional<QMat> inverse(const QMat& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse: matrix not square");
    Rref e = rref(a);
    if (e.rank != a.rows())
        return std::nullopt;
    return e.trans;
}

Rat determinant(const QMat& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix not square");
    QMat m = a;
    Rat det = 1;
    int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return Rat(0);
        if (piv != col) {
            m.swap_rows(piv, col);
            det = -det;
        }
        det *= m(col, col);
        Rat inv = 1 / m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            Rat f = m(i, col) * inv;
            for (int j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

QMat left_kernel(const QMat& a)
{
    // trans * a = r; the trans rows past the rank annihilate a.
    Rref e = rref(a);
    int n = a.rows();
    int k = n - e.rank;
    QMat out(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = e.trans(e.rank + i, j);
    return out;
}

} // namespace dinv
