#include "dinv/lattice.hpp"

#include <stdexcept>

namespace dinv {

namespace {

void add_row_multiple(ZMat& m, int dst, int src, const Int& f)
{
    if (f == 0)
        return;
    for (int j = 0; j < m.cols(); ++j)
        m(dst, j) += f * m(src, j);
}

void negate_row(ZMat& m, int i)
{
    for (int j = 0; j < m.cols(); ++j)
        m(i, j) = -m(i, j);
}

} // namespace

Hnf hermite_normal_form(const ZMat& m)
{
    Hnf out;
    out.h = m;
    out.u = ZMat::identity(m.rows());
    ZMat& h = out.h;
    ZMat& u = out.u;

    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        // Euclid on the rows below `row` until one nonzero entry remains in col.
        while (true) {
            int nonzero = -1, count = 0;
            for (int i = row; i < m.rows(); ++i)
                if (h(i, col) != 0) {
                    ++count;
                    if (nonzero < 0 || abs(h(i, col)) < abs(h(nonzero, col)))
                        nonzero = i;
                }
            if (count == 0) {
                nonzero = -1;
                break;
            }
            if (nonzero != row) {
                h.swap_rows(nonzero, row);
                u.swap_rows(nonzero, row);
            }
            if (count == 1)
                break;
            for (int i = row + 1; i < m.rows(); ++i) {
                if (h(i, col) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
                add_row_multiple(h, i, row, -q);
                add_row_multiple(u, i, row, -q);
            }
        }
        if (h(row, col) == 0)
            continue;
        if (h(row, col) < 0) {
            negate_row(h, row);
            negate_row(u, row);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (int i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
            add_row_multiple(h, i, row, -q);
            add_row_multiple(u, i, row, -q);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

std::optional<ZMat> solve_integer(const ZMat& a, const ZMat& b)
{
    if (b.cols() != 1 || b.rows() != a.rows())
        throw std::invalid_argument("solve_integer: rhs shape mismatch");

    // x^T a^T = b^T with x^T = c u for integer c: solve c h = b^T by forward
    // substitution over the pivot columns, with exact divisibility required.
    Hnf e = hermite_normal_form(a.transpose());
    int k = a.cols();
    std::vector<Int> c(k, Int(0));
    std::vector<Int> v(a.rows());
    for (int j = 0; j < a.rows(); ++j)
        v[j] = b(j, 0);

    for (int i = 0; i < e.rank; ++i) {
        int p = e.pivot_cols[i];
        if (v[p] % e.h(i, p) != 0)
            return std::nullopt;
        c[i] = v[p] / e.h(i, p);
        if (c[i] != 0)
            for (int j = 0; j < a.rows(); ++j)
                v[j] -= c[i] * e.h(i, j);
    }
    for (int j = 0; j < a.rows(); ++j)
        if (v[j] != 0)
            return std::nullopt;

    ZMat x(k, 1);
    for (int j = 0; j < k; ++j) {
        Int s = 0;
        for (int i = 0; i < e.rank; ++i)
            s += c[i] * e.u(i, j);
        x(j, 0) = s;
    }
    return x;
}

ZMat integer_kernel(const ZMat& a)
{
    Hnf e = hermite_normal_form(a.transpose());
    int k = a.cols() - e.rank;
    ZMat out(a.cols(), k);
    for (int c = 0; c < k; ++c)
        for (int j = 0; j < a.cols(); ++j)
            out(j, c) = e.u(e.rank + c, j);
    return out;
}

std::optional<std::vector<Int>> lattice_membership(const std::vector<std::vector<Rat>>& generators,
                                                   const std::vector<Rat>& target)
{
    size_t m = target.size();
    for (const auto& g : generators)
        if (g.size() != m)
            throw std::invalid_argument("lattice_membership: vector length mismatch");

    // Common denominator of everything; membership is invariant under scaling.
    Int den = 1;
    for (const auto& g : generators)
        for (const Rat& x : g)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    for (const Rat& x : target)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());

    ZMat a(int(m), int(generators.size()));
    for (size_t j = 0; j < generators.size(); ++j)
        for (size_t i = 0; i < m; ++i) {
            Rat v = generators[j][i] * den;
            a(int(i), int(j)) = v.get_num();
        }
    ZMat b(int(m), 1);
    for (size_t i = 0; i < m; ++i) {
        Rat v = target[i] * den;
        b(int(i), 0) = v.get_num();
    }

    auto x = solve_integer(a, b);
    if (!x)
        return std::nullopt;
    std::vector<Int> coeffs(generators.size());
    for (size_t j = 0; j < generators.size(); ++j)
        coeffs[j] = (*x)(int(j), 0);
    return coeffs;
}

} // namespace dinv
