#include "dinv/chain_complex.hpp"

#include <stdexcept>

namespace dinv {

void ChainComplex::check_valid() const
{
    if (dims.size() != d.size())
        throw std::invalid_argument("complex: dims/boundaries length mismatch");
    for (int i = 0; i <= top(); ++i) {
        if (d[i].rows() != dim(i - 1) || d[i].cols() != dim(i))
            throw std::invalid_argument("complex: boundary shape mismatch in degree " +
                                        std::to_string(i));
    }
    for (int i = 1; i < top(); ++i) {
        if (!(d[i] * d[i + 1]).is_zero())
            throw std::invalid_argument("complex: dd != 0 between degrees " + std::to_string(i + 1) +
                                        " and " + std::to_string(i - 1));
    }
}

std::vector<int> ChainComplex::homology_dims() const
{
    std::vector<int> b(dims.size());
    for (int i = 0; i <= top(); ++i) {
        int ker = dim(i) - rank(boundary(i));
        int im = rank(boundary(i + 1));
        b[i] = ker - im;
    }
    return b;
}

bool ChainComplex::is_acyclic() const
{
    return first_nonacyclic_degree() < 0;
}

int ChainComplex::first_nonacyclic_degree() const
{
    auto b = homology_dims();
    for (int i = 0; i < int(b.size()); ++i)
        if (b[i] != 0)
            return i;
    return -1;
}

std::optional<QMat> boundary_membership(const ChainComplex& c, int degree, const QMat& z)
{
    if (z.cols() != 1 || z.rows() != c.dim(degree))
        throw std::invalid_argument("boundary_membership: chain shape mismatch");
    auto res = rank_and_solve(c.boundary(degree + 1), z);
    return res.solution;
}

PropagatorReport verify_propagator(const ChainComplex& c, const Propagator& g)
{
    PropagatorReport rep;
    for (int i = 0; i <= c.top(); ++i) {
        QMat lhs = c.boundary(i + 1) * g.map(i + 1, c) + g.map(i, c) * c.boundary(i);
        QMat res = lhs - QMat::identity(c.dim(i));
        rep.degrees.push_back({i, res.is_zero(), res});
    }
    return rep;
}

Propagator contraction(const ChainComplex& c)
{
    int bad = c.first_nonacyclic_degree();
    if (bad >= 0)
        throw NonAcyclicError(bad);

    std::vector<Rref> ech(c.top() + 2);
    for (int i = 1; i <= c.top(); ++i)
        ech[i] = rref(c.boundary(i));

    Propagator g;
    g.g.resize(c.top() + 1);
    g.g[0] = QMat::zero(c.dim(0), 0);

    for (int i = 1; i <= c.top(); ++i) {
        int nlow = c.dim(i - 1);
        g.g[i] = QMat::zero(c.dim(i), nlow);
        if (nlow == 0)
            continue;

        // Split C_{i-1} = ker d_{i-1} (+) span of d_{i-1}'s pivot columns, send
        // the kernel part to its unique preimage supported on d_i's pivot
        // columns, and kill the complement.
        const std::vector<int>& low_piv =
            (i - 1 >= 1) ? ech[i - 1].pivot_cols : std::vector<int>{};
        QMat basis(nlow, nlow);  // columns: kernel basis then pivot columns
        auto ker = rank_and_solve(c.boundary(i - 1)).kernel_basis;
        int kdim = int(ker.size());
        for (int kk = 0; kk < kdim; ++kk)
            basis.set_block(0, kk, ker[kk]);
        for (size_t p = 0; p < low_piv.size(); ++p) {
            QMat col(nlow, 1);
            col(low_piv[p], 0) = 1;
            basis.set_block(0, kdim + int(p), col);
        }
        QMat basis_inv = *inverse(basis);

        for (int e = 0; e < nlow; ++e) {
            // Kernel component of the basis vector e.
            QMat coords = basis_inv.column(e);
            QMat zk(nlow, 1);
            for (int kk = 0; kk < kdim; ++kk)
                if (coords(kk, 0) != 0)
                    zk += ker[kk] * coords(kk, 0);
            if (zk.is_zero())
                continue;
            // Unique preimage of zk under d_i supported on d_i's pivot columns.
            QMat tz = ech[i].trans * zk;
            for (int r = ech[i].rank; r < tz.rows(); ++r)
                if (tz(r, 0) != 0)
                    throw std::logic_error("contraction: kernel vector not a boundary");
            for (int r = 0; r < ech[i].rank; ++r)
                g.g[i](ech[i].pivot_cols[r], e) = tz(r, 0);
        }
    }
    return g;
}

} // namespace dinv
