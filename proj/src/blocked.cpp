#include "dinv/blocked.hpp"

#include <stdexcept>

namespace dinv {

void BlockedComplex::check_valid() const
{
    a.check_valid();
    b.check_valid();
    if (a.dims.size() != b.dims.size())
        throw std::invalid_argument("blocked complex: part lengths differ");
    for (int k = 0; k <= top(); ++k) {
        QMat w = cross_map(k);
        if (w.rows() != b.dim(k - 1) || w.cols() != a.dim(k))
            throw std::invalid_argument("blocked complex: cross map shape in degree " +
                                        std::to_string(k));
    }
    for (int k = 1; k <= top(); ++k) {
        QMat anti = b.boundary(k - 1) * cross_map(k) + cross_map(k - 1) * a.boundary(k);
        if (!anti.is_zero())
            throw std::invalid_argument("blocked complex: anticommutation fails in degree " +
                                        std::to_string(k));
    }
}

ChainComplex BlockedComplex::total() const
{
    ChainComplex t;
    int n = int(a.dims.size());
    t.dims.resize(n);
    t.d.resize(n);
    for (int k = 0; k < n; ++k)
        t.dims[k] = a.dim(k) + b.dim(k);
    for (int k = 0; k < n; ++k) {
        QMat m(t.dim(k - 1), t.dims[k]);
        m.set_block(0, 0, a.boundary(k));
        m.set_block(a.dim(k - 1), 0, cross_map(k));
        m.set_block(a.dim(k - 1), a.dim(k), b.boundary(k));
        t.d[k] = m;
    }
    return t;
}

QMat BlockedComplex::embed_a(int degree, const QMat& v) const
{
    QMat out(a.dim(degree) + b.dim(degree), 1);
    out.set_block(0, 0, v);
    return out;
}

QMat BlockedComplex::embed_b(int degree, const QMat& v) const
{
    QMat out(a.dim(degree) + b.dim(degree), 1);
    out.set_block(a.dim(degree), 0, v);
    return out;
}

Propagator glue_propagator(const BlockedComplex& bc, const Propagator& ga, const Propagator& gb)
{
    bc.check_valid();
    if (!verify_propagator(bc.a, ga).ok())
        throw std::invalid_argument("glue_propagator: ga is not a propagator");
    if (!verify_propagator(bc.b, gb).ok())
        throw std::invalid_argument("glue_propagator: gb is not a propagator");

    int t = bc.top();
    std::vector<QMat> gab(t + 1);  // gab[k] : C^a_{k-1} -> C^b_k
    for (int k = 0; k <= t; ++k)
        gab[k] = QMat::zero(bc.b.dim(k), bc.a.dim(k - 1));

    if (t >= 1)
        gab[1] = -(gb.map(1, bc.b) * bc.cross_map(1) * ga.map(1, bc.a));
    for (int k = 1; k < t; ++k) {
        gab[k + 1] = -(gb.map(k + 1, bc.b) * bc.cross_map(k + 1) * ga.map(k + 1, bc.a) +
                       gb.map(k + 1, bc.b) * gab[k] * bc.a.boundary(k) +
                       gb.map(k + 1, bc.b) * gb.map(k, bc.b) * bc.cross_map(k));
    }

    Propagator g;
    g.g.resize(t + 1);
    for (int k = 0; k <= t; ++k) {
        QMat m(bc.a.dim(k) + bc.b.dim(k), bc.a.dim(k - 1) + bc.b.dim(k - 1));
        m.set_block(0, 0, ga.map(k, bc.a));
        m.set_block(bc.a.dim(k), 0, gab[k]);
        m.set_block(bc.a.dim(k), bc.a.dim(k - 1), gb.map(k, bc.b));
        g.g[k] = m;
    }
    return g;
}

QMat off_diagonal_residual(const BlockedComplex& bc, const Propagator& ga, const Propagator& gb,
                           const std::vector<QMat>& gab, int k)
{
    auto at = [&](int i) {
        if (i >= 0 && i < int(gab.size()))
            return gab[i];
        return QMat::zero(bc.b.dim(i), bc.a.dim(i - 1));
    };
    return bc.cross_map(k + 1) * ga.map(k + 1, bc.a) + bc.b.boundary(k + 1) * at(k + 1) +
           at(k) * bc.a.boundary(k) + gb.map(k, bc.b) * bc.cross_map(k);
}

} // namespace dinv
