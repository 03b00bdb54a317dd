#include "dinv/twisted.hpp"

#include <stdexcept>

namespace dinv {

ChainComplex twisted_complex(const CwModel& m, const Representation& rep)
{
    m.check_valid();
    rep.check_shapes(m);
    std::string why;
    if (!is_flat(m, rep, &why))
        throw std::invalid_argument("twisted_complex: representation not flat: " + why);

    int n = rep.fiber_dim;
    ChainComplex c;
    int topdeg = !m.cells3.empty() ? 3 : (!m.faces.empty() ? 2 : 1);
    c.dims.resize(topdeg + 1, 0);
    c.dims[0] = m.vertices * n;
    c.dims[1] = int(m.edges.size()) * n;
    if (topdeg >= 2)
        c.dims[2] = int(m.faces.size()) * n;
    if (topdeg >= 3)
        c.dims[3] = int(m.cells3.size()) * n;
    c.d.resize(topdeg + 1);
    c.d[0] = QMat::zero(0, c.dims[0]);

    QMat d1(c.dims[0], c.dims[1]);
    for (int e = 0; e < int(m.edges.size()); ++e) {
        d1.add_block(m.edge_term(e) * n, e * n, rep.holonomy[e]);
        d1.add_block(m.edge_init(e) * n, e * n, -QMat::identity(n));
    }
    c.d[1] = d1;

    if (topdeg >= 2) {
        QMat d2(c.dims[1], c.dims[2]);
        for (int f = 0; f < int(m.faces.size()); ++f) {
            // Columns of the pushed boundary word, one fiber basis vector at a time.
            QMat t = QMat::identity(n);
            for (const PathStep& s : m.faces[f].steps) {
                if (s.dir > 0) {
                    d2.add_block(s.edge * n, f * n, t);
                    t = rep.holonomy[s.edge] * t;
                } else {
                    t = *inverse(rep.holonomy[s.edge]) * t;
                    d2.add_block(s.edge * n, f * n, -t);
                }
            }
        }
        c.d[2] = d2;
    }
    if (topdeg >= 3) {
        QMat d3(c.dims[2], c.dims[3]);
        for (int cell = 0; cell < int(m.cells3.size()); ++cell)
            for (auto& [f, coeff] : m.cells3[cell])
                d3.add_block(f * n, cell * n, QMat::identity(n) * Rat(coeff));
        c.d[3] = d3;
    }

    c.check_valid();
    return c;
}

OneChain OneChain::zero(const CwModel& m, int fiber_dim)
{
    OneChain z;
    z.fiber_dim = fiber_dim;
    z.coeff.assign(m.edges.size(), QMat::zero(fiber_dim, 1));
    return z;
}

bool OneChain::is_zero() const
{
    for (const QMat& v : coeff)
        if (!v.is_zero())
            return false;
    return true;
}

OneChain OneChain::operator+(const OneChain& o) const
{
    if (fiber_dim != o.fiber_dim || coeff.size() != o.coeff.size())
        throw std::invalid_argument("one-chain shape mismatch");
    OneChain r = *this;
    for (size_t e = 0; e < coeff.size(); ++e)
        r.coeff[e] += o.coeff[e];
    return r;
}

OneChain OneChain::operator-(const OneChain& o) const
{
    if (fiber_dim != o.fiber_dim || coeff.size() != o.coeff.size())
        throw std::invalid_argument("one-chain shape mismatch");
    OneChain r = *this;
    for (size_t e = 0; e < coeff.size(); ++e)
        r.coeff[e] -= o.coeff[e];
    return r;
}

QMat OneChain::to_vector() const
{
    QMat v(int(coeff.size()) * fiber_dim, 1);
    for (size_t e = 0; e < coeff.size(); ++e)
        v.set_block(int(e) * fiber_dim, 0, coeff[e]);
    return v;
}

OneChain OneChain::from_vector(const CwModel& m, int fiber_dim, const QMat& v)
{
    if (v.cols() != 1 || v.rows() != int(m.edges.size()) * fiber_dim)
        throw std::invalid_argument("one-chain vector shape mismatch");
    OneChain z = zero(m, fiber_dim);
    for (size_t e = 0; e < z.coeff.size(); ++e)
        z.coeff[e] = v.block(int(e) * fiber_dim, 0, fiber_dim, 1);
    return z;
}

OneChain push_path(const CwModel& m, const Representation& rep, const PathWord& path,
                   const QMat& coeff)
{
    if (coeff.cols() != 1 || coeff.rows() != rep.fiber_dim)
        throw std::invalid_argument("push_path: coefficient shape mismatch");
    if (!m.path_composable(path))
        throw std::invalid_argument("push_path: path not composable");

    OneChain out = OneChain::zero(m, rep.fiber_dim);
    QMat t = QMat::identity(rep.fiber_dim);
    for (const PathStep& s : path.steps) {
        if (s.dir > 0) {
            out.coeff[s.edge] += t * coeff;
            t = rep.holonomy[s.edge] * t;
        } else {
            t = *inverse(rep.holonomy[s.edge]) * t;
            out.coeff[s.edge] -= t * coeff;
        }
    }
    return out;
}

QMat one_chain_boundary(const CwModel& m, const Representation& rep, const OneChain& z)
{
    int n = rep.fiber_dim;
    QMat b(m.vertices * n, 1);
    for (int e = 0; e < int(m.edges.size()); ++e) {
        if (z.coeff[e].is_zero())
            continue;
        b.add_block(m.edge_term(e) * n, 0, rep.holonomy[e] * z.coeff[e]);
        b.add_block(m.edge_init(e) * n, 0, -z.coeff[e]);
    }
    return b;
}

} // namespace dinv
