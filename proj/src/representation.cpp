#include "dinv/representation.hpp"

#include "dinv/linalg.hpp"

#include <stdexcept>

namespace dinv {

void Representation::check_shapes(const CwModel& m) const
{
    if (int(holonomy.size()) != int(m.edges.size()))
        throw std::invalid_argument("representation: one holonomy per edge required");
    for (size_t e = 0; e < holonomy.size(); ++e) {
        if (holonomy[e].rows() != fiber_dim || holonomy[e].cols() != fiber_dim)
            throw std::invalid_argument("representation: holonomy shape mismatch at edge " +
                                        std::to_string(e));
        if (!inverse(holonomy[e]))
            throw std::invalid_argument("holonomy not invertible: edge " + std::to_string(e));
    }
}

QMat path_holonomy(const CwModel& m, const Representation& rep, const PathWord& path)
{
    if (!m.path_composable(path))
        throw std::invalid_argument("path_holonomy: path not composable");
    QMat h = QMat::identity(rep.fiber_dim);
    for (const PathStep& s : path.steps) {
        if (s.dir > 0)
            h = rep.holonomy[s.edge] * h;
        else
            h = *inverse(rep.holonomy[s.edge]) * h;
    }
    return h;
}

bool is_flat(const CwModel& m, const Representation& rep, std::string* why)
{
    for (size_t f = 0; f < m.faces.size(); ++f) {
        if (!path_holonomy(m, rep, m.faces[f]).is_identity()) {
            if (why)
                *why = "face " + std::to_string(f) + " has nontrivial boundary holonomy";
            return false;
        }
    }
    return true;
}

Representation adjoint_system(const Representation& rep)
{
    Representation adj;
    adj.fiber_dim = rep.fiber_dim * rep.fiber_dim;
    adj.holonomy.reserve(rep.holonomy.size());
    for (const QMat& g : rep.holonomy) {
        auto gi = inverse(g);
        if (!gi)
            throw std::invalid_argument("adjoint_system: non-invertible holonomy");
        adj.holonomy.push_back(kron(g, gi->transpose()));
    }
    return adj;
}

QMat vec_matrix(const QMat& x)
{
    QMat v(x.rows() * x.cols(), 1);
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            v(i * x.cols() + j, 0) = x(i, j);
    return v;
}

QMat unvec_matrix(const QMat& v, int n)
{
    if (v.cols() != 1 || v.rows() != n * n)
        throw std::invalid_argument("unvec_matrix: shape mismatch");
    QMat x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            x(i, j) = v(i * n + j, 0);
    return x;
}

} // namespace dinv
