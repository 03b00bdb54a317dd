#pragma once

#include "dinv/cw_model.hpp"
#include "dinv/matrix.hpp"

#include <string>
#include <vector>

namespace dinv {

// Flat local system: an invertible n x n transport per edge. Flatness (every
// face word has identity holonomy) is what makes this a representation of pi_1.
struct Representation {
    int fiber_dim = 0;
    std::vector<QMat> holonomy;  // one per edge

    void check_shapes(const CwModel& m) const;
};

// Transport along a path; composes left to right, i.e. later edges multiply
// on the left: hol(p then q) = hol(q) * hol(p).
QMat path_holonomy(const CwModel& m, const Representation& rep, const PathWord& path);

bool is_flat(const CwModel& m, const Representation& rep, std::string* why = nullptr);

// The Hom(V,V) system: fiber n^2, each edge acting by X -> g X g^{-1}
// (row-major vec, so the operator is g (x) (g^{-1})^T). The vectorized
// identity is fixed by every adjoint holonomy.
Representation adjoint_system(const Representation& rep);

// Row-major vec and its inverse.
QMat vec_matrix(const QMat& x);
QMat unvec_matrix(const QMat& v, int n);

} // namespace dinv
