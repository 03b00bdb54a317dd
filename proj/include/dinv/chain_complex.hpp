#pragma once

#include "dinv/linalg.hpp"
#include "dinv/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dinv {

// Nonnegatively graded complex with rational coefficients. dims[i] is the
// dimension of C_i; d[i] : C_i -> C_{i-1} for i >= 1 (d[0] is a 0 x dims[0]
// placeholder so indices line up).
struct ChainComplex {
    std::vector<int> dims;
    std::vector<QMat> d;

    int top() const { return int(dims.size()) - 1; }
    int dim(int i) const { return (i >= 0 && i <= top()) ? dims[i] : 0; }

    // Boundary in degree i with out-of-range degrees read as zero maps.
    QMat boundary(int i) const
    {
        if (i >= 1 && i <= top())
            return d[i];
        return QMat::zero(dim(i - 1), dim(i));
    }

    // Shape consistency plus dd = 0 in every degree.
    void check_valid() const;

    std::vector<int> homology_dims() const;
    bool is_acyclic() const;
    // Lowest degree with nonzero homology, or -1 when acyclic.
    int first_nonacyclic_degree() const;
};

// Preimage under d_{degree+1} of a degree-`degree` chain z (column vector);
// nullopt iff z is not a boundary.
std::optional<QMat> boundary_membership(const ChainComplex& c, int degree, const QMat& z);

// Degree +1 operator family; g[i] : C_{i-1} -> C_i with g[0] : 0 -> C_0.
struct Propagator {
    std::vector<QMat> g;

    QMat map(int i, const ChainComplex& c) const
    {
        if (i >= 0 && i < int(g.size()))
            return g[i];
        return QMat::zero(c.dim(i), c.dim(i - 1));
    }
};

struct DegreeCheck {
    int degree;
    bool pass;
    QMat residual;  // dG + Gd - id in this degree
};

struct PropagatorReport {
    std::vector<DegreeCheck> degrees;
    bool ok() const
    {
        for (const auto& d : degrees)
            if (!d.pass)
                return false;
        return true;
    }
};

// Exact evaluation of d_{i+1} g_{i+1} + g_i d_i - id per degree.
PropagatorReport verify_propagator(const ChainComplex& c, const Propagator& g);

// Chain contraction of an acyclic complex: complements of the kernels are
// spanned by RREF pivot columns, so the output is deterministic. Throws
// NonAcyclicError naming the offending degree otherwise.
Propagator contraction(const ChainComplex& c);

struct NonAcyclicError : std::runtime_error {
    int degree;
    explicit NonAcyclicError(int deg)
        : std::runtime_error("complex has nonzero homology in degree " + std::to_string(deg)),
          degree(deg)
    {
    }
};

} // namespace dinv
