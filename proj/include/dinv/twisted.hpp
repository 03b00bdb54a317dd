#pragma once

#include "dinv/chain_complex.hpp"
#include "dinv/representation.hpp"

namespace dinv {

// Twisted cellular complex of (model, rep):
//   C_i = F^{(#i-cells) * n}, cell-major blocks;
//   d1(e (x) u) = term (x) T_e u - init (x) u;
//   d2(face (x) u) = the boundary word pushed as a 1-chain;
//   d3 uses the integer 2-chain of each 3-cell with identity transports.
// Requires rep flat on model (dd = 0 is then automatic and asserted).
ChainComplex twisted_complex(const CwModel& m, const Representation& rep);

// Degree-1 twisted chain: one fiber vector per edge, the coefficient sitting
// over the edge's initial vertex.
struct OneChain {
    int fiber_dim = 0;
    std::vector<QMat> coeff;  // per edge, fiber_dim x 1

    static OneChain zero(const CwModel& m, int fiber_dim);
    bool is_zero() const;
    OneChain operator+(const OneChain& o) const;
    OneChain operator-(const OneChain& o) const;
    bool operator==(const OneChain& o) const { return fiber_dim == o.fiber_dim && coeff == o.coeff; }

    // Flatten into the twisted complex's C_1 coordinates (edge-major).
    QMat to_vector() const;
    static OneChain from_vector(const CwModel& m, int fiber_dim, const QMat& v);
};

// Walks the path with a running transport T (starting at the identity):
// a forward step through e adds e (x) T coeff and then updates T; a backward
// step through e first updates T through e^{-1} and then adds -(e (x) T coeff).
// Its twisted boundary is end (x) T_path coeff - base (x) coeff.
OneChain push_path(const CwModel& m, const Representation& rep, const PathWord& path,
                   const QMat& coeff);

// d1 of a one-chain in the given system, as a 0-chain vector (vertex-major).
QMat one_chain_boundary(const CwModel& m, const Representation& rep, const OneChain& z);

} // namespace dinv
