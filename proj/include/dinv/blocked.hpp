#pragma once

#include "dinv/chain_complex.hpp"

#include <cstdint>
#include <vector>

namespace dinv {

// Two complexes of equal length with cross maps cross[k] : C^a_k -> C^b_{k-1},
// assembled as the lower-triangular total boundary [[d^aa, 0], [d^ab, d^bb]].
struct BlockedComplex {
    ChainComplex a;
    ChainComplex b;
    std::vector<QMat> cross;  // index k = 0..top; cross[0] has zero rows

    int top() const { return a.top(); }
    QMat cross_map(int k) const
    {
        if (k >= 0 && k < int(cross.size()))
            return cross[k];
        return QMat::zero(b.dim(k - 1), a.dim(k));
    }

    // d^bb d^ab + d^ab d^aa = 0 in every degree, plus shape checks.
    void check_valid() const;

    ChainComplex total() const;

    // Lift degreewise vectors between part and total coordinates.
    QMat embed_a(int degree, const QMat& v) const;
    QMat embed_b(int degree, const QMat& v) const;
};

// The glued propagator of the lower-triangular total complex. The cross part
// is built degree by degree:
//   G^ab_1     = -G^bb_1 d^ab_1 G^aa_1
//   G^ab_{k+1} = -(G^bb_{k+1} d^ab_{k+1} G^aa_{k+1}
//                  + G^bb_{k+1} G^ab_k d^aa_k + G^bb_{k+1} G^bb_k d^ab_k)
Propagator glue_propagator(const BlockedComplex& bc, const Propagator& ga, const Propagator& gb);

// Off-diagonal residual d^ab G^aa + d^bb G^ab + G^ab d^aa + G^bb d^ab in
// degree k, for the cross blocks of a total-complex propagator.
QMat off_diagonal_residual(const BlockedComplex& bc, const Propagator& ga, const Propagator& gb,
                           const std::vector<QMat>& gab, int k);

} // namespace dinv
