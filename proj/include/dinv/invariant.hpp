#pragma once

#include "dinv/scenario.hpp"
#include "dinv/twisted.hpp"

#include <optional>

namespace dinv {

// The invariant 1-chain: minus c_f with identity coefficients, plus every
// adjacent-index trajectory pushed through the Hom system with coefficient
//   K_gamma = (-1)^{ind(p)+1} G_{p,q} (sign(gamma) * hol(gamma)).
// The result is asserted to be a twisted cycle; g must satisfy the propagator
// identity for the Morse complex of (m, rep, md).
OneChain i_circle(const CwModel& m, const Representation& rep, const MorseData& md,
                  const MorseComplex& mc, const Propagator& g, const std::vector<Int>& c_f);

struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Z-basis of the integral cellular 1-cycles ker(d1; Z), via the HNF.
std::vector<std::vector<Int>> integral_cycle_lattice(const CwModel& m);

struct DInvariant {
    OneChain representative;  // adjoint-valued twisted cycle
};

// Builds the Morse complex, contracts it (errors if not acyclic), resolves
// c_f, and returns the class representative.
DInvariant d_invariant(const Scenario& s);

struct DEqualResult {
    bool equal = false;
    // Certificate: z1 - z2 = d2 w + sum_i n_i (cycle_i (x) id).
    std::optional<QMat> witness_w;
    std::vector<Int> lattice_coeffs;
};

// Equality in H_1(M; Hom)/H_1(M; Z): the difference must be an adjoint
// 2-boundary plus an integer combination of integral cycles with identity
// coefficients. Decided by projecting to the d2-quotient, then integral
// lattice membership; inputs must be twisted cycles.
DEqualResult d_equal(const CwModel& m, const Representation& rep, const OneChain& z1,
                     const OneChain& z2);

} // namespace dinv
