#pragma once

#include "dinv/scenario.hpp"

namespace dinv {

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Homotopy model of [-1,1] x T^2 as the one-vertex CW torus (vertex v, loop
// edges x, y, face x y x^-1 y^-1) with rho(x) = b, rho(y) = a^-1, carrying the
// four critical points NP (index 3), p, q (index 2), SP (index 1) at v and the
// trajectory pairs
//   NP->p: {(trivial, +1), (y backward, -1)}     block 1 - a
//   NP->q: {(trivial, +1), (x backward, -1)}
//   p->SP: {(y, +1), (x^-1 y, -1)}
//   q->SP: {(trivial, +1), (y, -1)}              block 1 - a^-1
// and c_f = 0. Requires a, b invertible and commuting, 1 - a invertible, and
// the twisted torus system acyclic.
Scenario build_torus_cylinder(const QMat& a, const QMat& b);

// Default coefficient choices per fiber dimension: a = (2), b = (3) for n = 1
// and a = diag(2,3), b = diag(5,7) for n = 2.
Scenario build_torus_cylinder(int fiber_dim);

// Circle model (one vertex, one loop edge) with holonomy `a`, carrying the
// height-function Morse data: max (index 1), min (index 0), two connecting
// arcs {(x, +1), (trivial, -1)}, c_f = 0.
Scenario build_circle(const Rat& a);

// The explicit propagator of the cylinder scenario: blocks (1-a)^{-1} and
// (1-a^{-1})^{-1}, zeros elsewhere.
Propagator cylinder_explicit_propagator(const Scenario& s);

} // namespace dinv
