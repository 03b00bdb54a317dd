#pragma once

#include "dinv/matrix.hpp"

#include <optional>
#include <vector>

namespace dinv {

// Row-style Hermite normal form: h = u * m with u unimodular, h in echelon
// shape with positive pivots and entries above each pivot reduced into [0, pivot).
struct Hnf {
    ZMat h;
    ZMat u;
    std::vector<int> pivot_cols;
    int rank = 0;
};

Hnf hermite_normal_form(const ZMat& m);

// Integer solution of a x = b (x, b column vectors); nullopt iff none exists.
std::optional<ZMat> solve_integer(const ZMat& a, const ZMat& b);

// Z-basis of {x : a x = 0}, one kernel vector per returned column.
ZMat integer_kernel(const ZMat& a);

// Integer coefficients c with sum_i c_i gen_i = target, over rational vectors;
// nullopt iff the target is not in the Z-span. Denominators are cleared and the
// resulting system solved through the HNF.
std::optional<std::vector<Int>> lattice_membership(const std::vector<std::vector<Rat>>& generators,
                                                   const std::vector<Rat>& target);

} // namespace dinv
