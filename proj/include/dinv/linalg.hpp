#pragma once

#include "dinv/matrix.hpp"

#include <optional>
#include <vector>

namespace dinv {

// Reduced row echelon form with the transformation recorded: trans * input = r.
// Pivoting is first-nonzero (no tolerances anywhere; equality is exact).
struct Rref {
    QMat r;
    QMat trans;
    std::vector<int> pivot_cols;
    int rank = 0;
};

Rref rref(const QMat& a);

int rank(const QMat& a);

struct SolveResult {
    int rank = 0;
    std::optional<QMat> solution;    // one solution of a x = b, if consistent
    std::vector<QMat> kernel_basis;  // columns spanning ker a (free-variable units)
};

// Exact rank, particular solution and kernel basis. b, when present, must be
// a column vector with b.rows() == a.rows().
SolveResult rank_and_solve(const QMat& a, const std::optional<QMat>& b = std::nullopt);

// Inverse of a square matrix; nullopt iff singular.
std::optional<QMat> inverse(const QMat& a);

Rat determinant(const QMat& a);

// Basis of the left null space {y : y a = 0}, as rows of the returned matrix.
QMat left_kernel(const QMat& a);

} // namespace dinv
