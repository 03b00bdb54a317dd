#pragma once

#include "dinv/chain_complex.hpp"
#include "dinv/report.hpp"
#include "dinv/representation.hpp"

#include <map>
#include <string>
#include <vector>

namespace dinv {

struct CriticalPoint {
    std::string name;
    int index = 0;  // Morse index, 0..3
    int vertex = 0;
};

// Signed gradient trajectory between critical points of adjacent index,
// recorded as an edge path from source.vertex to target.vertex. The sign is
// input data; consistency is enforced a posteriori through dd = 0.
struct Trajectory {
    std::string source;
    std::string target;
    int sign = 1;
    PathWord path;
};

struct MorseData {
    std::vector<CriticalPoint> points;
    std::vector<Trajectory> trajectories;
    bool has_cf = false;
    std::vector<Int> c_f;  // integer coefficient per edge

    const CriticalPoint* find(const std::string& name) const;
    int max_index() const;
};

// Twisted Morse complex with its critical-point basis labeling. Within each
// degree the basis follows declaration order.
struct MorseComplex {
    ChainComplex complex;
    int fiber_dim = 0;
    std::vector<std::vector<int>> points_by_degree;  // indices into MorseData::points
    std::map<std::string, std::pair<int, int>> slot; // name -> (degree, position)

    // Block of a degree-map at (row point p, column point q).
    QMat block(const QMat& mat, const std::string& p, const std::string& q) const;
};

struct MorseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// C_i = (+)_{ind p = i} V_p with boundary blocks sum_gamma sign * holonomy.
// Throws MorseError naming the degree if the assembled boundary does not
// square to zero.
MorseComplex morse_complex(const CwModel& m, const Representation& rep, const MorseData& md);

// Aggregates the side conditions: trajectory index adjacency, path endpoints,
// dd = 0, the c_f boundary condition, and flatness.
Report validate_morse(const CwModel& m, const Representation& rep, const MorseData& md);

// Signed critical-point 0-chain sum_p (-1)^{ind p} vertex(p), vertex-major.
ZMat critical_zero_chain(const CwModel& m, const MorseData& md);

// Integer 1-chain with boundary equal to the signed critical 0-chain, found
// through the integral HNF; throws MorseError when no integral solution exists.
std::vector<Int> solve_cf(const CwModel& m, const MorseData& md);

} // namespace dinv
