#pragma once

#include "dinv/morse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dinv {

// Cells forming the designated boundary subcomplex (used by gluing/doubling).
struct BoundaryCells {
    std::vector<int> vertices;
    std::vector<int> edges;
    std::vector<int> faces;
};

// One verification workload: a cell model, a flat system on it, and the Morse
// data of a gradient on the underlying manifold.
struct Scenario {
    std::string name;
    uint64_t seed = 0;
    CwModel model;
    Representation rep;
    MorseData morse;
    std::optional<BoundaryCells> boundary;

    // The c_f chain: supplied wins and is validated upstream, else solved.
    std::vector<Int> resolve_cf() const
    {
        if (morse.has_cf)
            return morse.c_f;
        return solve_cf(model, morse);
    }
};

} // namespace dinv
