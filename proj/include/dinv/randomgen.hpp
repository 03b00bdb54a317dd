#pragma once

#include "dinv/blocked.hpp"
#include "dinv/chain_complex.hpp"

#include <cstdint>

namespace dinv {

// splitmix64; kept local so seeded runs are identical across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next()
    {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform-ish integer in [0, n); n small, bias is irrelevant here.
    int below(int n) { return int(next() % uint64_t(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
};

// Product of a few elementary row operations; determinant is +-1 by construction.
QMat random_unimodular(Rng& rng, int n, int ops = 0);

struct RandomComplexParams {
    int max_degrees = 4;  // number of graded pieces
    int max_rank = 2;     // rank of each identity cone summand
    int fiber = 1;        // tensor factor, mirrors a local system fiber
};

// Acyclic by construction: direct sum of identity cones, conjugated degreewise
// by random unimodular matrices.
ChainComplex random_acyclic_complex(Rng& rng, const RandomComplexParams& p = {});

// Acyclic parts plus cross map d^ab = d^bb Y - Y d^aa for a random degree-0 Y,
// which anticommutes identically.
BlockedComplex random_blocked_complex(uint64_t seed, const RandomComplexParams& p = {});

// A fresh propagator for c: contraction after a random change of basis.
Propagator random_propagator(Rng& rng, const ChainComplex& c);

} // namespace dinv
