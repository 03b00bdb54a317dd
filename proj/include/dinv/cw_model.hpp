#pragma once

#include "dinv/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dinv {

struct PathStep {
    int edge = 0;
    int dir = 1;  // +1 traverses the edge forward, -1 backward

    bool operator==(const PathStep&) const = default;
};

// Edge path: starts at `base`, each step composable with the previous one.
struct PathWord {
    int base = 0;
    std::vector<PathStep> steps;

    bool operator==(const PathWord&) const = default;
};

// Combinatorial cell model, homotopy-faithful through the degrees the
// invariant needs. Faces carry closed boundary words; 3-cells (optional,
// unused by the d computation) carry integer 2-chains.
struct CwModel {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;                 // (init, term)
    std::vector<PathWord> faces;                            // closed words
    std::vector<std::vector<std::pair<int, Int>>> cells3;   // (face, coefficient)

    int edge_init(int e) const { return edges[e].first; }
    int edge_term(int e) const { return edges[e].second; }

    int step_start(const PathStep& s) const { return s.dir > 0 ? edge_init(s.edge) : edge_term(s.edge); }
    int step_end(const PathStep& s) const { return s.dir > 0 ? edge_term(s.edge) : edge_init(s.edge); }

    bool path_composable(const PathWord& p) const;
    // End vertex of a composable path.
    int path_end(const PathWord& p) const;

    // Cell references in range, faces closed and composable.
    void check_valid() const;
};

PathWord reversed(const CwModel& m, const PathWord& p);
// First p, then q; q.base must equal p's end vertex.
PathWord concatenated(const CwModel& m, const PathWord& p, const PathWord& q);
// Some path between two vertices in the 1-skeleton (BFS; edges usable both
// ways); throws if the vertices are not connected.
PathWord connect_vertices(const CwModel& m, int from, int to);

} // namespace dinv
