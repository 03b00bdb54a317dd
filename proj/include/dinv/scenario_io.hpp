#pragma once

#include "dinv/gluing.hpp"
#include "dinv/scenario.hpp"
#include "dinv/twisted.hpp"

#include <string>

namespace dinv {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One file = one scenario; rationals are strings "p/q" (or "p"), matrices are
// row-major arrays of rows, cells are indexed from 0.
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

// Glued scenarios reference their part files by path relative to their own
// directory; cross-trajectory paths are written in the glued model's cell
// indexing (part-a cells keep their ids, unpaired part-b cells follow).
GluedScenario load_glued_scenario(const std::string& path);
void save_glued_scenario(const GluedScenario& gs, const std::string& path,
                         const std::string& part_a_rel, const std::string& part_b_rel);

// Invariant representatives: the chain plus a reference to its scenario file.
struct ChainFile {
    std::string scenario_path;  // resolved, absolute-ish
    Scenario scenario;
    OneChain chain;  // adjoint-valued (fiber n^2)
};

ChainFile load_chain(const std::string& path);
void save_chain(const OneChain& chain, const std::string& scenario_rel, const std::string& path);

std::string scenario_to_json(const Scenario& s);
std::string report_to_json(const Report& r);

} // namespace dinv
