// Acceptance suite: one line per criterion, exact arithmetic throughout.

#include "dinv/builders.hpp"
#include "dinv/gluing.hpp"
#include "dinv/randomgen.hpp"
#include "dinv/scenario_io.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>

using namespace dinv;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 = no stated limit
    std::function<void()> run;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what)
{
    if (!cond)
        throw Failure(what);
}

QMat scalar(const Rat& v)
{
    QMat m(1, 1);
    m(0, 0) = v;
    return m;
}

// The shipped scenarios: closed-model synthetic, the cylinder in both Morse
// orientations and both fiber dimensions, and the double's glued scenario.
std::vector<Scenario> shipped_scenarios()
{
    std::vector<Scenario> out;
    out.push_back(build_circle(Rat(2)));
    out.push_back(build_torus_cylinder(1));
    out.push_back(build_torus_cylinder(2));
    out.push_back(mirror_scenario(build_torus_cylinder(1)));
    out.push_back(glue(make_double(build_torus_cylinder(1))).glued);
    return out;
}

std::vector<int> sorted_nonzero(const std::vector<int>& v)
{
    std::vector<int> out;
    for (int x : v)
        if (x != 0)
            out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

void criterion_1()
{
    fs::path dir = fs::temp_directory_path() / "dinv_acceptance";
    fs::create_directories(dir);
    for (int n : {1, 2}) {
        Scenario s = build_torus_cylinder(n);
        std::string scen = (dir / (s.name + ".json")).string();
        std::string chain = (dir / (s.name + "_chain.json")).string();
        save_scenario(s, scen);
        Scenario loaded = load_scenario(scen);
        DInvariant d = d_invariant(loaded);
        save_chain(d.representative, s.name + ".json", chain);
        ChainFile cf = load_chain(chain);
        OneChain zero = OneChain::zero(cf.scenario.model, cf.chain.fiber_dim);
        DEqualResult eq = d_equal(cf.scenario.model, cf.scenario.rep, cf.chain, zero);
        require(eq.equal, "d(cylinder) != 0 for fiber dimension " + std::to_string(n));
    }
}

void criterion_2()
{
    for (int n : {1, 2}) {
        Scenario s = build_torus_cylinder(n);
        MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
        Propagator g = cylinder_explicit_propagator(s);
        require(verify_propagator(mc.complex, g).ok(),
                "explicit propagator fails for fiber dimension " + std::to_string(n));
    }
    // Spot-check the stated blocks for n = 1, a = (2).
    Scenario s = build_torus_cylinder(1);
    MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
    Propagator g = cylinder_explicit_propagator(s);
    require(mc.block(g.g[3], "NP", "p") == scalar(-1), "G_{NP,p} != (1-a)^{-1}");
    require(mc.block(g.g[2], "q", "SP") == scalar(2), "G_{q,SP} != (1-a^{-1})^{-1}");
    require(mc.block(g.g[3], "NP", "q").is_zero(), "G_{NP,q} != 0");
    require(mc.block(g.g[2], "p", "SP").is_zero(), "G_{p,SP} != 0");
}

void criterion_3()
{
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(seed);
        RandomComplexParams p;
        p.max_degrees = 5;
        p.fiber = 1 + int(seed % 3);
        p.max_rank = (p.fiber == 1) ? 4 : 2;  // up to 8 cells per degree
        ChainComplex c = random_acyclic_complex(rng, p);
        Propagator g = contraction(c);
        PropagatorReport r = verify_propagator(c, g);
        require(r.ok(), "contraction propagator fails at seed " + std::to_string(seed));
    }
}

void criterion_4()
{
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        RandomComplexParams p;
        p.max_degrees = 5;
        p.fiber = 1 + int(seed % 3);
        p.max_rank = (p.fiber == 1) ? 4 : 2;
        BlockedComplex bc = random_blocked_complex(seed, p);
        bc.check_valid();
        Propagator ga = contraction(bc.a);
        Propagator gb = contraction(bc.b);
        Propagator gm = glue_propagator(bc, ga, gb);
        require(verify_propagator(bc.total(), gm).ok(),
                "glued propagator fails at seed " + std::to_string(seed));
        std::vector<QMat> gab(bc.a.dims.size());
        for (int k = 0; k < int(gab.size()); ++k)
            gab[k] = gm.g[k].block(bc.a.dim(k), 0, bc.b.dim(k), bc.a.dim(k - 1));
        for (int k = 0; k < int(gab.size()); ++k)
            require(off_diagonal_residual(bc, ga, gb, gab, k).is_zero(),
                    "off-diagonal identity fails at seed " + std::to_string(seed) + ", degree " +
                        std::to_string(k));
    }
}

void criterion_5()
{
    for (const Scenario& s : shipped_scenarios()) {
        Representation adj = adjoint_system(s.rep);
        MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
        std::vector<Int> cf = s.resolve_cf();

        std::vector<Propagator> props;
        props.push_back(contraction(mc.complex));
        for (uint64_t seed = 1; seed <= 3; ++seed) {
            Rng rng(seed * 1000 + 7);
            props.push_back(random_propagator(rng, mc.complex));
        }
        for (const Propagator& g : props) {
            OneChain z = i_circle(s.model, s.rep, s.morse, mc, g, cf);
            require(one_chain_boundary(s.model, adj, z).is_zero(),
                    "invariant chain not a cycle on " + s.name);
        }
    }
    // The explicit propagator of the worked example as well.
    Scenario s = build_torus_cylinder(1);
    MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
    OneChain z = i_circle(s.model, s.rep, s.morse, mc, cylinder_explicit_propagator(s), s.morse.c_f);
    require(one_chain_boundary(s.model, adjoint_system(s.rep), z).is_zero(),
            "explicit-propagator chain not a cycle");
    require(z.coeff[0].is_zero() && z.coeff[1] == scalar(-1),
            "explicit-propagator representative is not loop (x) (-1)");
}

void criterion_6()
{
    for (const Scenario& s : shipped_scenarios()) {
        MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
        std::vector<Int> cf = s.resolve_cf();
        Propagator g0 = contraction(mc.complex);
        OneChain base = i_circle(s.model, s.rep, s.morse, mc, g0, cf);

        for (uint64_t k = 1; k <= 10; ++k) {
            Rng rng(k * 31 + 5);
            Propagator g = random_propagator(rng, mc.complex);
            OneChain z = i_circle(s.model, s.rep, s.morse, mc, g, cf);
            require(d_equal(s.model, s.rep, z, base).equal,
                    "propagator choice changes the class on " + s.name);
        }

        auto cycles = integral_cycle_lattice(s.model);
        for (int alt = 1; alt <= 3; ++alt) {
            std::vector<Int> cf2 = cf;
            for (size_t e = 0; e < cf2.size(); ++e)
                for (size_t c = 0; c < cycles.size(); ++c)
                    cf2[e] += Int(alt * ((c % 2) ? -1 : 1)) * cycles[c][e];
            OneChain z = i_circle(s.model, s.rep, s.morse, mc, g0, cf2);
            require(d_equal(s.model, s.rep, z, base).equal,
                    "c_f choice changes the class on " + s.name);
        }
    }
}

void criterion_7()
{
    GluedScenario gs = make_double(build_torus_cylinder(1));
    Report r = verify_gluing(gs);
    require(r.ok(), "verify_gluing fails on the double:\n" + r.to_text());

    std::map<std::string, bool> seen;
    for (const auto& c : r.checks)
        seen[c.name] = c.pass;
    for (const char* needed :
         {"part a invariant chain is a cycle", "part b invariant chain is a cycle",
          "chain-level additivity I_M = iota_a I_a + iota_b I_b",
          "class-level equality (gluing formula)"})
        require(seen.count(needed) && seen[needed], std::string("missing assertion: ") + needed);

    // The glued class itself vanishes for the double of the cylinder.
    GlueResult res = glue(gs);
    DInvariant dm = d_invariant(res.glued);
    require(d_equal(res.glued.model, res.glued.rep, dm.representative,
                    OneChain::zero(res.glued.model, 1))
                .equal,
            "glued class is nonzero");

    // Negative control: one corrupted sign must be caught.
    GluedScenario bad = make_double(build_torus_cylinder(1));
    bad.part_b.morse.trajectories[0].sign = -bad.part_b.morse.trajectories[0].sign;
    require(!verify_gluing(bad).ok(), "corrupted sign not detected");
}

void criterion_8()
{
    Scenario plus = build_torus_cylinder(1);
    Scenario minus = mirror_scenario(plus);
    for (const Scenario* s : {&plus, &minus}) {
        DInvariant d = d_invariant(*s);
        require(d_equal(s->model, s->rep, d.representative, OneChain::zero(s->model, 1)).equal,
                "class of " + s->name + " is nonzero");
    }
}

void criterion_9()
{
    // The standalone scenarios carry homotopy models of their manifolds, so
    // both coefficient systems must agree. The glued double's quotient model
    // is a chain-level workspace (the collapse loses the circle direction of
    // the double, which integer-coefficient 3-cells cannot restore), so only
    // the V-system statement - joint acyclicity - is asserted there.
    std::vector<Scenario> standalone = {build_circle(Rat(2)), build_torus_cylinder(1),
                                        build_torus_cylinder(2),
                                        mirror_scenario(build_torus_cylinder(1))};
    for (const Scenario& s : standalone) {
        Representation adj = adjoint_system(s.rep);
        auto cell_v = twisted_complex(s.model, s.rep).homology_dims();
        auto cell_h = twisted_complex(s.model, adj).homology_dims();
        auto morse_v = morse_complex(s.model, s.rep, s.morse).complex.homology_dims();
        auto morse_h = morse_complex(s.model, adj, s.morse).complex.homology_dims();
        require(sorted_nonzero(cell_v) == sorted_nonzero(morse_v),
                "V-system Betti numbers differ on " + s.name);
        require(sorted_nonzero(cell_h) == sorted_nonzero(morse_h),
                "Hom-system Betti numbers differ on " + s.name);
    }
    Scenario dbl = glue(make_double(build_torus_cylinder(1))).glued;
    require(twisted_complex(dbl.model, dbl.rep).is_acyclic(),
            "glued double: cellular V-system not acyclic");
    require(morse_complex(dbl.model, dbl.rep, dbl.morse).complex.is_acyclic(),
            "glued double: Morse V-system not acyclic");
}

} // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {1, "torus-cylinder invariant vanishes (n = 1 and n = 2)", 1.0, criterion_1},
        {2, "explicit worked-example propagator verifies exactly", 0.0, criterion_2},
        {3, "contraction identity on 100 seeded random acyclic complexes", 30.0, criterion_3},
        {4, "glued propagator on 100 seeded random blocked complexes", 60.0, criterion_4},
        {5, "invariant chains have exactly vanishing twisted boundary", 0.0, criterion_5},
        {6, "class is independent of propagator and c_f choices", 0.0, criterion_6},
        {7, "gluing theorem end to end on the double, with negative control", 5.0, criterion_7},
        {8, "both Morse orientations of the cylinder give the zero class", 0.0, criterion_8},
        {9, "Morse and cellular Betti numbers agree on shipped scenarios", 0.0, criterion_9},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
            ok = false;
            detail = "exceeded the runtime limit of " + std::to_string(c.limit_seconds) + " s";
        }
        all_ok = all_ok && ok;
        std::printf("criterion %d: %s (%.2fs) - %s\n", c.number, ok ? "PASS" : "FAIL", secs,
                    c.title.c_str());
        if (!ok)
            std::printf("  %s\n", detail.c_str());
    }
    std::printf("acceptance: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? 0 : 1;
}
