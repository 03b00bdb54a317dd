#include "dinv/builders.hpp"
#include "dinv/gluing.hpp"
#include "dinv/invariant.hpp"
#include "dinv/randomgen.hpp"
#include "dinv/scenario_io.hpp"
#include "dinv/twisted.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace dinv;

namespace {

// Exit codes: 0 pass, 1 check failure, 2 input error.
constexpr int kPass = 0;
constexpr int kCheckFail = 1;
constexpr int kInputError = 2;

bool g_quiet = false;
bool g_json = false;

void say(const std::string& s)
{
    if (!g_quiet)
        std::cout << s;
}

void emit_report(const Report& r)
{
    say(g_json ? report_to_json(r) : r.to_text());
}

std::string betti_str(const std::vector<int>& b)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < b.size(); ++i)
        os << (i ? ", " : "") << b[i];
    os << ")";
    return os.str();
}

std::string chain_str(const Scenario& s, const OneChain& z)
{
    int n = s.rep.fiber_dim;
    std::ostringstream os;
    bool any = false;
    for (size_t e = 0; e < z.coeff.size(); ++e) {
        QMat m = unvec_matrix(z.coeff[e], n);
        if (m.is_zero())
            continue;
        any = true;
        os << "  edge " << e << ":";
        for (int i = 0; i < n; ++i) {
            os << (i ? " ;" : "  [");
            for (int j = 0; j < n; ++j)
                os << " " << rat_str(m(i, j));
        }
        os << " ]\n";
    }
    if (!any)
        os << "  (zero chain)\n";
    return os.str();
}

int run_validate(const std::string& path)
{
    Scenario s = load_scenario(path);
    Report r = validate_morse(s.model, s.rep, s.morse);
    emit_report(r);
    return r.ok() ? kPass : kCheckFail;
}

int run_homology(const std::string& path)
{
    Scenario s = load_scenario(path);
    Representation adj = adjoint_system(s.rep);
    auto cell_v = twisted_complex(s.model, s.rep).homology_dims();
    auto cell_h = twisted_complex(s.model, adj).homology_dims();
    auto morse_v = morse_complex(s.model, s.rep, s.morse).complex.homology_dims();
    auto morse_h = morse_complex(s.model, adj, s.morse).complex.homology_dims();
    say("cellular Betti, V coefficients:    " + betti_str(cell_v) + "\n");
    say("cellular Betti, Hom coefficients:  " + betti_str(cell_h) + "\n");
    say("Morse Betti, V coefficients:       " + betti_str(morse_v) + "\n");
    say("Morse Betti, Hom coefficients:     " + betti_str(morse_h) + "\n");
    return kPass;
}

int run_propagator(const std::string& path, const std::string& out)
{
    Scenario s = load_scenario(path);
    MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
    Propagator g = contraction(mc.complex);
    PropagatorReport pr = verify_propagator(mc.complex, g);
    Report r;
    for (const auto& d : pr.degrees)
        r.add("propagator identity in degree " + std::to_string(d.degree), d.pass,
              d.pass ? "" : "residual " + mat_str(d.residual));
    emit_report(r);
    if (!out.empty()) {
        std::ostringstream os;
        os << "{\n  \"format\": \"dinv-propagator\",\n  \"degrees\": [\n";
        for (size_t i = 0; i < g.g.size(); ++i) {
            os << "    [";
            for (int r2 = 0; r2 < g.g[i].rows(); ++r2) {
                os << (r2 ? ", [" : "[");
                for (int c = 0; c < g.g[i].cols(); ++c)
                    os << (c ? ", \"" : "\"") << rat_str(g.g[i](r2, c)) << "\"";
                os << "]";
            }
            os << "]" << (i + 1 < g.g.size() ? "," : "") << "\n";
        }
        os << "  ]\n}\n";
        std::ofstream f(out + ".tmp");
        f << os.str();
        f.close();
        fs::rename(out + ".tmp", out);
        say("wrote " + out + "\n");
    }
    return r.ok() ? kPass : kCheckFail;
}

int run_invariant(const std::string& path, const std::string& out)
{
    Scenario s = load_scenario(path);
    DInvariant d = d_invariant(s);
    say("invariant representative of " + s.name + ":\n" + chain_str(s, d.representative));
    if (!out.empty()) {
        fs::path outp = fs::absolute(out);
        fs::path scen = fs::absolute(path);
        std::string rel = fs::relative(scen, outp.parent_path()).string();
        save_chain(d.representative, rel, outp.string());
        say("wrote " + out + "\n");
    }
    return kPass;
}

int run_compare(const std::string& z1path, const std::string& z2path, bool against_zero)
{
    ChainFile c1 = load_chain(z1path);
    OneChain z2;
    if (against_zero) {
        z2 = OneChain::zero(c1.scenario.model, c1.chain.fiber_dim);
    } else {
        ChainFile c2 = load_chain(z2path);
        if (!(c1.scenario.model.edges == c2.scenario.model.edges &&
              c1.scenario.rep.holonomy == c2.scenario.rep.holonomy))
            throw IoError("chains reference different scenarios");
        z2 = c2.chain;
    }
    DEqualResult eq = d_equal(c1.scenario.model, c1.scenario.rep, c1.chain, z2);
    Report r;
    std::ostringstream cert;
    if (eq.equal) {
        cert << "lattice coefficients (";
        for (size_t i = 0; i < eq.lattice_coeffs.size(); ++i)
            cert << (i ? ", " : "") << eq.lattice_coeffs[i].get_str();
        cert << ")";
    }
    r.add("classes equal in H_1(M;Hom)/H_1(M;Z)", eq.equal, cert.str());
    emit_report(r);
    return eq.equal ? kPass : kCheckFail;
}

int run_glue(const std::string& path, const std::string& out)
{
    GluedScenario gs = load_glued_scenario(path);
    GlueResult res = glue(gs);
    Report r = validate_morse(res.glued.model, res.glued.rep, res.glued.morse);
    emit_report(r);
    if (!out.empty() && r.ok()) {
        save_scenario(res.glued, out);
        say("wrote " + out + "\n");
    }
    return r.ok() ? kPass : kCheckFail;
}

int run_verify_gluing(const std::string& path)
{
    GluedScenario gs = load_glued_scenario(path);
    Report r = verify_gluing(gs);
    emit_report(r);
    return r.ok() ? kPass : kCheckFail;
}

int run_example(const std::string& name, std::string outdir, int fiber_dim, uint64_t seed)
{
    if (outdir.empty())
        outdir = ".";
    fs::create_directories(outdir);
    auto path_of = [&](const std::string& f) { return (fs::path(outdir) / f).string(); };

    bool all = name == "all";
    bool wrote = false;
    if (all || name == "torus-cylinder") {
        Scenario s = build_torus_cylinder(fiber_dim);
        s.seed = seed;
        save_scenario(s, path_of(s.name + ".json"));
        say("wrote " + path_of(s.name + ".json") + "\n");
        wrote = true;
    }
    if (all || name == "double-cylinder") {
        Scenario s = build_torus_cylinder(fiber_dim);
        s.seed = seed;
        GluedScenario gs = make_double(s);
        std::string fa = s.name + ".json";
        std::string fb = gs.part_b.name + ".json";
        save_scenario(gs.part_a, path_of(fa));
        save_scenario(gs.part_b, path_of(fb));
        save_glued_scenario(gs, path_of(gs.name + ".json"), fa, fb);
        say("wrote " + path_of(fa) + "\n");
        say("wrote " + path_of(fb) + "\n");
        say("wrote " + path_of(gs.name + ".json") + "\n");
        wrote = true;
    }
    if (all || name == "circle") {
        Scenario s = build_circle(Rat(2));
        s.seed = seed;
        save_scenario(s, path_of(s.name + ".json"));
        say("wrote " + path_of(s.name + ".json") + "\n");
        wrote = true;
    }
    if (!wrote)
        throw IoError("unknown example '" + name +
                      "' (expected torus-cylinder, double-cylinder, circle, or all)");
    return kPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact engine for the Chern-Simons one-loop invariant d(M,rho) from "
                 "combinatorial Morse data"};
    app.require_subcommand(1);

    std::string path, path2, out;
    int fiber_dim = 1;
    uint64_t seed = 0;
    bool against_zero = false;
    app.add_flag("--quiet", g_quiet, "suppress normal output");
    app.add_flag("--json", g_json, "emit reports as JSON");

    auto* validate = app.add_subcommand("validate", "validate a scenario file");
    validate->add_option("scenario", path)->required();

    auto* homology = app.add_subcommand("homology", "twisted Betti numbers (V and Hom systems)");
    homology->add_option("scenario", path)->required();

    auto* propagator =
        app.add_subcommand("propagator", "contract the Morse complex and verify the identity");
    propagator->add_option("scenario", path)->required();
    propagator->add_option("--out", out, "write the propagator snapshot here");

    auto* invariant = app.add_subcommand("invariant", "compute the d-invariant representative");
    invariant->add_option("scenario", path)->required();
    invariant->add_option("--out", out, "write the representative chain here");

    auto* compare = app.add_subcommand("compare", "test equality of two invariant classes");
    compare->add_option("chain", path)->required();
    compare->add_option("chain2", path2);
    compare->add_flag("--zero", against_zero, "compare against the zero chain");

    auto* glue_cmd = app.add_subcommand("glue", "glue the parts of a glued-scenario file");
    glue_cmd->add_option("glued", path)->required();
    glue_cmd->add_option("--out", out, "write the glued scenario here");

    auto* verify = app.add_subcommand("verify-gluing", "verify the gluing formula end to end");
    verify->add_option("glued", path)->required();

    auto* example = app.add_subcommand("example", "write generator output");
    example->add_option("name", path)->required();
    example->add_option("--out", out, "output directory");
    example->add_option("--fiber-dim", fiber_dim, "fiber dimension for the generators");
    example->add_option("--seed", seed, "seed recorded in generated scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed())
            return run_validate(path);
        if (homology->parsed())
            return run_homology(path);
        if (propagator->parsed())
            return run_propagator(path, out);
        if (invariant->parsed())
            return run_invariant(path, out);
        if (compare->parsed()) {
            if (!against_zero && path2.empty())
                throw IoError("compare needs a second chain or --zero");
            return run_compare(path, path2, against_zero);
        }
        if (glue_cmd->parsed())
            return run_glue(path, out);
        if (verify->parsed())
            return run_verify_gluing(path);
        if (example->parsed())
            return run_example(path, out, fiber_dim, seed);
    } catch (const IoError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const BuildError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFail;
    }
    return kInputError;
}
