#include "dinv/builders.hpp"
#include "dinv/twisted.hpp"

#include <doctest.h>

using namespace dinv;

namespace {

QMat scalar(const Rat& v)
{
    QMat m(1, 1);
    m(0, 0) = v;
    return m;
}

Scenario cylinder()
{
    return build_torus_cylinder(scalar(2), scalar(3));
}

} // namespace

TEST_CASE("cylinder Morse blocks match the explicit boundary homomorphisms")
{
    Scenario s = cylinder();
    MorseComplex mc = morse_complex(s.model, s.rep, s.morse);

    // d_{p,NP} = 1 - a = (-1) and d_{SP,q} = 1 - a^{-1} = (1/2) for a = 2.
    CHECK(mc.block(mc.complex.d[3], "p", "NP") == scalar(-1));
    CHECK(mc.block(mc.complex.d[2], "SP", "q") == scalar(Rat(1, 2)));

    CHECK(mc.complex.dims == std::vector<int>{0, 1, 2, 1});
    CHECK(mc.complex.is_acyclic());
}

TEST_CASE("cylinder Morse blocks for commuting diagonal matrices")
{
    QMat a(2, 2), b(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    b(0, 0) = 5;
    b(1, 1) = 7;
    Scenario s = build_torus_cylinder(a, b);
    MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
    CHECK(mc.block(mc.complex.d[3], "p", "NP") == QMat::identity(2) - a);
    CHECK(mc.block(mc.complex.d[2], "SP", "q") == QMat::identity(2) - *inverse(a));
    CHECK(mc.complex.is_acyclic());
}

TEST_CASE("empty Morse data gives the zero complex")
{
    Scenario s = cylinder();
    MorseData empty;
    MorseComplex mc = morse_complex(s.model, s.rep, empty);
    for (int d : mc.complex.dims)
        CHECK(d == 0);
}

TEST_CASE("validate accepts the cylinder scenario")
{
    Scenario s = cylinder();
    Report r = validate_morse(s.model, s.rep, s.morse);
    CHECK(r.ok());
}

TEST_CASE("validate flags index non-adjacency")
{
    Scenario s = cylinder();
    s.morse.trajectories.push_back({"NP", "SP", 1, {0, {}}});  // index 3 -> 1
    Report r = validate_morse(s.model, s.rep, s.morse);
    CHECK(!r.ok());
}

TEST_CASE("validate flags a broken c_f")
{
    CwModel m;
    m.vertices = 2;
    m.edges = {{0, 1}};
    Representation rep;
    rep.fiber_dim = 1;
    rep.holonomy = {scalar(2)};
    MorseData md;
    md.points = {{"min", 0, 0}, {"saddle", 1, 1}};
    md.has_cf = true;
    md.c_f = {Int(0)};
    // The signed critical chain is v0 - v1 != 0, so c_f = 0 cannot bound it.
    Report r = validate_morse(m, rep, md);
    CHECK(!r.ok());
}

TEST_CASE("validate flags mismatched trajectory endpoints")
{
    CwModel m;
    m.vertices = 2;
    m.edges = {{0, 1}};
    Representation rep;
    rep.fiber_dim = 1;
    rep.holonomy = {scalar(2)};
    MorseData md;
    md.points = {{"a", 1, 0}, {"b", 0, 0}};
    md.trajectories = {{"a", "b", 1, {0, {{0, 1}}}}};  // lands at vertex 1, not 0
    Report r = validate_morse(m, rep, md);
    CHECK(!r.ok());
}

TEST_CASE("morse_complex rejects inconsistent signs via dd != 0")
{
    Scenario s = cylinder();
    s.morse.trajectories[1].sign = 1;  // breaks d_{p,NP} = 1 - a
    CHECK_THROWS_AS(morse_complex(s.model, s.rep, s.morse), MorseError);
}

TEST_CASE("solve_cf on the cylinder accepts the zero chain")
{
    Scenario s = cylinder();
    MorseData md = s.morse;
    md.has_cf = false;
    std::vector<Int> cf = solve_cf(s.model, md);
    // All four points sit at the single vertex with signs summing to zero.
    CHECK(critical_zero_chain(s.model, md).is_zero());
    ZMat d1(s.model.vertices, int(s.model.edges.size()));
    for (int e = 0; e < int(s.model.edges.size()); ++e) {
        d1(s.model.edge_term(e), e) += 1;
        d1(s.model.edge_init(e), e) -= 1;
    }
    ZMat cfv(int(cf.size()), 1);
    for (size_t e = 0; e < cf.size(); ++e)
        cfv(int(e), 0) = cf[e];
    CHECK((d1 * cfv).is_zero());
}

TEST_CASE("solve_cf connects adjacent critical points through the edge")
{
    CwModel m;
    m.vertices = 2;
    m.edges = {{0, 1}};
    MorseData md;
    md.points = {{"min", 0, 0}, {"saddle", 1, 1}};
    std::vector<Int> cf = solve_cf(m, md);
    REQUIRE(cf.size() == 1);
    // boundary(c) must be v0 - v1; the edge runs v0 -> v1, so c = -edge.
    CHECK(cf[0] == -1);
}

TEST_CASE("solve_cf reports an obstruction when the signed sum is nonzero")
{
    CwModel m;
    m.vertices = 1;
    m.edges = {{0, 0}};
    MorseData md;
    md.points = {{"only", 0, 0}};
    CHECK_THROWS_AS(solve_cf(m, md), MorseError);
}

TEST_CASE("builder rejects degenerate coefficients")
{
    CHECK_THROWS_AS(build_torus_cylinder(QMat::identity(1), scalar(3)), BuildError);
    CHECK_THROWS_AS(build_torus_cylinder(scalar(2), scalar(0)), BuildError);
    QMat a(2, 2, {Rat(2), Rat(0), Rat(0), Rat(3)});
    QMat b(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)});  // does not commute with a
    CHECK_THROWS_AS(build_torus_cylinder(a, b), BuildError);
}

TEST_CASE("Morse and cellular complexes compute the same twisted homology on the cylinder")
{
    Scenario s = cylinder();
    auto cell = twisted_complex(s.model, s.rep).homology_dims();
    auto morse = morse_complex(s.model, s.rep, s.morse).complex.homology_dims();
    for (int b : cell)
        CHECK(b == 0);
    for (int b : morse)
        CHECK(b == 0);
}
