#include "dinv/builders.hpp"

#include "dinv/twisted.hpp"

namespace dinv {

Scenario build_torus_cylinder(const QMat& a, const QMat& b)
{
    int n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n)
        throw BuildError("torus cylinder: a and b must be square of equal size");
    auto a_inv = inverse(a);
    auto b_inv = inverse(b);
    if (!a_inv || !b_inv)
        throw BuildError("torus cylinder: a and b must be invertible");
    if (a * b != b * a)
        throw BuildError("torus cylinder: a and b must commute");
    QMat one = QMat::identity(n);
    if (!inverse(one - a))
        throw BuildError("torus cylinder: 1 - a is singular");

    Scenario s;
    s.name = "torus_cylinder";
    s.model.vertices = 1;
    s.model.edges = {{0, 0}, {0, 0}};  // x = 0, y = 1
    s.model.faces = {{0, {{0, 1}, {1, 1}, {0, -1}, {1, -1}}}};
    s.rep.fiber_dim = n;
    s.rep.holonomy = {b, *a_inv};

    s.morse.points = {{"NP", 3, 0}, {"p", 2, 0}, {"q", 2, 0}, {"SP", 1, 0}};
    PathWord trivial{0, {}};
    PathWord y_back{0, {{1, -1}}};
    PathWord x_back{0, {{0, -1}}};
    PathWord y_fwd{0, {{1, 1}}};
    PathWord xinv_y{0, {{0, -1}, {1, 1}}};
    s.morse.trajectories = {
        {"NP", "p", 1, trivial}, {"NP", "p", -1, y_back},
        {"NP", "q", 1, trivial}, {"NP", "q", -1, x_back},
        {"p", "SP", 1, y_fwd},   {"p", "SP", -1, xinv_y},
        {"q", "SP", 1, trivial}, {"q", "SP", -1, y_fwd},
    };
    s.morse.has_cf = true;
    s.morse.c_f = {Int(0), Int(0)};
    s.boundary = BoundaryCells{{0}, {0, 1}, {0}};

    if (!twisted_complex(s.model, s.rep).is_acyclic())
        throw BuildError("torus cylinder: the twisted torus system is not acyclic for these a, b");
    if (!morse_complex(s.model, s.rep, s.morse).complex.is_acyclic())
        throw BuildError("torus cylinder: Morse complex not acyclic for these a, b");
    return s;
}

Scenario build_torus_cylinder(int fiber_dim)
{
    if (fiber_dim == 1) {
        QMat a(1, 1), b(1, 1);
        a(0, 0) = 2;
        b(0, 0) = 3;
        return build_torus_cylinder(a, b);
    }
    if (fiber_dim == 2) {
        QMat a(2, 2), b(2, 2);
        a(0, 0) = 2;
        a(1, 1) = 3;
        b(0, 0) = 5;
        b(1, 1) = 7;
        Scenario s = build_torus_cylinder(a, b);
        s.name = "torus_cylinder_n2";
        return s;
    }
    throw BuildError("torus cylinder: no default coefficients for fiber dimension " +
                     std::to_string(fiber_dim));
}

Scenario build_circle(const Rat& a)
{
    Scenario s;
    s.name = "circle_twisted";
    s.model.vertices = 1;
    s.model.edges = {{0, 0}};
    s.rep.fiber_dim = 1;
    QMat h(1, 1);
    h(0, 0) = a;
    s.rep.holonomy = {h};
    if (a == 0)
        throw BuildError("circle: holonomy must be invertible");
    if (a == 1)
        throw BuildError("circle: trivial holonomy is not acyclic");

    s.morse.points = {{"max", 1, 0}, {"min", 0, 0}};
    s.morse.trajectories = {
        {"max", "min", 1, {0, {{0, 1}}}},
        {"max", "min", -1, {0, {}}},
    };
    s.morse.has_cf = true;
    s.morse.c_f = {Int(0)};
    return s;
}

Propagator cylinder_explicit_propagator(const Scenario& s)
{
    int n = s.rep.fiber_dim;
    // rho(y) = a^{-1} in the builder's model.
    QMat a = *inverse(s.rep.holonomy[1]);
    QMat one = QMat::identity(n);
    QMat g_np_p = *inverse(one - a);
    QMat g_q_sp = *inverse(one - *inverse(a));

    MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
    Propagator g;
    g.g.resize(mc.complex.dims.size());
    for (int i = 0; i < int(g.g.size()); ++i)
        g.g[i] = QMat::zero(mc.complex.dim(i), mc.complex.dim(i - 1));
    auto put = [&](const std::string& p, const std::string& q, const QMat& m) {
        auto [pd, pi] = mc.slot.at(p);
        auto [qd, qi] = mc.slot.at(q);
        (void)qd;
        g.g[pd].set_block(pi * n, qi * n, m);
    };
    put("NP", "p", g_np_p);   // G_{NP,p} = (1-a)^{-1}, G_{NP,q} = 0
    put("q", "SP", g_q_sp);   // G_{q,SP} = (1-a^{-1})^{-1}, G_{p,SP} = 0
    return g;
}

} // namespace dinv
