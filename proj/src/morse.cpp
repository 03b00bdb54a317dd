#include "dinv/morse.hpp"

#include "dinv/lattice.hpp"

#include <sstream>

namespace dinv {

const CriticalPoint* MorseData::find(const std::string& name) const
{
    for (const auto& p : points)
        if (p.name == name)
            return &p;
    return nullptr;
}

int MorseData::max_index() const
{
    int m = -1;
    for (const auto& p : points)
        m = std::max(m, p.index);
    return m;
}

QMat MorseComplex::block(const QMat& mat, const std::string& p, const std::string& q) const
{
    int pi = slot.at(p).second;
    int qi = slot.at(q).second;
    int n = fiber_dim;
    return mat.block(pi * n, qi * n, n, n);
}

static void check_morse_structure(const CwModel& m, const MorseData& md)
{
    for (const auto& p : md.points) {
        if (p.index < 0 || p.index > 3)
            throw MorseError("critical point '" + p.name + "' has index out of range");
        if (p.vertex < 0 || p.vertex >= m.vertices)
            throw MorseError("critical point '" + p.name + "' at missing vertex");
    }
    for (size_t i = 0; i < md.points.size(); ++i)
        for (size_t j = i + 1; j < md.points.size(); ++j)
            if (md.points[i].name == md.points[j].name)
                throw MorseError("duplicate critical point name '" + md.points[i].name + "'");
    for (const auto& t : md.trajectories) {
        const CriticalPoint* s = md.find(t.source);
        const CriticalPoint* g = md.find(t.target);
        if (!s || !g)
            throw MorseError("trajectory references missing critical point");
        if (s->index != g->index + 1)
            throw MorseError("trajectory " + t.source + "->" + t.target +
                             " does not drop the index by one");
        if (t.sign != 1 && t.sign != -1)
            throw MorseError("trajectory sign must be +-1");
        if (!m.path_composable(t.path) || t.path.base != s->vertex ||
            m.path_end(t.path) != g->vertex)
            throw MorseError("trajectory " + t.source + "->" + t.target +
                             " path does not run between the critical points");
    }
}

MorseComplex morse_complex(const CwModel& m, const Representation& rep, const MorseData& md)
{
    rep.check_shapes(m);
    check_morse_structure(m, md);

    MorseComplex out;
    out.fiber_dim = rep.fiber_dim;
    int top = std::max(md.max_index(), 0);
    out.points_by_degree.assign(top + 1, {});
    for (int i = 0; i < int(md.points.size()); ++i)
        out.points_by_degree[md.points[i].index].push_back(i);
    for (int deg = 0; deg <= top; ++deg)
        for (int pos = 0; pos < int(out.points_by_degree[deg].size()); ++pos)
            out.slot[md.points[out.points_by_degree[deg][pos]].name] = {deg, pos};

    int n = rep.fiber_dim;
    ChainComplex& c = out.complex;
    c.dims.resize(top + 1);
    c.d.resize(top + 1);
    for (int deg = 0; deg <= top; ++deg)
        c.dims[deg] = int(out.points_by_degree[deg].size()) * n;
    c.d[0] = QMat::zero(0, c.dims[0]);
    for (int deg = 1; deg <= top; ++deg)
        c.d[deg] = QMat::zero(c.dims[deg - 1], c.dims[deg]);

    for (const auto& t : md.trajectories) {
        auto [sd, si] = out.slot.at(t.source);
        auto [td, ti] = out.slot.at(t.target);
        QMat h = path_holonomy(m, rep, t.path) * Rat(t.sign);
        c.d[sd].add_block(ti * n, si * n, h);
    }

    for (int deg = 1; deg < top; ++deg) {
        if (!(c.d[deg] * c.d[deg + 1]).is_zero())
            throw MorseError("Morse boundary does not square to zero between degrees " +
                             std::to_string(deg + 1) + " and " + std::to_string(deg - 1));
    }
    return out;
}

ZMat critical_zero_chain(const CwModel& m, const MorseData& md)
{
    ZMat chain(m.vertices, 1);
    for (const auto& p : md.points)
        chain(p.vertex, 0) += (p.index % 2 == 0) ? 1 : -1;
    return chain;
}

static ZMat integral_d1(const CwModel& m)
{
    ZMat d1(m.vertices, int(m.edges.size()));
    for (int e = 0; e < int(m.edges.size()); ++e) {
        d1(m.edge_term(e), e) += 1;
        d1(m.edge_init(e), e) -= 1;
    }
    return d1;
}

Report validate_morse(const CwModel& m, const Representation& rep, const MorseData& md)
{
    Report rep_out;
    try {
        m.check_valid();
        rep.check_shapes(m);
        rep_out.add("model and representation shapes", true);
    } catch (const std::exception& e) {
        rep_out.add("model and representation shapes", false, e.what());
        return rep_out;
    }

    {
        std::string why;
        bool flat = is_flat(m, rep, &why);
        rep_out.add("flatness", flat, flat ? "" : why);
    }

    bool structure_ok = true;
    std::string structure_detail;
    try {
        check_morse_structure(m, md);
    } catch (const std::exception& e) {
        structure_ok = false;
        structure_detail = e.what();
    }
    rep_out.add("trajectory index adjacency and path endpoints", structure_ok, structure_detail);

    if (structure_ok && rep_out.ok()) {
        try {
            morse_complex(m, rep, md);
            rep_out.add("Morse boundary squares to zero", true);
        } catch (const std::exception& e) {
            rep_out.add("Morse boundary squares to zero", false, e.what());
        }
    }

    if (md.has_cf) {
        bool ok = int(md.c_f.size()) == int(m.edges.size());
        std::string detail;
        if (!ok) {
            detail = "c_f length differs from edge count";
        } else {
            ZMat d1 = integral_d1(m);
            ZMat cf(int(m.edges.size()), 1);
            for (int e = 0; e < int(m.edges.size()); ++e)
                cf(e, 0) = md.c_f[e];
            ZMat lhs = d1 * cf;
            ZMat rhs = critical_zero_chain(m, md);
            ok = lhs == rhs;
            if (!ok) {
                std::ostringstream os;
                os << "boundary of c_f differs from the signed critical 0-chain at vertices:";
                for (int v = 0; v < m.vertices; ++v)
                    if (lhs(v, 0) != rhs(v, 0))
                        os << " " << v;
                detail = os.str();
            }
        }
        rep_out.add("c_f boundary condition", ok, detail);
    }
    return rep_out;
}

std::vector<Int> solve_cf(const CwModel& m, const MorseData& md)
{
    ZMat d1 = integral_d1(m);
    ZMat target = critical_zero_chain(m, md);
    auto x = solve_integer(d1, target);
    if (!x) {
        Int total = 0;
        for (int v = 0; v < m.vertices; ++v)
            total += target(v, 0);
        std::string hint = (total != 0)
                               ? " (signed critical-point count is " + total.get_str() +
                                     ", nonzero, so no integral 1-chain can bound it)"
                               : " (the signed critical 0-chain is not an integral boundary)";
        throw MorseError("no integral c_f exists" + hint);
    }
    std::vector<Int> cf(m.edges.size());
    for (int e = 0; e < int(m.edges.size()); ++e)
        cf[e] = (*x)(e, 0);
    return cf;
}

} // namespace dinv
