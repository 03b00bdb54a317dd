#include "dinv/invariant.hpp"

#include "dinv/lattice.hpp"

namespace dinv {

OneChain i_circle(const CwModel& m, const Representation& rep, const MorseData& md,
                  const MorseComplex& mc, const Propagator& g, const std::vector<Int>& c_f)
{
    if (int(c_f.size()) != int(m.edges.size()))
        throw std::invalid_argument("i_circle: c_f length mismatch");
    if (!verify_propagator(mc.complex, g).ok())
        throw std::invalid_argument("i_circle: g is not a propagator for the Morse complex");

    int n = rep.fiber_dim;
    Representation adj = adjoint_system(rep);
    OneChain chain = OneChain::zero(m, n * n);

    QMat vec_id = vec_matrix(QMat::identity(n));
    for (int e = 0; e < int(m.edges.size()); ++e)
        chain.coeff[e] -= vec_id * Rat(c_f[e]);

    for (const auto& t : md.trajectories) {
        auto [sd, si] = mc.slot.at(t.source);
        auto [td, ti] = mc.slot.at(t.target);
        QMat gblock = g.map(sd, mc.complex).block(si * n, ti * n, n, n);
        if (gblock.is_zero())
            continue;
        QMat k = gblock * path_holonomy(m, rep, t.path) * Rat(t.sign);
        if (sd % 2 == 0)
            k = -k;  // the (-1)^{ind+1} weight
        chain = chain + push_path(m, adj, t.path, vec_matrix(k));
    }

    QMat bdry = one_chain_boundary(m, adj, chain);
    if (!bdry.is_zero())
        throw CycleError(
            "invariant chain has nonzero twisted boundary; trajectory signs, holonomies or c_f "
            "are inconsistent");
    return chain;
}

std::vector<std::vector<Int>> integral_cycle_lattice(const CwModel& m)
{
    ZMat d1(m.vertices, int(m.edges.size()));
    for (int e = 0; e < int(m.edges.size()); ++e) {
        d1(m.edge_term(e), e) += 1;
        d1(m.edge_init(e), e) -= 1;
    }
    ZMat ker = integer_kernel(d1);
    std::vector<std::vector<Int>> cycles;
    for (int c = 0; c < ker.cols(); ++c) {
        std::vector<Int> v(m.edges.size());
        for (int e = 0; e < int(m.edges.size()); ++e)
            v[e] = ker(e, c);
        cycles.push_back(std::move(v));
    }
    return cycles;
}

DInvariant d_invariant(const Scenario& s)
{
    MorseComplex mc = morse_complex(s.model, s.rep, s.morse);
    Propagator g = contraction(mc.complex);
    std::vector<Int> cf = s.resolve_cf();
    return DInvariant{i_circle(s.model, s.rep, s.morse, mc, g, cf)};
}

DEqualResult d_equal(const CwModel& m, const Representation& rep, const OneChain& z1,
                     const OneChain& z2)
{
    Representation adj = adjoint_system(rep);
    if (!one_chain_boundary(m, adj, z1).is_zero() || !one_chain_boundary(m, adj, z2).is_zero())
        throw CycleError("d_equal: inputs must be twisted cycles");

    int n = rep.fiber_dim;
    ChainComplex tc = twisted_complex(m, adj);
    QMat d2 = tc.boundary(2);
    QMat diff = (z1 - z2).to_vector();

    // Lattice generators: every integral cellular 1-cycle with identity
    // coefficients (boundaries are absorbed, identity being parallel).
    QMat vec_id = vec_matrix(QMat::identity(n));
    auto cycles = integral_cycle_lattice(m);
    std::vector<QMat> lat;
    for (const auto& cyc : cycles) {
        QMat v(int(m.edges.size()) * n * n, 1);
        for (int e = 0; e < int(m.edges.size()); ++e)
            if (cyc[e] != 0)
                v.set_block(e * n * n, 0, vec_id * Rat(cyc[e]));
        lat.push_back(v);
    }

    // Quotient by im d2: rows of q span the left null space of d2, so
    // q v = 0 exactly characterizes membership in the image.
    QMat q = left_kernel(d2);

    std::vector<std::vector<Rat>> gens;
    for (const QMat& v : lat) {
        QMat qv = q * v;
        std::vector<Rat> col(qv.rows());
        for (int i = 0; i < qv.rows(); ++i)
            col[i] = qv(i, 0);
        gens.push_back(std::move(col));
    }
    QMat qd = q * diff;
    std::vector<Rat> target(qd.rows());
    for (int i = 0; i < qd.rows(); ++i)
        target[i] = qd(i, 0);

    DEqualResult out;
    auto coeffs = lattice_membership(gens, target);
    if (!coeffs)
        return out;

    QMat rem = diff;
    for (size_t i = 0; i < lat.size(); ++i)
        if ((*coeffs)[i] != 0)
            rem -= lat[i] * Rat((*coeffs)[i]);
    auto w = rank_and_solve(d2, rem).solution;
    if (!w)
        throw std::logic_error("d_equal: quotient projection inconsistent with solver");
    out.equal = true;
    out.witness_w = *w;
    out.lattice_coeffs = *coeffs;
    return out;
}

} // namespace dinv
