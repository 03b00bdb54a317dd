#include "dinv/gluing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dinv {

namespace {

struct CellMaps {
    std::vector<int> vmap_b, emap_b, fmap_b;
    CwModel glued_model;
    Representation glued_rep;
};

// Glued model: part-a cells keep their ids, unpaired part-b cells are
// appended in part-b order. Deterministic, and documented in the file format.
CellMaps build_glued_model(const GluedScenario& gs)
{
    const CwModel& ma = gs.part_a.model;
    const CwModel& mb = gs.part_b.model;
    ma.check_valid();
    mb.check_valid();
    gs.part_a.rep.check_shapes(ma);
    gs.part_b.rep.check_shapes(mb);
    if (gs.part_a.rep.fiber_dim != gs.part_b.rep.fiber_dim)
        throw GlueError("parts have different fiber dimensions");

    CellMaps cm;
    cm.vmap_b.assign(mb.vertices, -1);
    cm.emap_b.assign(mb.edges.size(), -1);
    cm.fmap_b.assign(mb.faces.size(), -1);

    auto check_pair = [](const std::vector<std::pair<int, int>>& pairs, int na, int nb,
                         const char* what) {
        std::set<int> sa, sb;
        for (auto [a, b] : pairs) {
            if (a < 0 || a >= na || b < 0 || b >= nb)
                throw GlueError(std::string("pairing references missing ") + what);
            if (!sa.insert(a).second || !sb.insert(b).second)
                throw GlueError(std::string("pairing identifies a ") + what + " twice");
        }
    };
    check_pair(gs.pairing.vertices, ma.vertices, mb.vertices, "vertex");
    check_pair(gs.pairing.edges, int(ma.edges.size()), int(mb.edges.size()), "edge");
    check_pair(gs.pairing.faces, int(ma.faces.size()), int(mb.faces.size()), "face");

    for (auto [a, b] : gs.pairing.vertices)
        cm.vmap_b[b] = a;
    for (auto [a, b] : gs.pairing.edges) {
        int bi = mb.edge_init(b), bt = mb.edge_term(b);
        if (cm.vmap_b[bi] != ma.edge_init(a) || cm.vmap_b[bt] != ma.edge_term(a))
            throw GlueError("paired edges do not connect paired vertices");
        if (gs.part_a.rep.holonomy[a] != gs.part_b.rep.holonomy[b])
            throw GlueError("holonomy mismatch on identified cells: edge pair (" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
        cm.emap_b[b] = a;
    }

    CwModel& g = cm.glued_model;
    g.vertices = ma.vertices;
    for (int v = 0; v < mb.vertices; ++v)
        if (cm.vmap_b[v] < 0)
            cm.vmap_b[v] = g.vertices++;
    g.edges = ma.edges;
    Representation& grep = cm.glued_rep;
    grep.fiber_dim = gs.part_a.rep.fiber_dim;
    grep.holonomy = gs.part_a.rep.holonomy;
    for (int e = 0; e < int(mb.edges.size()); ++e) {
        if (cm.emap_b[e] >= 0)
            continue;
        cm.emap_b[e] = int(g.edges.size());
        g.edges.push_back({cm.vmap_b[mb.edge_init(e)], cm.vmap_b[mb.edge_term(e)]});
        grep.holonomy.push_back(gs.part_b.rep.holonomy[e]);
    }

    auto map_path_b = [&](const PathWord& p) {
        PathWord out;
        out.base = cm.vmap_b[p.base];
        for (const PathStep& s : p.steps)
            out.steps.push_back({cm.emap_b[s.edge], s.dir});
        return out;
    };

    for (auto [a, b] : gs.pairing.faces) {
        if (!(map_path_b(mb.faces[b]) == ma.faces[a]))
            throw GlueError("paired faces carry different boundary words");
        cm.fmap_b[b] = a;
    }
    g.faces = ma.faces;
    for (int f = 0; f < int(mb.faces.size()); ++f) {
        if (cm.fmap_b[f] >= 0)
            continue;
        cm.fmap_b[f] = int(g.faces.size());
        g.faces.push_back(map_path_b(mb.faces[f]));
    }
    // 3-cells are carried along; face references on the b side are remapped.
    g.cells3 = ma.cells3;
    for (const auto& cell : mb.cells3) {
        std::vector<std::pair<int, Int>> mapped;
        for (auto& [f, c] : cell)
            mapped.push_back({cm.fmap_b[f], c});
        g.cells3.push_back(mapped);
    }
    return cm;
}

PathWord map_path(const std::vector<int>& vmap, const std::vector<int>& emap, const PathWord& p)
{
    PathWord out;
    out.base = vmap[p.base];
    for (const PathStep& s : p.steps)
        out.steps.push_back({emap[s.edge], s.dir});
    return out;
}

void pad_complex(ChainComplex& c, size_t len)
{
    while (c.dims.size() < len) {
        c.dims.push_back(0);
        c.d.push_back(QMat::zero(c.dims[c.dims.size() - 2], 0));
    }
}

} // namespace

OneChain GlueResult::include_a(const OneChain& z) const
{
    OneChain out;
    out.fiber_dim = z.fiber_dim;
    out.coeff.assign(glued.model.edges.size(), QMat::zero(z.fiber_dim, 1));
    for (size_t e = 0; e < z.coeff.size(); ++e)
        out.coeff[emap_a[e]] += z.coeff[e];
    return out;
}

OneChain GlueResult::include_b(const OneChain& z) const
{
    OneChain out;
    out.fiber_dim = z.fiber_dim;
    out.coeff.assign(glued.model.edges.size(), QMat::zero(z.fiber_dim, 1));
    for (size_t e = 0; e < z.coeff.size(); ++e)
        out.coeff[emap_b[e]] += z.coeff[e];
    return out;
}

GlueResult glue(const GluedScenario& gs)
{
    CellMaps cm = build_glued_model(gs);

    GlueResult res;
    res.vmap_b = cm.vmap_b;
    res.emap_b = cm.emap_b;
    res.fmap_b = cm.fmap_b;
    res.vmap_a.resize(gs.part_a.model.vertices);
    res.emap_a.resize(gs.part_a.model.edges.size());
    res.fmap_a.resize(gs.part_a.model.faces.size());
    for (size_t i = 0; i < res.vmap_a.size(); ++i)
        res.vmap_a[i] = int(i);
    for (size_t i = 0; i < res.emap_a.size(); ++i)
        res.emap_a[i] = int(i);
    for (size_t i = 0; i < res.fmap_a.size(); ++i)
        res.fmap_a[i] = int(i);

    Scenario& g = res.glued;
    g.name = gs.name;
    g.model = cm.glued_model;
    g.rep = cm.glued_rep;

    std::set<std::string> names_a;
    for (const auto& p : gs.part_a.morse.points)
        names_a.insert(p.name);
    for (const auto& p : gs.part_b.morse.points)
        if (names_a.count(p.name))
            throw GlueError("critical point name '" + p.name + "' appears in both parts");

    for (const auto& p : gs.part_a.morse.points)
        g.morse.points.push_back(p);
    for (const auto& p : gs.part_b.morse.points)
        g.morse.points.push_back({p.name, p.index, cm.vmap_b[p.vertex]});

    for (const auto& t : gs.part_a.morse.trajectories)
        g.morse.trajectories.push_back(t);
    for (const auto& t : gs.part_b.morse.trajectories)
        g.morse.trajectories.push_back(
            {t.source, t.target, t.sign, map_path(cm.vmap_b, cm.emap_b, t.path)});
    for (const auto& t : gs.cross) {
        if (!gs.part_a.morse.find(t.source) || names_a.count(t.target))
            throw GlueError("cross trajectory does not run from part a to part b: " + t.source +
                            " -> " + t.target);
        if (!gs.part_b.morse.find(t.target))
            throw GlueError("cross trajectory targets missing critical point '" + t.target + "'");
        g.morse.trajectories.push_back(t);
    }

    std::vector<Int> ca = gs.part_a.resolve_cf();
    std::vector<Int> cb = gs.part_b.resolve_cf();
    g.morse.has_cf = true;
    g.morse.c_f.assign(g.model.edges.size(), Int(0));
    for (size_t e = 0; e < ca.size(); ++e)
        g.morse.c_f[res.emap_a[e]] += ca[e];
    for (size_t e = 0; e < cb.size(); ++e)
        g.morse.c_f[res.emap_b[e]] += cb[e];
    return res;
}

Scenario mirror_scenario(const Scenario& s)
{
    Scenario m = s;
    m.name = s.name + "_mirror";
    m.morse.points.clear();
    m.morse.trajectories.clear();
    for (const auto& p : s.morse.points)
        m.morse.points.push_back({p.name + "'", 3 - p.index, p.vertex});
    for (const auto& t : s.morse.trajectories)
        m.morse.trajectories.push_back(
            {t.target + "'", t.source + "'", t.sign, reversed(s.model, t.path)});
    if (s.morse.has_cf)
        for (auto& c : m.morse.c_f)
            c = -c;
    return m;
}

GluedScenario make_double(const Scenario& s)
{
    if (!s.boundary)
        throw GlueError("double: scenario has no designated boundary subcomplex");
    for (const auto& p : s.morse.points)
        if (p.index < 0 || p.index > 3)
            throw GlueError("double: Morse index out of range for mirroring");

    GluedScenario gs;
    gs.name = s.name + "_double";
    gs.part_a = s;
    gs.part_b = mirror_scenario(s);
    for (int v : s.boundary->vertices)
        gs.pairing.vertices.push_back({v, v});
    for (int e : s.boundary->edges)
        gs.pairing.edges.push_back({e, e});
    for (int f : s.boundary->faces)
        gs.pairing.faces.push_back({f, f});

    Report check = validate_morse(gs.part_b.model, gs.part_b.rep, gs.part_b.morse);
    if (!check.ok())
        throw GlueError("double: mirrored Morse data fails validation:\n" + check.to_text());

    // Cross trajectories from the interpolation d^ab = d^bb Y - Y d^aa, with
    // one jump entry per shared degree. Paths live in the glued model.
    CellMaps cm = build_glued_model(gs);
    MorseComplex mca = morse_complex(gs.part_a.model, gs.part_a.rep, gs.part_a.morse);
    MorseComplex mcb = morse_complex(gs.part_b.model, gs.part_b.rep, gs.part_b.morse);

    int top = std::max(mca.complex.top(), mcb.complex.top());
    for (int k = 1; k <= top; ++k) {
        if (mca.complex.dim(k) == 0 || mcb.complex.dim(k) == 0)
            continue;
        const CriticalPoint& ya = gs.part_a.morse.points[mca.points_by_degree[k][0]];
        const CriticalPoint& yb_orig = gs.part_b.morse.points[mcb.points_by_degree[k][0]];
        int yb_vertex = cm.vmap_b[yb_orig.vertex];
        PathWord w;
        try {
            w = connect_vertices(cm.glued_model, ya.vertex, yb_vertex);
        } catch (const std::invalid_argument&) {
            continue;  // parts not connected here, no flow lines cross
        }

        for (const auto& t : gs.part_b.morse.trajectories) {
            if (t.source != yb_orig.name)
                continue;
            PathWord tp = map_path(cm.vmap_b, cm.emap_b, t.path);
            gs.cross.push_back(
                {ya.name, t.target, t.sign, concatenated(cm.glued_model, w, tp)});
        }
        for (const auto& t : gs.part_a.morse.trajectories) {
            if (t.target != ya.name)
                continue;
            gs.cross.push_back(
                {t.source, yb_orig.name, -t.sign, concatenated(cm.glued_model, t.path, w)});
        }
    }
    return gs;
}

Report verify_gluing(const GluedScenario& gs)
{
    Report rep;

    GlueResult res;
    try {
        res = glue(gs);
    } catch (const std::exception& e) {
        rep.add("glue", false, e.what());
        return rep;
    }
    rep.add("glue", true);

    Report val = validate_morse(res.glued.model, res.glued.rep, res.glued.morse);
    rep.add("glued scenario validates", val.ok(), val.ok() ? "" : val.to_text());
    if (!val.ok())
        return rep;

    int n = res.glued.rep.fiber_dim;
    MorseComplex mca, mcb, mcg;
    try {
        mca = morse_complex(gs.part_a.model, gs.part_a.rep, gs.part_a.morse);
        mcb = morse_complex(gs.part_b.model, gs.part_b.rep, gs.part_b.morse);
        mcg = morse_complex(res.glued.model, res.glued.rep, res.glued.morse);
    } catch (const std::exception& e) {
        rep.add("part Morse complexes", false, e.what());
        return rep;
    }

    const std::pair<const char*, const MorseComplex*> parts[] = {
        {"part a", &mca}, {"part b", &mcb}, {"glued", &mcg}};
    for (auto [name, mc] : parts) {
        int bad = mc->complex.first_nonacyclic_degree();
        rep.add(std::string(name) + " Morse complex acyclic (V coefficients)", bad < 0,
                bad < 0 ? "" : "nonzero homology in degree " + std::to_string(bad));
    }
    if (!rep.ok())
        return rep;

    // Standing assumption of the gluing statement: the restriction of the
    // system to the identified boundary subcomplex is acyclic. The algebra
    // below only needs complex-level acyclicity, so failure is a warning.
    {
        CwModel sub;
        std::map<int, int> vsub;
        for (auto [a, b] : gs.pairing.vertices) {
            (void)b;
            vsub[a] = sub.vertices++;
        }
        Representation subrep;
        subrep.fiber_dim = n;
        std::map<int, int> esub;
        bool cells_ok = true;
        for (auto [a, b] : gs.pairing.edges) {
            (void)b;
            auto [vi, vt] = gs.part_a.model.edges[a];
            if (!vsub.count(vi) || !vsub.count(vt)) {
                cells_ok = false;
                break;
            }
            esub[a] = int(sub.edges.size());
            sub.edges.push_back({vsub[vi], vsub[vt]});
            subrep.holonomy.push_back(gs.part_a.rep.holonomy[a]);
        }
        if (cells_ok) {
            for (auto [a, b] : gs.pairing.faces) {
                (void)b;
                const PathWord& word = gs.part_a.model.faces[a];
                PathWord mapped;
                if (!vsub.count(word.base)) {
                    cells_ok = false;
                    break;
                }
                mapped.base = vsub[word.base];
                for (const PathStep& st : word.steps) {
                    if (!esub.count(st.edge)) {
                        cells_ok = false;
                        break;
                    }
                    mapped.steps.push_back({esub[st.edge], st.dir});
                }
                if (!cells_ok)
                    break;
                sub.faces.push_back(mapped);
            }
        }
        if (!cells_ok) {
            rep.warn("identified cells do not form a subcomplex; skipped the boundary "
                     "acyclicity check");
        } else if (!sub.edges.empty() || sub.vertices > 0) {
            auto betti = twisted_complex(sub, subrep).homology_dims();
            bool acyclic = true;
            for (int bdim : betti)
                acyclic = acyclic && bdim == 0;
            if (!acyclic)
                rep.warn("restriction of the system to the glued boundary is not acyclic");
        }
    }

    // Support condition on the part c-chains (kept away from the boundary).
    {
        std::set<int> bdry_a;
        if (gs.part_a.boundary)
            bdry_a.insert(gs.part_a.boundary->edges.begin(), gs.part_a.boundary->edges.end());
        for (auto [a, b] : gs.pairing.edges) {
            (void)b;
            bdry_a.insert(a);
        }
        std::vector<Int> ca = gs.part_a.resolve_cf();
        for (int e : bdry_a)
            if (e < int(ca.size()) && ca[e] != 0)
                rep.warn("c_f of part a meets the identified boundary at edge " +
                         std::to_string(e));
    }

    // Blocked decomposition; its total must be the glued Morse complex.
    BlockedComplex bc;
    bc.a = mca.complex;
    bc.b = mcb.complex;
    size_t len = std::max(bc.a.dims.size(), bc.b.dims.size());
    pad_complex(bc.a, len);
    pad_complex(bc.b, len);
    bc.cross.resize(len);
    for (int k = 0; k < int(len); ++k)
        bc.cross[k] = QMat::zero(bc.b.dim(k - 1), bc.a.dim(k));
    try {
        for (const auto& t : gs.cross) {
            auto [sd, si] = mca.slot.at(t.source);
            auto [td, ti] = mcb.slot.at(t.target);
            if (td != sd - 1)
                throw GlueError("cross trajectory degree mismatch");
            QMat h = path_holonomy(res.glued.model, res.glued.rep, t.path) * Rat(t.sign);
            bc.cross[sd].add_block(ti * n, si * n, h);
        }
        bc.check_valid();
        rep.add("blocked decomposition (d^ba = 0, anticommutation)", true);
    } catch (const std::exception& e) {
        rep.add("blocked decomposition (d^ba = 0, anticommutation)", false, e.what());
        return rep;
    }
    {
        ChainComplex total = bc.total();
        pad_complex(mcg.complex, total.dims.size());
        bool same = total.dims == mcg.complex.dims;
        for (int k = 1; same && k <= total.top(); ++k)
            same = total.d[k] == mcg.complex.d[k];
        rep.add("blocked total equals the glued Morse complex", same);
        if (!same)
            return rep;
    }

    Propagator ga = contraction(bc.a);
    Propagator gb = contraction(bc.b);
    Propagator gm = glue_propagator(bc, ga, gb);
    {
        PropagatorReport pr = verify_propagator(bc.total(), gm);
        std::string residuals;
        for (const auto& d : pr.degrees)
            if (!d.pass)
                residuals += "degree " + std::to_string(d.degree) + ": " + mat_str(d.residual) + " ";
        rep.add("glued propagator identity", pr.ok(), residuals);
        bool off_ok = true;
        std::string off_detail;
        std::vector<QMat> gab(len);
        for (int k = 0; k < int(len); ++k)
            gab[k] = gm.g[k].block(bc.a.dim(k), 0, bc.b.dim(k), bc.a.dim(k - 1));
        for (int k = 0; k < int(len); ++k) {
            QMat res = off_diagonal_residual(bc, ga, gb, gab, k);
            if (!res.is_zero()) {
                off_ok = false;
                off_detail += "degree " + std::to_string(k) + ": " + mat_str(res) + " ";
            }
        }
        rep.add("off-diagonal identity per degree", off_ok, off_detail);
    }

    // The three invariant chains and the gluing statement.
    std::vector<Int> ca = gs.part_a.resolve_cf();
    std::vector<Int> cb = gs.part_b.resolve_cf();
    OneChain ia, ib, im;
    try {
        ia = i_circle(gs.part_a.model, gs.part_a.rep, gs.part_a.morse, mca, ga, ca);
        rep.add("part a invariant chain is a cycle", true);
    } catch (const std::exception& e) {
        rep.add("part a invariant chain is a cycle", false, e.what());
        return rep;
    }
    try {
        ib = i_circle(gs.part_b.model, gs.part_b.rep, gs.part_b.morse, mcb, gb, cb);
        rep.add("part b invariant chain is a cycle", true);
    } catch (const std::exception& e) {
        rep.add("part b invariant chain is a cycle", false, e.what());
        return rep;
    }
    try {
        im = i_circle(res.glued.model, res.glued.rep, res.glued.morse, mcg, gm,
                      res.glued.morse.c_f);
        rep.add("glued invariant chain is a cycle", true);
    } catch (const std::exception& e) {
        rep.add("glued invariant chain is a cycle", false, e.what());
        return rep;
    }

    OneChain sum = res.include_a(ia) + res.include_b(ib);
    std::string diff_detail;
    if (!(im == sum)) {
        OneChain diff = im - sum;
        for (size_t e = 0; e < diff.coeff.size(); ++e)
            if (!diff.coeff[e].is_zero())
                diff_detail += "edge " + std::to_string(e) + ": " + mat_str(diff.coeff[e]) + " ";
    }
    rep.add("chain-level additivity I_M = iota_a I_a + iota_b I_b", im == sum, diff_detail);

    auto eq = d_equal(res.glued.model, res.glued.rep, im, sum);
    rep.add("class-level equality (gluing formula)", eq.equal);
    return rep;
}

} // namespace dinv
