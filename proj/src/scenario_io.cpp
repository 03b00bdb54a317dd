#include "dinv/scenario_io.hpp"

#include "dinv/linalg.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace dinv {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

Json matrix_to_json(const QMat& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(rat_str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

QMat matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty())
        throw IoError("matrix must be a nonempty array of rows");
    int rows = int(j.size());
    int cols = int(j[0].size());
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (int(j[i].size()) != cols)
            throw IoError("matrix rows have uneven lengths");
        for (int c = 0; c < cols; ++c)
            m(i, c) = rat_parse(j[i][c].get<std::string>());
    }
    return m;
}

Json path_to_json(const PathWord& p)
{
    Json steps = Json::array();
    for (const PathStep& s : p.steps)
        steps.push_back(Json::array({s.edge, s.dir}));
    return Json{{"base", p.base}, {"steps", steps}};
}

PathWord path_from_json(const Json& j)
{
    PathWord p;
    p.base = j.at("base").get<int>();
    for (const auto& s : j.at("steps")) {
        if (!s.is_array() || s.size() != 2)
            throw IoError("path step must be [edge, direction]");
        p.steps.push_back({s[0].get<int>(), s[1].get<int>()});
    }
    return p;
}

Json trajectory_to_json(const Trajectory& t)
{
    return Json{{"source", t.source}, {"target", t.target}, {"sign", t.sign},
                {"path", path_to_json(t.path)}};
}

Trajectory trajectory_from_json(const Json& j)
{
    return {j.at("source").get<std::string>(), j.at("target").get<std::string>(),
            j.at("sign").get<int>(), path_from_json(j.at("path"))};
}

Json scenario_to_json_obj(const Scenario& s)
{
    Json j;
    j["format"] = "dinv-scenario";
    j["name"] = s.name;
    j["seed"] = s.seed;

    Json model;
    model["vertices"] = s.model.vertices;
    Json edges = Json::array();
    for (auto [a, b] : s.model.edges)
        edges.push_back(Json::array({a, b}));
    model["edges"] = edges;
    Json faces = Json::array();
    for (const auto& f : s.model.faces)
        faces.push_back(path_to_json(f));
    model["faces"] = faces;
    Json cells3 = Json::array();
    for (const auto& cell : s.model.cells3) {
        Json c = Json::array();
        for (auto& [f, coeff] : cell)
            c.push_back(Json::array({f, coeff.get_str()}));
        cells3.push_back(c);
    }
    model["cells3"] = cells3;
    j["model"] = model;

    Json rep;
    rep["fiber_dim"] = s.rep.fiber_dim;
    Json hol = Json::array();
    for (const QMat& h : s.rep.holonomy)
        hol.push_back(matrix_to_json(h));
    rep["holonomy"] = hol;
    j["representation"] = rep;

    Json morse;
    Json pts = Json::array();
    for (const auto& p : s.morse.points)
        pts.push_back(Json{{"name", p.name}, {"index", p.index}, {"vertex", p.vertex}});
    morse["critical_points"] = pts;
    Json trs = Json::array();
    for (const auto& t : s.morse.trajectories)
        trs.push_back(trajectory_to_json(t));
    morse["trajectories"] = trs;
    if (s.morse.has_cf) {
        Json cf = Json::array();
        for (const Int& c : s.morse.c_f)
            cf.push_back(c.get_str());
        morse["c_f"] = cf;
    }
    j["morse"] = morse;

    if (s.boundary) {
        j["boundary"] = Json{{"vertices", s.boundary->vertices},
                             {"edges", s.boundary->edges},
                             {"faces", s.boundary->faces}};
    }
    return j;
}

Scenario scenario_from_json_obj(const Json& j)
{
    if (j.value("format", "") != "dinv-scenario")
        throw IoError("not a scenario file (format != dinv-scenario)");
    Scenario s;
    s.name = j.value("name", "");
    s.seed = j.value("seed", uint64_t(0));

    const Json& model = j.at("model");
    s.model.vertices = model.at("vertices").get<int>();
    for (const auto& e : model.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw IoError("edge must be [init, term]");
        s.model.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    for (const auto& f : model.at("faces"))
        s.model.faces.push_back(path_from_json(f));
    if (model.contains("cells3"))
        for (const auto& cell : model.at("cells3")) {
            std::vector<std::pair<int, Int>> c;
            for (const auto& fc : cell)
                c.push_back({fc[0].get<int>(), int_parse(fc[1].get<std::string>())});
            s.model.cells3.push_back(c);
        }

    const Json& rep = j.at("representation");
    s.rep.fiber_dim = rep.at("fiber_dim").get<int>();
    for (const auto& h : rep.at("holonomy"))
        s.rep.holonomy.push_back(matrix_from_json(h));

    const Json& morse = j.at("morse");
    for (const auto& p : morse.at("critical_points"))
        s.morse.points.push_back({p.at("name").get<std::string>(), p.at("index").get<int>(),
                                  p.at("vertex").get<int>()});
    for (const auto& t : morse.at("trajectories"))
        s.morse.trajectories.push_back(trajectory_from_json(t));
    if (morse.contains("c_f")) {
        s.morse.has_cf = true;
        for (const auto& c : morse.at("c_f"))
            s.morse.c_f.push_back(int_parse(c.get<std::string>()));
    }

    if (j.contains("boundary")) {
        BoundaryCells b;
        b.vertices = j["boundary"].value("vertices", std::vector<int>{});
        b.edges = j["boundary"].value("edges", std::vector<int>{});
        b.faces = j["boundary"].value("faces", std::vector<int>{});
        s.boundary = b;
    }
    return s;
}

// Semantic validation with the errors the loader contracts promise.
void check_scenario(const Scenario& s)
{
    try {
        s.model.check_valid();
    } catch (const std::exception& e) {
        throw IoError(e.what());
    }
    for (size_t f = 0; f < s.model.faces.size(); ++f)
        if (s.model.path_end(s.model.faces[f]) != s.model.faces[f].base)
            throw IoError("boundary word not closed: face " + std::to_string(f));
    if (int(s.rep.holonomy.size()) != int(s.model.edges.size()))
        throw IoError("representation must carry one holonomy per edge");
    for (size_t e = 0; e < s.rep.holonomy.size(); ++e) {
        const QMat& h = s.rep.holonomy[e];
        if (h.rows() != s.rep.fiber_dim || h.cols() != s.rep.fiber_dim)
            throw IoError("holonomy shape mismatch: edge " + std::to_string(e));
        if (!inverse(h))
            throw IoError("holonomy not invertible: edge " + std::to_string(e));
    }
    if (s.morse.has_cf && s.morse.c_f.size() != s.model.edges.size())
        throw IoError("c_f must carry one integer per edge");
    if (s.boundary) {
        for (int v : s.boundary->vertices)
            if (v < 0 || v >= s.model.vertices)
                throw IoError("boundary designation references missing vertex");
        for (int e : s.boundary->edges)
            if (e < 0 || e >= int(s.model.edges.size()))
                throw IoError("boundary designation references missing edge");
        for (int f : s.boundary->faces)
            if (f < 0 || f >= int(s.model.faces.size()))
                throw IoError("boundary designation references missing face");
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("parse error in " + path + ": " + e.what());
    }
    return j;
}

// Write-temp-then-rename; readers never observe a half-written file.
void write_file_atomic(const std::string& path, const std::string& content)
{
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw IoError("cannot write " + tmp.string());
        out << content;
        if (!out.good())
            throw IoError("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string resolve_relative(const std::string& base_file, const std::string& rel)
{
    fs::path p(rel);
    if (p.is_absolute())
        return rel;
    return (fs::path(base_file).parent_path() / p).string();
}

} // namespace

Scenario load_scenario(const std::string& path)
{
    Scenario s = scenario_from_json_obj(read_json_file(path));
    check_scenario(s);
    return s;
}

void save_scenario(const Scenario& s, const std::string& path)
{
    write_file_atomic(path, scenario_to_json_obj(s).dump(2) + "\n");
}

std::string scenario_to_json(const Scenario& s)
{
    return scenario_to_json_obj(s).dump(2) + "\n";
}

GluedScenario load_glued_scenario(const std::string& path)
{
    Json j = read_json_file(path);
    if (j.value("format", "") != "dinv-glued")
        throw IoError("not a glued-scenario file (format != dinv-glued)");
    GluedScenario gs;
    gs.name = j.value("name", "");
    gs.part_a = load_scenario(resolve_relative(path, j.at("part_a").get<std::string>()));
    gs.part_b = load_scenario(resolve_relative(path, j.at("part_b").get<std::string>()));
    auto read_pairs = [](const Json& arr) {
        std::vector<std::pair<int, int>> out;
        for (const auto& p : arr)
            out.push_back({p[0].get<int>(), p[1].get<int>()});
        return out;
    };
    const Json& pairing = j.at("pairing");
    gs.pairing.vertices = read_pairs(pairing.at("vertices"));
    gs.pairing.edges = read_pairs(pairing.at("edges"));
    gs.pairing.faces = read_pairs(pairing.at("faces"));
    for (const auto& t : j.at("cross_trajectories"))
        gs.cross.push_back(trajectory_from_json(t));
    return gs;
}

void save_glued_scenario(const GluedScenario& gs, const std::string& path,
                         const std::string& part_a_rel, const std::string& part_b_rel)
{
    Json j;
    j["format"] = "dinv-glued";
    j["name"] = gs.name;
    j["part_a"] = part_a_rel;
    j["part_b"] = part_b_rel;
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
        Json out = Json::array();
        for (auto [a, b] : v)
            out.push_back(Json::array({a, b}));
        return out;
    };
    j["pairing"] = Json{{"vertices", pairs(gs.pairing.vertices)},
                        {"edges", pairs(gs.pairing.edges)},
                        {"faces", pairs(gs.pairing.faces)}};
    Json cross = Json::array();
    for (const auto& t : gs.cross)
        cross.push_back(trajectory_to_json(t));
    j["cross_trajectories"] = cross;
    write_file_atomic(path, j.dump(2) + "\n");
}

ChainFile load_chain(const std::string& path)
{
    Json j = read_json_file(path);
    if (j.value("format", "") != "dinv-chain")
        throw IoError("not a chain file (format != dinv-chain)");
    ChainFile cf;
    cf.scenario_path = resolve_relative(path, j.at("scenario").get<std::string>());
    cf.scenario = load_scenario(cf.scenario_path);
    int n = cf.scenario.rep.fiber_dim;
    cf.chain.fiber_dim = n * n;
    const Json& coeffs = j.at("coefficients");
    if (int(coeffs.size()) != int(cf.scenario.model.edges.size()))
        throw IoError("chain must carry one coefficient matrix per edge");
    for (const auto& c : coeffs) {
        QMat m = matrix_from_json(c);
        if (m.rows() != n || m.cols() != n)
            throw IoError("chain coefficient is not an n x n matrix");
        cf.chain.coeff.push_back(vec_matrix(m));
    }
    return cf;
}

void save_chain(const OneChain& chain, const std::string& scenario_rel, const std::string& path)
{
    int n2 = chain.fiber_dim;
    int n = 1;
    while (n * n < n2)
        ++n;
    if (n * n != n2)
        throw IoError("chain fiber dimension is not a square");
    Json j;
    j["format"] = "dinv-chain";
    j["scenario"] = scenario_rel;
    Json coeffs = Json::array();
    for (const QMat& v : chain.coeff)
        coeffs.push_back(matrix_to_json(unvec_matrix(v, n)));
    j["coefficients"] = coeffs;
    write_file_atomic(path, j.dump(2) + "\n");
}

std::string report_to_json(const Report& r)
{
    Json j;
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["warnings"] = r.warnings;
    j["overall"] = r.ok() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

} // namespace dinv
