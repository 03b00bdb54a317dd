#include "dinv/cw_model.hpp"

#include <queue>
#include <stdexcept>

namespace dinv {

bool CwModel::path_composable(const PathWord& p) const
{
    if (p.base < 0 || p.base >= vertices)
        return false;
    int at = p.base;
    for (const PathStep& s : p.steps) {
        if (s.edge < 0 || s.edge >= int(edges.size()) || (s.dir != 1 && s.dir != -1))
            return false;
        if (step_start(s) != at)
            return false;
        at = step_end(s);
    }
    return true;
}

int CwModel::path_end(const PathWord& p) const
{
    if (!path_composable(p))
        throw std::invalid_argument("path not composable");
    int at = p.base;
    for (const PathStep& s : p.steps)
        at = step_end(s);
    return at;
}

void CwModel::check_valid() const
{
    if (vertices < 0)
        throw std::invalid_argument("model: negative vertex count");
    for (auto [a, b] : edges)
        if (a < 0 || a >= vertices || b < 0 || b >= vertices)
            throw std::invalid_argument("model: edge endpoint out of range");
    for (size_t f = 0; f < faces.size(); ++f) {
        if (!path_composable(faces[f]))
            throw std::invalid_argument("model: boundary word of face " + std::to_string(f) +
                                        " not composable");
        if (path_end(faces[f]) != faces[f].base)
            throw std::invalid_argument("model: boundary word of face " + std::to_string(f) +
                                        " not closed");
    }
    for (const auto& cell : cells3)
        for (auto& [f, coeff] : cell)
            if (f < 0 || f >= int(faces.size()))
                throw std::invalid_argument("model: 3-cell references missing face");
}

PathWord reversed(const CwModel& m, const PathWord& p)
{
    PathWord out;
    out.base = m.path_end(p);
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
        out.steps.push_back({it->edge, -it->dir});
    return out;
}

PathWord concatenated(const CwModel& m, const PathWord& p, const PathWord& q)
{
    if (m.path_end(p) != q.base)
        throw std::invalid_argument("paths not composable");
    PathWord out = p;
    out.steps.insert(out.steps.end(), q.steps.begin(), q.steps.end());
    return out;
}

PathWord connect_vertices(const CwModel& m, int from, int to)
{
    std::vector<int> prev_vertex(m.vertices, -1);
    std::vector<PathStep> prev_step(m.vertices);
    std::vector<bool> seen(m.vertices, false);
    std::queue<int> q;
    q.push(from);
    seen[from] = true;
    while (!q.empty() && !seen[to]) {
        int v = q.front();
        q.pop();
        for (int e = 0; e < int(m.edges.size()); ++e) {
            for (int dir : {1, -1}) {
                PathStep s{e, dir};
                if (m.step_start(s) != v || seen[m.step_end(s)])
                    continue;
                int w = m.step_end(s);
                seen[w] = true;
                prev_vertex[w] = v;
                prev_step[w] = s;
                q.push(w);
            }
        }
    }
    if (!seen[to])
        throw std::invalid_argument("vertices not connected in the 1-skeleton");
    std::vector<PathStep> rev;
    for (int v = to; v != from; v = prev_vertex[v])
        rev.push_back(prev_step[v]);
    PathWord out;
    out.base = from;
    out.steps.assign(rev.rbegin(), rev.rend());
    return out;
}

} // namespace dinv
