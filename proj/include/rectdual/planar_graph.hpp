#pragma once

#include "rectdual/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace rectdual {

/// A plane graph given by its rotation system: for every vertex the clockwise
/// cyclic order of its neighbors, plus the outer face walk (also clockwise).
/// Vertices are referenced by index internally and carry string ids.
struct PlanarGraph {
    std::vector<std::string> ids;
    std::unordered_map<std::string, int> index;
    std::vector<std::vector<int>> rot;                 // clockwise neighbor order
    std::vector<std::unordered_map<int, int>> pos_of;  // neighbor -> position in rot
    std::vector<int> outer;                            // outer face walk (vertex indices)

    int n() const { return static_cast<int>(ids.size()); }
    int degree(int v) const { return static_cast<int>(rot[v].size()); }
    bool has_edge(int u, int v) const { return pos_of[u].count(v) > 0; }
    const std::string &id(int v) const { return ids[v]; }

    int index_of(const std::string &id_) const
    {
        auto it = index.find(id_);
        if (it == index.end())
            fail(Errc::IdMismatch, "unknown vertex id '" + id_ + "'");
        return it->second;
    }

    int edge_count() const
    {
        int total = 0;
        for (const auto &r : rot)
            total += static_cast<int>(r.size());
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n(); ++u)
            for (int v : rot[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    void finish()
    {
        index.clear();
        for (int i = 0; i < n(); ++i) {
            if (!index.emplace(ids[i], i).second)
                fail(Errc::ParseError, "duplicate vertex id '" + ids[i] + "'");
        }
        pos_of.assign(n(), {});
        for (int v = 0; v < n(); ++v) {
            for (int k = 0; k < degree(v); ++k) {
                int u = rot[v][k];
                if (u == v)
                    fail(Errc::InconsistentRotation, "self-loop at '" + ids[v] + "'");
                if (u < 0 || u >= n())
                    fail(Errc::ParseError, "rotation entry out of range");
                if (!pos_of[v].emplace(u, k).second)
                    fail(Errc::InconsistentRotation,
                         "parallel edge '" + ids[v] + "'-'" + ids[u] + "'");
            }
        }
        for (int v = 0; v < n(); ++v)
            for (int u : rot[v])
                if (!pos_of[u].count(v))
                    fail(Errc::InconsistentRotation,
                         "edge '" + ids[v] + "'-'" + ids[u] + "' missing from rotation of '" +
                             ids[u] + "'");
    }

    bool connected() const
    {
        if (n() == 0)
            return false;
        std::vector<char> seen(n(), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : rot[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++cnt;
                    q.push(u);
                }
        }
        return cnt == n();
    }
};

/// Face structure traced from the rotation system. With clockwise rotations,
/// the dart following (u,v) inside a face is (v,w) where w comes right after u
/// in the rotation of v. Each face is recorded as its dart list.
struct FaceSet {
    std::vector<std::vector<std::pair<int, int>>> faces; // darts (u,v)
    std::map<std::pair<int, int>, int> face_of_dart;
    int outer_face = -1;

    int face_count() const { return static_cast<int>(faces.size()); }

    std::vector<int> face_vertices(int f) const
    {
        std::vector<int> vs;
        for (auto &d : faces[f])
            vs.push_back(d.first);
        return vs;
    }
};

inline bool cyclic_equal(const std::vector<int> &a, const std::vector<int> &b)
{
    if (a.size() != b.size())
        return false;
    size_t m = a.size();
    if (m == 0)
        return true;
    for (size_t shift = 0; shift < m; ++shift) {
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i)
            ok = a[i] == b[(i + shift) % m];
        if (ok)
            return true;
    }
    return false;
}

inline FaceSet trace_faces(const PlanarGraph &g)
{
    FaceSet fs;
    std::set<std::pair<int, int>> visited;
    for (int u = 0; u < g.n(); ++u) {
        for (int v : g.rot[u]) {
            if (visited.count({u, v}))
                continue;
            std::vector<std::pair<int, int>> face;
            int a = u, b = v;
            do {
                face.emplace_back(a, b);
                visited.insert({a, b});
                int p = g.pos_of[b].at(a);
                int w = g.rot[b][(p + 1) % g.degree(b)];
                a = b;
                b = w;
            } while (!(a == u && b == v));
            int f = fs.face_count();
            for (auto &d : face)
                fs.face_of_dart[d] = f;
            fs.faces.push_back(std::move(face));
        }
    }
    // locate the outer face by cyclic match against the declared outer walk
    std::vector<int> want = g.outer;
    for (int f = 0; f < fs.face_count(); ++f) {
        if (cyclic_equal(fs.face_vertices(f), want)) {
            fs.outer_face = f;
            break;
        }
    }
    return fs;
}

/// A validated plane triangulated graph: every face except the declared outer
/// one is a triangle. Degenerate one- and two-vertex graphs are accepted.
struct PlaneTriangulatedGraph {
    PlanarGraph g;
    FaceSet faces;
};

inline std::string face_to_string(const PlanarGraph &g, const std::vector<int> &vs)
{
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i)
        s += (i ? "," : "") + g.ids[vs[i]];
    return s;
}

inline PlanarGraph make_planar_graph(const std::vector<std::string> &ids,
                                     const std::map<std::string, std::vector<std::string>> &rotation,
                                     const std::vector<std::string> &outer_ids)
{
    PlanarGraph g;
    g.ids = ids;
    g.index.clear();
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        if (!g.index.emplace(ids[i], i).second)
            fail(Errc::ParseError, "duplicate vertex id '" + ids[i] + "'");
    g.rot.assign(ids.size(), {});
    for (auto &[id, nbrs] : rotation) {
        auto it = g.index.find(id);
        if (it == g.index.end())
            fail(Errc::ParseError, "rotation given for unknown vertex '" + id + "'");
        for (auto &nb : nbrs) {
            auto jt = g.index.find(nb);
            if (jt == g.index.end())
                fail(Errc::ParseError, "rotation of '" + id + "' refers to unknown '" + nb + "'");
            g.rot[it->second].push_back(jt->second);
        }
    }
    for (auto &oid : outer_ids) {
        auto it = g.index.find(oid);
        if (it == g.index.end())
            fail(Errc::ParseError, "outer face refers to unknown '" + oid + "'");
        g.outer.push_back(it->second);
    }
    g.finish();
    return g;
}

/// Validation gate for raw graph input. Checks rotation consistency,
/// connectivity, the Euler relation, and that all non-outer faces are
/// triangles. Throws Error naming the first violated invariant.
inline PlaneTriangulatedGraph validate_plane_triangulated(PlanarGraph g)
{
    if (g.n() == 0)
        fail(Errc::ParseError, "graph has no vertices");
    if (!g.connected())
        fail(Errc::Disconnected, "graph is not connected");
    if (g.n() == 1) {
        if (g.outer != std::vector<int>{0})
            fail(Errc::BadOuterFace, "single-vertex graph must have outer face [v]");
        return PlaneTriangulatedGraph{std::move(g), FaceSet{}};
    }
    FaceSet fs = trace_faces(g);
    if (fs.outer_face < 0)
        fail(Errc::BadOuterFace,
             "declared outer face does not match any traced face: " +
                 face_to_string(g, g.outer));
    long long f = fs.face_count(), m = g.edge_count(), n = g.n();
    if (f != 2 - n + m)
        fail(Errc::InconsistentRotation, "rotation system is not planar (Euler check failed)");
    for (int fi = 0; fi < fs.face_count(); ++fi) {
        if (fi == fs.outer_face)
            continue;
        if (fs.faces[fi].size() != 3)
            fail(Errc::NonTriangularFace,
                 "face (" + face_to_string(g, fs.face_vertices(fi)) + ") has " +
                     std::to_string(fs.faces[fi].size()) + " sides");
    }
    return PlaneTriangulatedGraph{std::move(g), std::move(fs)};
}

} // namespace rectdual
