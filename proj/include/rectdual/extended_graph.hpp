#pragma once

#include "rectdual/planar_graph.hpp"

#include <array>
#include <optional>
#include <set>

namespace rectdual {

/// Extended graph E(G): the input graph augmented with four exterior vertices
/// (left, top, right, bottom) so that all interior faces are triangles, the
/// outer face is the exterior quadrangle, and no separating triangles exist.
struct ExtendedGraph {
    PlanarGraph g;          // full graph, outer face = [left, top, right, bottom]
    FaceSet faces;          // faces of the full graph
    std::array<int, 4> ext; // exterior vertex indices: left, top, right, bottom
    std::vector<char> is_ext;

    // labeled edges: every edge except the four exterior boundary edges
    std::vector<std::pair<int, int>> ledges; // (u < v)
    std::unordered_map<long long, int> eid_of;

    bool has_nontrivial_sep4 = false;

    long long ekey(int u, int v) const
    {
        auto [a, b] = std::minmax(u, v);
        return static_cast<long long>(a) * g.n() + b;
    }
    int inner_count() const { return g.n() - 4; }
    bool exterior(int v) const { return is_ext[v] != 0; }
    int eid(int u, int v) const
    {
        auto it = eid_of.find(ekey(u, v));
        if (it == eid_of.end())
            fail(Errc::Internal, "edge not labeled: " + g.ids[u] + "-" + g.ids[v]);
        return it->second;
    }
    bool is_labeled(int u, int v) const { return eid_of.count(ekey(u, v)) > 0; }

    std::vector<int> inner_vertices() const
    {
        std::vector<int> out;
        for (int v = 0; v < g.n(); ++v)
            if (!exterior(v))
                out.push_back(v);
        return out;
    }

    /// Arc of exterior vertex k: its inner neighbors in outer-walk order
    /// (reverse of the clockwise rotation around the exterior vertex).
    std::vector<std::string> arc(int k) const
    {
        std::vector<std::string> out;
        for (int u : g.rot[ext[k]])
            if (!exterior(u))
                out.push_back(g.ids[u]);
        std::reverse(out.begin(), out.end());
        return out;
    }
};

// ---------------------------------------------------------------------------
// separating cycles

/// Flood fill over faces that does not cross the given wall edges. Returns a
/// flag per face: true when the face is NOT reachable from the outer face,
/// i.e. lies inside the wall cycle.
inline std::vector<char> faces_inside(const PlanarGraph &g, const FaceSet &fs,
                                      const std::vector<std::pair<int, int>> &wall_edges)
{
    std::set<std::pair<int, int>> wall;
    for (auto [u, v] : wall_edges) {
        wall.insert({u, v});
        wall.insert({v, u});
    }
    std::vector<char> reached(fs.face_count(), 0);
    std::vector<int> stack{fs.outer_face};
    reached[fs.outer_face] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (auto [u, v] : fs.faces[f]) {
            if (wall.count({u, v}))
                continue;
            int f2 = fs.face_of_dart.at({v, u});
            if (!reached[f2]) {
                reached[f2] = 1;
                stack.push_back(f2);
            }
        }
    }
    std::vector<char> inside(fs.face_count(), 0);
    for (int f = 0; f < fs.face_count(); ++f)
        inside[f] = !reached[f];
    return inside;
}

/// Counts vertices strictly inside / outside a simple cycle. Vertices on the
/// cycle are counted on neither side.
inline std::pair<int, int> cycle_side_counts(const PlanarGraph &g, const FaceSet &fs,
                                             const std::vector<int> &cycle)
{
    std::vector<std::pair<int, int>> wall;
    for (size_t i = 0; i < cycle.size(); ++i)
        wall.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    auto inside = faces_inside(g, fs, wall);
    std::vector<char> on_cycle(g.n(), 0);
    for (int v : cycle)
        on_cycle[v] = 1;
    int in = 0, out = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (on_cycle[v] || g.degree(v) == 0)
            continue;
        int f = fs.face_of_dart.at({v, g.rot[v][0]});
        (inside[f] ? in : out)++;
    }
    return {in, out};
}

/// All triangles (3-cliques) of the graph that do not bound an interior face.
/// In a valid extended graph this list is empty; on an arbitrary plane
/// triangulated graph a non-facial triangle always encloses vertices.
inline std::vector<std::array<int, 3>> separating_triangles(const PlanarGraph &g,
                                                            const FaceSet &fs)
{
    std::set<std::array<int, 3>> interior_faces;
    for (int f = 0; f < fs.face_count(); ++f) {
        if (f == fs.outer_face || fs.faces[f].size() != 3)
            continue;
        auto vs = fs.face_vertices(f);
        std::array<int, 3> key{vs[0], vs[1], vs[2]};
        std::sort(key.begin(), key.end());
        interior_faces.insert(key);
    }
    std::vector<std::array<int, 3>> out;
    for (auto [u, v] : g.edges()) {
        for (int w : g.rot[u]) {
            if (w <= v || !g.has_edge(v, w))
                continue;
            std::array<int, 3> key{u, v, w};
            if (!interior_faces.count(key))
                out.push_back(key);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct FourCycle {
    std::array<int, 4> cycle; // vertices in cyclic order
    int inside_count = 0;
    bool nontrivial = false; // inside_count > 1
};

inline std::array<int, 4> canonical_cycle4(std::array<int, 4> c)
{
    std::array<int, 4> best = c;
    for (int refl = 0; refl < 2; ++refl) {
        for (int s = 0; s < 4; ++s) {
            std::array<int, 4> cand{c[s], c[(s + 1) % 4], c[(s + 2) % 4], c[(s + 3) % 4]};
            if (cand < best)
                best = cand;
        }
        std::reverse(c.begin(), c.end());
    }
    return best;
}

/// All separating four-cycles, enumerated through common-neighbor pairs
/// (the K_{2,i} representation) and classified by an explicit face flood.
/// Exterior vertices may appear on the cycles.
inline std::vector<FourCycle> separating_four_cycles(const PlanarGraph &g, const FaceSet &fs)
{
    std::set<std::array<int, 4>> seen;
    std::vector<FourCycle> out;
    for (int u = 0; u < g.n(); ++u) {
        for (int w = u + 1; w < g.n(); ++w) {
            std::vector<int> common;
            for (int x : g.rot[u])
                if (x != w && g.has_edge(w, x))
                    common.push_back(x);
            if (common.size() < 2)
                continue;
            for (size_t i = 0; i < common.size(); ++i) {
                for (size_t j = i + 1; j < common.size(); ++j) {
                    std::array<int, 4> cyc{u, common[i], w, common[j]};
                    auto key = canonical_cycle4(cyc);
                    if (!seen.insert(key).second)
                        continue;
                    auto [in, outside] =
                        cycle_side_counts(g, fs, {key[0], key[1], key[2], key[3]});
                    if (in >= 1 && outside >= 1)
                        out.push_back(FourCycle{key, in, in > 1});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FourCycle &a, const FourCycle &b) { return a.cycle < b.cycle; });
    return out;
}

inline std::vector<FourCycle> find_separating_four_cycles(const ExtendedGraph &e)
{
    return separating_four_cycles(e.g, e.faces);
}

inline std::vector<std::array<int, 3>> find_separating_triangles(const ExtendedGraph &e)
{
    return separating_triangles(e.g, e.faces);
}

// ---------------------------------------------------------------------------
// corner assignment enumeration

namespace detail {

inline std::array<std::string, 4> exterior_ids(const PlanarGraph &inner)
{
    std::array<std::string, 4> names{"L", "T", "R", "B"};
    for (auto &nm : names)
        while (inner.index.count(nm))
            nm = "_" + nm;
    return names;
}

/// Assembles the full extended graph from the inner graph plus arcs given as
/// closed intervals of outer-walk positions. Returns nullopt when the result
/// is not a valid extended graph.
inline std::optional<ExtendedGraph> build_extension(const PlaneTriangulatedGraph &tg,
                                                    const std::array<int, 4> &q,
                                                    const std::array<int, 4> &gaps)
{
    const PlanarGraph &in = tg.g;
    int L = static_cast<int>(in.outer.size());
    auto names = exterior_ids(in);

    PlanarGraph full;
    full.ids = in.ids;
    for (auto &nm : names)
        full.ids.push_back(nm);
    int n_in = in.n();
    std::array<int, 4> ext{n_in, n_in + 1, n_in + 2, n_in + 3};

    // arc k as walk positions
    std::array<std::vector<int>, 4> arcpos;
    for (int k = 0; k < 4; ++k)
        for (int off = 0; off <= gaps[k]; ++off)
            arcpos[k].push_back((q[k] + off) % L);

    // reject arcs that revisit a vertex (would need parallel edges)
    for (int k = 0; k < 4; ++k) {
        std::set<int> vs;
        for (int p : arcpos[k])
            if (!vs.insert(in.outer[p]).second)
                return std::nullopt;
    }

    // covering arcs per walk position, arriving arc first
    std::vector<std::vector<int>> cover(L);
    {
        std::vector<int> arriving(L, -1);
        std::vector<std::vector<int>> starting(L);
        for (int k = 0; k < 4; ++k) {
            for (int off = 0; off <= gaps[k]; ++off) {
                int p = (q[k] + off) % L;
                if (off > 0) {
                    if (arriving[p] != -1)
                        return std::nullopt;
                    arriving[p] = k;
                } else {
                    starting[p].push_back(k);
                }
            }
        }
        for (int p = 0; p < L; ++p) {
            std::vector<int> &cv = cover[p];
            int base = arriving[p];
            if (base != -1)
                cv.push_back(base);
            std::sort(starting[p].begin(), starting[p].end(), [&](int a, int b) {
                int ra = base == -1 ? a : (a - base + 4) % 4;
                int rb = base == -1 ? b : (b - base + 4) % 4;
                return ra < rb;
            });
            for (int k : starting[p])
                cv.push_back(k);
        }
    }

    // rotations of exterior vertices: [next exterior, arc reversed, previous exterior]
    full.rot.assign(n_in + 4, {});
    for (int k = 0; k < 4; ++k) {
        auto &r = full.rot[ext[k]];
        r.push_back(ext[(k + 1) % 4]);
        for (auto it = arcpos[k].rbegin(); it != arcpos[k].rend(); ++it)
            r.push_back(in.outer[*it]);
        r.push_back(ext[(k + 3) % 4]);
    }

    // rotations of inner vertices: splice exterior neighbors into the outer gap
    // of each walk visit, right after the walk predecessor
    std::vector<std::vector<std::pair<int, std::vector<int>>>> inserts(n_in);
    for (int p = 0; p < L; ++p) {
        int w = in.outer[p];
        int pred = in.outer[(p - 1 + L) % L];
        std::vector<int> ins;
        for (int k : cover[p])
            ins.push_back(ext[k]);
        inserts[w].push_back({pred, ins});
    }
    for (int v = 0; v < n_in; ++v) {
        if (inserts[v].empty()) {
            full.rot[v] = in.rot[v];
            continue;
        }
        if (L == 1) { // single vertex, no inner edges
            full.rot[v] = inserts[v][0].second;
            continue;
        }
        std::vector<int> r;
        for (int u : in.rot[v]) {
            r.push_back(u);
            for (auto &[pred, ins] : inserts[v])
                if (pred == u)
                    for (int x : ins)
                        r.push_back(x);
        }
        full.rot[v] = std::move(r);
    }

    full.outer = {ext[0], ext[1], ext[2], ext[3]};

    try {
        full.finish();
    } catch (const Error &) {
        return std::nullopt;
    }
    if (!full.connected())
        return std::nullopt;

    FaceSet fs = trace_faces(full);
    if (fs.outer_face < 0)
        return std::nullopt;
    long long f = fs.face_count(), m = full.edge_count(), n = full.n();
    if (f != 2 - n + m)
        return std::nullopt;
    for (int fi = 0; fi < fs.face_count(); ++fi)
        if (fi != fs.outer_face && fs.faces[fi].size() != 3)
            return std::nullopt;
    if (!separating_triangles(full, fs).empty())
        return std::nullopt;
    // exterior vertices: exactly the boundary cycle between them
    for (int k = 0; k < 4; ++k)
        if (full.has_edge(ext[k], ext[(k + 2) % 4]))
            return std::nullopt;

    ExtendedGraph e;
    e.g = std::move(full);
    e.faces = std::move(fs);
    e.ext = ext;
    e.is_ext.assign(e.g.n(), 0);
    for (int k = 0; k < 4; ++k)
        e.is_ext[ext[k]] = 1;
    for (auto [u, v] : e.g.edges())
        if (!(e.is_ext[u] && e.is_ext[v])) {
            e.eid_of[{u, v}] = static_cast<int>(e.ledges.size());
            e.ledges.emplace_back(u, v);
        }
    for (const auto &c : separating_four_cycles(e.g, e.faces))
        if (c.nontrivial)
            e.has_nontrivial_sep4 = true;
    return e;
}

} // namespace detail

/// Assembles and validates an extended graph from the full rotation system
/// (used when reconstructing components and when loading files).
inline ExtendedGraph make_extended_graph(PlanarGraph full, const std::array<int, 4> &ext)
{
    full.finish();
    if (!full.connected())
        fail(Errc::Disconnected, "extended graph is not connected");
    FaceSet fs = trace_faces(full);
    if (fs.outer_face < 0)
        fail(Errc::BadOuterFace, "outer face must be the exterior quadrangle");
    if (fs.faces[fs.outer_face].size() != 4)
        fail(Errc::BadOuterFace, "outer face is not a quadrangle");
    long long f = fs.face_count(), m = full.edge_count(), n = full.n();
    if (f != 2 - n + m)
        fail(Errc::InconsistentRotation, "rotation system is not planar (Euler check failed)");
    for (int fi = 0; fi < fs.face_count(); ++fi)
        if (fi != fs.outer_face && fs.faces[fi].size() != 3)
            fail(Errc::NonTriangularFace,
                 "interior face (" + face_to_string(full, fs.face_vertices(fi)) + ")");
    auto tris = separating_triangles(full, fs);
    if (!tris.empty())
        fail(Errc::NonTriangularFace,
             "separating triangle (" + full.ids[tris[0][0]] + "," + full.ids[tris[0][1]] + "," +
                 full.ids[tris[0][2]] + ")");

    ExtendedGraph e;
    e.g = std::move(full);
    e.faces = std::move(fs);
    e.ext = ext;
    e.is_ext.assign(e.g.n(), 0);
    for (int k = 0; k < 4; ++k)
        e.is_ext[ext[k]] = 1;
    for (auto [u, v] : e.g.edges())
        if (!(e.is_ext[u] && e.is_ext[v])) {
            e.eid_of[{u, v}] = static_cast<int>(e.ledges.size());
            e.ledges.emplace_back(u, v);
        }
    for (const auto &c : separating_four_cycles(e.g, e.faces))
        if (c.nontrivial)
            e.has_nontrivial_sep4 = true;
    return e;
}

/// All valid corner assignments of a plane triangulated graph, in
/// lexicographic order of the four arc boundary positions on the outer walk.
/// An empty result means the graph is not proper.
inline std::vector<ExtendedGraph> enumerate_corner_assignments(const PlaneTriangulatedGraph &tg)
{
    std::vector<ExtendedGraph> out;
    int L = static_cast<int>(tg.g.outer.size());
    if (tg.g.n() == 1 || L == 0) {
        if (tg.g.n() == 1) {
            auto e = detail::build_extension(tg, {0, 0, 0, 0}, {0, 0, 0, 0});
            if (e)
                out.push_back(std::move(*e));
        }
        return out;
    }
    for (int q1 = 0; q1 < L; ++q1)
        for (int g1 = 0; g1 < L; ++g1)
            for (int g2 = 0; g2 + g1 < L; ++g2)
                for (int g3 = 0; g1 + g2 + g3 < L; ++g3) {
                    int g4 = L - g1 - g2 - g3;
                    if (g4 > L - 1)
                        continue;
                    std::array<int, 4> q{q1, (q1 + g1) % L, (q1 + g1 + g2) % L,
                                         (q1 + g1 + g2 + g3) % L};
                    auto e = detail::build_extension(tg, q, {g1, g2, g3, g4});
                    if (e)
                        out.push_back(std::move(*e));
                }
    return out;
}

} // namespace rectdual
