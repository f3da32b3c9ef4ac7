#pragma once

#include "rectdual/layout.hpp"
#include "rectdual/rel.hpp"

#include <numeric>

namespace rectdual {

namespace detail {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

/// Longest-path layering of a DAG given by edges over nodes 0..n-1 restricted
/// to `used` nodes. Throws InvalidRel on a cycle. Returns (levels, source, sink).
inline std::vector<long long> layer_dag(int n, const std::vector<std::pair<int, int>> &edges,
                                        const std::vector<char> &used, int source, int sink)
{
    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        indeg[b]++;
    }
    std::vector<long long> level(n, 0);
    std::vector<int> stack;
    int used_count = 0;
    for (int v = 0; v < n; ++v) {
        if (!used[v])
            continue;
        ++used_count;
        if (indeg[v] == 0) {
            if (v != source)
                fail(Errc::InvalidRel, "segment order has a source besides the boundary");
            stack.push_back(v);
        }
    }
    int processed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++processed;
        for (int u : adj[v]) {
            level[u] = std::max(level[u], level[v] + 1);
            if (--indeg[u] == 0)
                stack.push_back(u);
        }
    }
    if (processed != used_count)
        fail(Errc::InvalidRel, "segment order graph contains a cycle");
    for (int v = 0; v < n; ++v)
        if (used[v] && v != sink && level[v] >= level[sink])
            fail(Errc::InvalidRel, "segment order has a sink besides the boundary");
    return level;
}

} // namespace detail

/// Constructs the rectangular dual of a regular edge labeling with compact
/// integer coordinates: rectangle sides sharing a maximal segment are merged
/// into one coordinate class and the two class DAGs are layered by longest
/// paths.
inline Layout layout_from_rel(const RegularEdgeLabeling &rel)
{
    const ExtendedGraph &h = *rel.host;
    int n = h.g.n();
    // side slots: L=0, R=1, B=2, T=3
    detail::Dsu dsu(4 * n);
    for (size_t i = 0; i < h.ledges.size(); ++i) {
        auto [u, v] = h.ledges[i];
        const EdgeLabel &lab = rel.labels[i];
        int s = lab.src, t = s == u ? v : u;
        if (lab.color == Color::blue)
            dsu.join(s * 4 + 1, t * 4 + 0);
        else
            dsu.join(s * 4 + 3, t * 4 + 2);
    }
    auto build_axis = [&](int slot_lo, int slot_hi, int src_slot, int snk_slot,
                          Color cross_color) {
        int source = dsu.find(src_slot), sink = dsu.find(snk_slot);
        std::vector<char> used(4 * n, 0);
        std::vector<std::pair<int, int>> edges;
        used[source] = used[sink] = 1;
        for (int v = 0; v < n; ++v) {
            if (h.exterior(v))
                continue;
            int a = dsu.find(v * 4 + slot_lo), b = dsu.find(v * 4 + slot_hi);
            used[a] = used[b] = 1;
            edges.emplace_back(a, b);
        }
        // each adjacency of the perpendicular color must have positive overlap
        // along this axis
        for (size_t i = 0; i < h.ledges.size(); ++i) {
            auto [u, v] = h.ledges[i];
            if (h.exterior(u) || h.exterior(v) || rel.labels[i].color != cross_color)
                continue;
            edges.emplace_back(dsu.find(u * 4 + slot_lo), dsu.find(v * 4 + slot_hi));
            edges.emplace_back(dsu.find(v * 4 + slot_lo), dsu.find(u * 4 + slot_hi));
        }
        auto level = detail::layer_dag(4 * n, edges, used, source, sink);
        return std::pair{level, sink};
    };
    auto [xlevel, xsink] = build_axis(0, 1, h.ext[0] * 4 + 1, h.ext[2] * 4 + 0, Color::red);
    auto [ylevel, ysink] = build_axis(2, 3, h.ext[3] * 4 + 3, h.ext[1] * 4 + 2, Color::blue);

    Layout l;
    l.W = Rat(xlevel[xsink]);
    l.H = Rat(ylevel[ysink]);
    for (int v = 0; v < n; ++v) {
        if (h.exterior(v))
            continue;
        long long x1 = xlevel[dsu.find(v * 4 + 0)], x2 = xlevel[dsu.find(v * 4 + 1)];
        long long y1 = ylevel[dsu.find(v * 4 + 2)], y2 = ylevel[dsu.find(v * 4 + 3)];
        l.rects[h.g.ids[v]] = Rect{Rat(x1), Rat(y1), Rat(x2 - x1), Rat(y2 - y1)};
    }
    validate_layout(l);
    return l;
}

/// Reads the labeling off a layout: vertical contacts become blue edges
/// directed left to right, horizontal contacts red edges directed bottom to
/// top. The layout's adjacency structure must match the host exactly.
inline RegularEdgeLabeling rel_from_layout(const Layout &l, const ExtendedGraph &host)
{
    auto adj = adjacency_labels(l);
    auto contacts = boundary_contacts(l);
    for (auto &[id, r] : l.rects) {
        auto it = host.g.index.find(id);
        if (it == host.g.index.end() || host.exterior(it->second))
            fail(Errc::IdMismatch, "rectangle '" + id + "' is not an inner vertex of the host");
    }
    if (static_cast<int>(l.rects.size()) != host.inner_count())
        fail(Errc::AdjacencyMismatch, "rectangle count differs from host inner vertex count");

    RegularEdgeLabeling rel;
    rel.host = &host;
    rel.labels.resize(host.ledges.size());
    size_t inner_used = 0;
    std::array<std::set<std::string>, 4> arc_used;
    for (size_t i = 0; i < host.ledges.size(); ++i) {
        auto [u, v] = host.ledges[i];
        bool ue = host.exterior(u), ve = host.exterior(v);
        if (!ue && !ve) {
            auto key = std::minmax(host.g.ids[u], host.g.ids[v]);
            auto it = adj.find({key.first, key.second});
            if (it == adj.end())
                fail(Errc::AdjacencyMismatch,
                     "host edge " + key.first + "-" + key.second + " has no contact in the layout");
            const GeoAdj &ga = it->second;
            int src = host.g.index_of(ga.src);
            rel.labels[i] = EdgeLabel{ga.vertical ? Color::blue : Color::red, src};
            ++inner_used;
        } else {
            int e = ue ? u : v;
            int x = ue ? v : u;
            int k = 0;
            while (host.ext[k] != e)
                ++k;
            if (!contacts[k].count(host.g.ids[x]))
                fail(Errc::AdjacencyMismatch, "rectangle '" + host.g.ids[x] +
                                                  "' does not touch the expected bounding box side");
            arc_used[k].insert(host.g.ids[x]);
            rel.labels[i] = *forced_label(host, u, v);
        }
    }
    if (inner_used != adj.size())
        fail(Errc::AdjacencyMismatch, "layout has contacts that are not host edges");
    for (int k = 0; k < 4; ++k)
        if (arc_used[k] != contacts[k])
            fail(Errc::AdjacencyMismatch, "bounding box contacts differ from host arcs");
    if (auto bad = validate_rel(rel))
        fail(Errc::InvalidRel, *bad);
    return rel;
}

/// The extended dual of a layout, built from geometry: one inner vertex per
/// rectangle plus the four exterior vertices, rotations read clockwise around
/// each rectangle.
inline ExtendedGraph extended_graph_from_layout(const Layout &l)
{
    validate_layout(l);
    PlanarGraph g;
    for (auto &[id, r] : l.rects)
        g.ids.push_back(id);
    std::array<std::string, 4> ext_names{"L", "T", "R", "B"};
    for (auto &nm : ext_names) {
        while (l.rects.count(nm))
            nm = "_" + nm;
        g.ids.push_back(nm);
    }
    int n_in = static_cast<int>(l.rects.size());
    std::array<int, 4> ext{n_in, n_in + 1, n_in + 2, n_in + 3};
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(g.ids.size()); ++i)
        idx[g.ids[i]] = i;

    auto contacts = boundary_contacts(l);
    g.rot.assign(g.ids.size(), {});
    // inner rectangles, clockwise: top neighbors left->right, right side
    // top->bottom, bottom right->left, left side bottom->top
    for (auto &[id, r] : l.rects) {
        std::vector<std::pair<Rat, int>> side;
        auto &rot = g.rot[idx[id]];
        // top
        if (r.y2() == l.H)
            rot.push_back(ext[1]);
        else {
            side.clear();
            for (auto &[qid, q] : l.rects)
                if (q.y == r.y2() && std::min(q.x2(), r.x2()) > std::max(q.x, r.x))
                    side.emplace_back(q.x, idx[qid]);
            std::sort(side.begin(), side.end());
            for (auto &[c, v] : side)
                rot.push_back(v);
        }
        // right
        if (r.x2() == l.W)
            rot.push_back(ext[2]);
        else {
            side.clear();
            for (auto &[qid, q] : l.rects)
                if (q.x == r.x2() && std::min(q.y2(), r.y2()) > std::max(q.y, r.y))
                    side.emplace_back(q.y, idx[qid]);
            std::sort(side.rbegin(), side.rend());
            for (auto &[c, v] : side)
                rot.push_back(v);
        }
        // bottom
        if (r.y == 0)
            rot.push_back(ext[3]);
        else {
            side.clear();
            for (auto &[qid, q] : l.rects)
                if (q.y2() == r.y && std::min(q.x2(), r.x2()) > std::max(q.x, r.x))
                    side.emplace_back(q.x, idx[qid]);
            std::sort(side.rbegin(), side.rend());
            for (auto &[c, v] : side)
                rot.push_back(v);
        }
        // left
        if (r.x == 0)
            rot.push_back(ext[0]);
        else {
            side.clear();
            for (auto &[qid, q] : l.rects)
                if (q.x2() == r.x && std::min(q.y2(), r.y2()) > std::max(q.y, r.y))
                    side.emplace_back(q.y, idx[qid]);
            std::sort(side.begin(), side.end());
            for (auto &[c, v] : side)
                rot.push_back(v);
        }
    }
    // exterior vertices: [next exterior, arc in reverse walk order, previous]
    auto push_sorted = [&](int e, int k, bool descending) {
        std::vector<std::pair<Rat, int>> side;
        for (auto &id : contacts[k]) {
            const Rect &r = l.rects.at(id);
            Rat c = (k == 0 || k == 2) ? r.y : r.x;
            side.emplace_back(c, idx[id]);
        }
        if (descending)
            std::sort(side.rbegin(), side.rend());
        else
            std::sort(side.begin(), side.end());
        for (auto &[c, v] : side)
            g.rot[e].push_back(v);
    };
    // left: walk goes bottom->top, so clockwise rotation lists top->bottom
    g.rot[ext[0]].push_back(ext[1]);
    push_sorted(ext[0], 0, true);
    g.rot[ext[0]].push_back(ext[3]);
    // top: walk goes left->right, rotation lists right->left
    g.rot[ext[1]].push_back(ext[2]);
    push_sorted(ext[1], 1, true);
    g.rot[ext[1]].push_back(ext[0]);
    // right: walk goes top->bottom, rotation lists bottom->top
    g.rot[ext[2]].push_back(ext[3]);
    push_sorted(ext[2], 2, false);
    g.rot[ext[2]].push_back(ext[1]);
    // bottom: walk goes right->left, rotation lists left->right
    g.rot[ext[3]].push_back(ext[0]);
    push_sorted(ext[3], 3, false);
    g.rot[ext[3]].push_back(ext[2]);

    g.outer = {ext[0], ext[1], ext[2], ext[3]};
    return make_extended_graph(std::move(g), ext);
}

} // namespace rectdual
