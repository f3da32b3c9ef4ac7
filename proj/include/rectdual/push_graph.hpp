#pragma once

#include "rectdual/layout.hpp"

namespace rectdual {

/// Directed graph on rectangles of two order-equivalent layouts with the same
/// bounding box: an edge u->v records that the maximal segment separating u
/// and v moved towards v in the second layout.
struct PushGraph {
    std::vector<std::string> nodes;
    std::map<std::string, int> idx;
    std::vector<std::pair<int, int>> edges;

    bool has_source_or_sink() const
    {
        int n = static_cast<int>(nodes.size());
        std::vector<int> indeg(n, 0), outdeg(n, 0);
        for (auto [a, b] : edges) {
            outdeg[a]++;
            indeg[b]++;
        }
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0 || outdeg[v] == 0)
                return true;
        return false;
    }
};

inline PushGraph build_push_graph(const Layout &l1, const Layout &l2)
{
    if (l1.W != l2.W || l1.H != l2.H)
        fail(Errc::NotComparable, "layouts have different bounding boxes");
    bool same = true;
    for (auto &[id, r] : l1.rects) {
        const Rect &o = l2.rect(id);
        if (!(r.x == o.x && r.y == o.y && r.w == o.w && r.h == o.h))
            same = false;
    }
    if (same)
        fail(Errc::NotComparable, "layouts are geometrically identical");
    SegmentIndex a = segment_index(l1), b = segment_index(l2);
    auto corr = segment_correspondence(a, b);
    if (!corr || !order_equivalent(l1, l2))
        fail(Errc::NotComparable, "layouts are not order-equivalent");

    PushGraph pg;
    for (auto &[id, r] : l1.rects) {
        pg.idx[id] = static_cast<int>(pg.nodes.size());
        pg.nodes.push_back(id);
    }
    for (size_t i = 0; i < a.segs.size(); ++i) {
        const MaxSegment &s = a.segs[i];
        Rat delta = b.segs[(*corr)[i]].coord - s.coord;
        if (delta == 0)
            continue;
        for (auto &u : s.neg)
            for (auto &v : s.pos) {
                const Rect &ru = l1.rect(u), &rv = l1.rect(v);
                Rat lo = s.vertical ? std::max(ru.y, rv.y) : std::max(ru.x, rv.x);
                Rat hi = s.vertical ? std::min(ru.y2(), rv.y2()) : std::min(ru.x2(), rv.x2());
                if (lo >= hi)
                    continue; // not adjacent across this segment
                if (delta > 0)
                    pg.edges.emplace_back(pg.idx[u], pg.idx[v]);
                else
                    pg.edges.emplace_back(pg.idx[v], pg.idx[u]);
            }
    }
    return pg;
}

} // namespace rectdual
