#pragma once

#include "rectdual/error.hpp"
#include "rectdual/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rectdual {

struct Rect {
    Rat x, y, w, h;
    Rat x2() const { return x + w; }
    Rat y2() const { return y + h; }
};

/// A rectangular layout with exact rational coordinates. Rectangles are keyed
/// by id; the map keeps deterministic iteration order.
struct Layout {
    Rat W, H;
    std::map<std::string, Rect> rects;

    int n() const { return static_cast<int>(rects.size()); }
    const Rect &rect(const std::string &id) const
    {
        auto it = rects.find(id);
        if (it == rects.end())
            fail(Errc::IdMismatch, "no rectangle '" + id + "'");
        return it->second;
    }
};

/// A maximal inner segment. `neg` holds the rectangles on the smaller-coordinate
/// side (left of a vertical segment, below a horizontal one), ordered along the
/// segment; `pos` the other side.
struct MaxSegment {
    bool vertical;
    Rat coord, lo, hi;
    std::vector<std::string> neg, pos;
};

namespace detail {

inline void collect_segments(bool vertical, const Layout &l, std::vector<MaxSegment> &out)
{
    // (coord, lo, hi, id, negside)
    std::map<Rat, std::vector<std::tuple<Rat, Rat, std::string, bool>>> at;
    Rat limit = vertical ? l.W : l.H;
    for (auto &[id, r] : l.rects) {
        Rat c1 = vertical ? r.x : r.y;
        Rat c2 = vertical ? r.x2() : r.y2();
        Rat lo = vertical ? r.y : r.x;
        Rat hi = vertical ? r.y2() : r.x2();
        if (c2 != limit)
            at[c2].emplace_back(lo, hi, id, true); // right/top side faces positive dir
        if (c1 != 0)
            at[c1].emplace_back(lo, hi, id, false);
    }
    for (auto &[coord, items] : at) {
        std::sort(items.begin(), items.end());
        size_t i = 0;
        while (i < items.size()) {
            MaxSegment s;
            s.vertical = vertical;
            s.coord = coord;
            s.lo = std::get<0>(items[i]);
            s.hi = std::get<1>(items[i]);
            std::vector<std::tuple<Rat, std::string, bool>> members;
            members.emplace_back(std::get<0>(items[i]), std::get<2>(items[i]),
                                 std::get<3>(items[i]));
            size_t j = i + 1;
            while (j < items.size() && std::get<0>(items[j]) <= s.hi) {
                s.hi = std::max(s.hi, std::get<1>(items[j]));
                members.emplace_back(std::get<0>(items[j]), std::get<2>(items[j]),
                                     std::get<3>(items[j]));
                ++j;
            }
            std::sort(members.begin(), members.end());
            for (auto &[lo, id, negside] : members)
                (negside ? s.neg : s.pos).push_back(id);
            out.push_back(std::move(s));
            i = j;
        }
    }
}

} // namespace detail

/// Maximal segments, vertical ones first, each list sorted by (coord, lo).
inline std::vector<MaxSegment> compute_segments(const Layout &l)
{
    std::vector<MaxSegment> out;
    detail::collect_segments(true, l, out);
    detail::collect_segments(false, l, out);
    return out;
}

/// Structural validation: positive sizes, interior-disjoint, exact partition
/// of the bounding box, no four-rectangle junction, and n-1 maximal segments.
inline void validate_layout(const Layout &l)
{
    if (l.rects.empty())
        fail(Errc::InvalidLayout, "layout has no rectangles");
    if (l.W <= 0 || l.H <= 0)
        fail(Errc::InvalidLayout, "bounding box is degenerate");
    Rat area = 0;
    for (auto &[id, r] : l.rects) {
        if (r.w <= 0 || r.h <= 0)
            fail(Errc::InvalidLayout, "rectangle '" + id + "' is degenerate");
        if (r.x < 0 || r.y < 0 || r.x2() > l.W || r.y2() > l.H)
            fail(Errc::InvalidLayout, "rectangle '" + id + "' leaves the bounding box");
        area += r.w * r.h;
    }
    if (area != l.W * l.H)
        fail(Errc::InvalidLayout, "rectangles do not tile the bounding box");
    for (auto i = l.rects.begin(); i != l.rects.end(); ++i)
        for (auto j = std::next(i); j != l.rects.end(); ++j) {
            const Rect &a = i->second, &b = j->second;
            if (a.x < b.x2() && b.x < a.x2() && a.y < b.y2() && b.y < a.y2())
                fail(Errc::InvalidLayout,
                     "rectangles '" + i->first + "' and '" + j->first + "' overlap");
        }
    std::map<std::pair<Rat, Rat>, int> corners;
    for (auto &[id, r] : l.rects) {
        corners[{r.x, r.y}]++;
        corners[{r.x2(), r.y}]++;
        corners[{r.x, r.y2()}]++;
        corners[{r.x2(), r.y2()}]++;
    }
    for (auto &[p, cnt] : corners)
        if (cnt >= 4 && p.first > 0 && p.first < l.W && p.second > 0 && p.second < l.H)
            fail(Errc::InvalidLayout, "four rectangles meet in a single point");
    auto segs = compute_segments(l);
    if (static_cast<int>(segs.size()) != l.n() - 1)
        fail(Errc::InvalidLayout,
             "expected " + std::to_string(l.n() - 1) + " maximal segments, found " +
                 std::to_string(segs.size()));
}

struct OneSidedReport {
    bool one_sided;
    std::optional<MaxSegment> witness;
};

/// A layout is one-sided when every maximal segment is the full side of some
/// rectangle, i.e. has a single rectangle on at least one of its sides.
inline OneSidedReport is_one_sided(const Layout &l)
{
    for (auto &s : compute_segments(l))
        if (s.neg.size() > 1 && s.pos.size() > 1)
            return {false, s};
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// adjacency structure (the induced labeling, in geometric form)

struct GeoAdj {
    bool vertical;   // true: vertical contact (left-right neighbors)
    std::string src; // left or bottom rectangle
    bool operator==(const GeoAdj &o) const = default;
};

inline std::map<std::pair<std::string, std::string>, GeoAdj>
adjacency_labels(const Layout &l)
{
    std::map<std::pair<std::string, std::string>, GeoAdj> out;
    for (auto i = l.rects.begin(); i != l.rects.end(); ++i)
        for (auto j = l.rects.begin(); j != l.rects.end(); ++j) {
            if (i == j)
                continue;
            const Rect &a = i->second, &b = j->second;
            auto key = std::minmax(i->first, j->first);
            if (a.x2() == b.x && std::min(a.y2(), b.y2()) > std::max(a.y, b.y))
                out[{key.first, key.second}] = GeoAdj{true, i->first};
            if (a.y2() == b.y && std::min(a.x2(), b.x2()) > std::max(a.x, b.x))
                out[{key.first, key.second}] = GeoAdj{false, i->first};
        }
    return out;
}

/// Rectangles touching each bounding box side: left, top, right, bottom.
inline std::array<std::set<std::string>, 4> boundary_contacts(const Layout &l)
{
    std::array<std::set<std::string>, 4> out;
    for (auto &[id, r] : l.rects) {
        if (r.x == 0)
            out[0].insert(id);
        if (r.y2() == l.H)
            out[1].insert(id);
        if (r.x2() == l.W)
            out[2].insert(id);
        if (r.y == 0)
            out[3].insert(id);
    }
    return out;
}

/// Two layouts are equivalent when they induce the same labeling of the same
/// dual graph: identical adjacency pairs with identical orientations, and the
/// same rectangles on each bounding box side.
inline bool equivalent(const Layout &l1, const Layout &l2)
{
    auto keys = [](const Layout &l) {
        std::vector<std::string> k;
        for (auto &[id, r] : l.rects)
            k.push_back(id);
        return k;
    };
    if (keys(l1) != keys(l2))
        fail(Errc::IdMismatch, "layouts have different rectangle ids");
    return adjacency_labels(l1) == adjacency_labels(l2) &&
           boundary_contacts(l1) == boundary_contacts(l2);
}

// ---------------------------------------------------------------------------
// segment index and order-equivalence

enum : int { kBboxL = -1, kBboxR = -2, kBboxB = -3, kBboxT = -4 };

struct SegmentIndex {
    std::vector<MaxSegment> segs;
    // per rectangle: segment (or bbox code) carrying its left, right, bottom, top side
    std::map<std::string, std::array<int, 4>> side;
};

inline SegmentIndex segment_index(const Layout &l)
{
    SegmentIndex si;
    si.segs = compute_segments(l);
    auto locate = [&](bool vertical, const Rat &coord, const Rat &lo, const Rat &hi) {
        for (int i = 0; i < static_cast<int>(si.segs.size()); ++i) {
            const auto &s = si.segs[i];
            if (s.vertical == vertical && s.coord == coord && s.lo <= lo && hi <= s.hi)
                return i;
        }
        fail(Errc::InvalidLayout, "rectangle side lies on no maximal segment");
    };
    for (auto &[id, r] : l.rects) {
        std::array<int, 4> sd;
        sd[0] = r.x == 0 ? kBboxL : locate(true, r.x, r.y, r.y2());
        sd[1] = r.x2() == l.W ? kBboxR : locate(true, r.x2(), r.y, r.y2());
        sd[2] = r.y == 0 ? kBboxB : locate(false, r.y, r.x, r.x2());
        sd[3] = r.y2() == l.H ? kBboxT : locate(false, r.y2(), r.x, r.x2());
        si.side[id] = sd;
    }
    return si;
}

namespace detail {

inline std::vector<std::vector<char>> reachability(int nodes,
                                                   const std::vector<std::pair<int, int>> &edges)
{
    std::vector<std::vector<char>> reach(nodes, std::vector<char>(nodes, 0));
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges)
        adj[a].push_back(b);
    for (int s = 0; s < nodes; ++s) {
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (!reach[s][u]) {
                    reach[s][u] = 1;
                    stack.push_back(u);
                }
        }
    }
    return reach;
}

} // namespace detail

/// The id-induced correspondence between maximal segments of two layouts over
/// the same rectangles, or nullopt when no consistent correspondence exists.
inline std::optional<std::vector<int>> segment_correspondence(const SegmentIndex &a,
                                                              const SegmentIndex &b)
{
    if (a.segs.size() != b.segs.size() || a.side.size() != b.side.size())
        return std::nullopt;
    int m = static_cast<int>(a.segs.size());
    std::vector<int> map(m, INT32_MIN);
    // bounding-box sides must correspond to bounding-box sides
    for (auto &[id, sa] : a.side) {
        auto it = b.side.find(id);
        if (it == b.side.end())
            return std::nullopt;
        for (int k = 0; k < 4; ++k) {
            bool abox = sa[k] < 0, bbox = it->second[k] < 0;
            if (abox != bbox)
                return std::nullopt;
            if (abox && sa[k] != it->second[k])
                return std::nullopt;
        }
    }
    // each side incidence of a segment must name the same partner segment
    for (auto &[id, sa] : a.side) {
        const auto &sb = b.side.at(id);
        for (int k = 0; k < 4; ++k) {
            if (sa[k] < 0)
                continue;
            if (map[sa[k]] == INT32_MIN)
                map[sa[k]] = sb[k];
            else if (map[sa[k]] != sb[k])
                return std::nullopt;
        }
    }
    std::set<int> hit;
    for (int i = 0; i < m; ++i) {
        if (map[i] == INT32_MIN || map[i] < 0)
            return std::nullopt;
        if (a.segs[i].vertical != b.segs[map[i]].vertical)
            return std::nullopt;
        if (!hit.insert(map[i]).second)
            return std::nullopt;
    }
    return map;
}

/// Order-equivalence: the id-induced segment correspondence exists and
/// preserves both segment partial orders.
inline bool order_equivalent(const Layout &l1, const Layout &l2)
{
    for (auto &[id, r] : l1.rects)
        if (!l2.rects.count(id))
            fail(Errc::IdMismatch, "layouts have different rectangle ids");
    if (l1.rects.size() != l2.rects.size())
        fail(Errc::IdMismatch, "layouts have different rectangle ids");
    SegmentIndex a = segment_index(l1), b = segment_index(l2);
    auto corr = segment_correspondence(a, b);
    if (!corr)
        return false;
    int m = static_cast<int>(a.segs.size());
    // nodes: segments then the four bbox pseudo-nodes
    auto node = [&](int code) { return code >= 0 ? code : m + (-code - 1); };
    auto edges_of = [&](const SegmentIndex &si, bool remap) {
        std::vector<std::pair<int, int>> es;
        for (auto &[id, sd] : si.side) {
            int l = sd[0], r = sd[1], bo = sd[2], t = sd[3];
            if (remap) {
                l = l >= 0 ? (*corr)[l] : l;
                r = r >= 0 ? (*corr)[r] : r;
                bo = bo >= 0 ? (*corr)[bo] : bo;
                t = t >= 0 ? (*corr)[t] : t;
            }
            es.emplace_back(node(l), node(r));
            es.emplace_back(node(bo), node(t));
        }
        return es;
    };
    auto ra = detail::reachability(m + 4, edges_of(a, true));
    auto rb = detail::reachability(m + 4, edges_of(b, false));
    return ra == rb;
}

// ---------------------------------------------------------------------------
// transforms

inline Layout scaled(const Layout &l, const Rat &sx, const Rat &sy)
{
    Layout out;
    out.W = l.W * sx;
    out.H = l.H * sy;
    for (auto &[id, r] : l.rects)
        out.rects[id] = Rect{r.x * sx, r.y * sy, r.w * sx, r.h * sy};
    return out;
}

inline Layout transposed(const Layout &l)
{
    Layout out;
    out.W = l.H;
    out.H = l.W;
    for (auto &[id, r] : l.rects)
        out.rects[id] = Rect{r.y, r.x, r.h, r.w};
    return out;
}

/// Rotation by 90 degrees clockwise; the old bottom side becomes the left side.
inline Layout rotated_cw(const Layout &l)
{
    Layout out;
    out.W = l.H;
    out.H = l.W;
    for (auto &[id, r] : l.rects)
        out.rects[id] = Rect{r.y, l.W - r.x - r.w, r.h, r.w};
    return out;
}

} // namespace rectdual
