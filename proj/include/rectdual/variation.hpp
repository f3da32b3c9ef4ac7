#pragma once

#include "rectdual/layout.hpp"

#include <random>

namespace rectdual {

/// Rebuilds a layout from per-segment coordinates (bounding box sides map to
/// 0 and W/H). The coordinates must lie strictly inside the order polytope.
inline Layout layout_from_segment_coords(const Layout &base, const SegmentIndex &si,
                                         const std::vector<Rat> &coords, const Rat &W,
                                         const Rat &H)
{
    auto value = [&](int code, bool vertical) -> Rat {
        if (code >= 0)
            return coords[code];
        switch (code) {
        case kBboxL: return 0;
        case kBboxR: return W;
        case kBboxB: return 0;
        default: return H;
        }
    };
    Layout out;
    out.W = W;
    out.H = H;
    for (auto &[id, r] : base.rects) {
        const auto &sd = si.side.at(id);
        Rat x1 = value(sd[0], true), x2 = value(sd[1], true);
        Rat y1 = value(sd[2], false), y2 = value(sd[3], false);
        out.rects[id] = Rect{x1, y1, x2 - x1, y2 - y1};
    }
    return out;
}

/// Draws a random layout from the order polytope of `l` (same bounding box,
/// order-equivalent) by per-coordinate resampling. Retries on the measure-zero
/// degenerate draws that create four-rectangle junctions.
inline Layout sample_order_polytope(const Layout &l, std::mt19937_64 &rng, int passes = 2)
{
    SegmentIndex si = segment_index(l);
    int m = static_cast<int>(si.segs.size());
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rat> c(m);
        for (int i = 0; i < m; ++i)
            c[i] = si.segs[i].coord;
        auto coord_of = [&](int code, bool vertical) -> Rat {
            if (code >= 0)
                return c[code];
            return code == kBboxL || code == kBboxB ? Rat(0)
                                                    : (code == kBboxR ? l.W : l.H);
        };
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        for (int pass = 0; pass < passes; ++pass) {
            std::shuffle(order.begin(), order.end(), rng);
            for (int i : order) {
                Rat lb = 0, ub = si.segs[i].vertical ? l.W : l.H;
                int slot_lo = si.segs[i].vertical ? 0 : 2;
                for (auto &id : si.segs[i].neg)
                    lb = std::max(lb, coord_of(si.side.at(id)[slot_lo], si.segs[i].vertical));
                for (auto &id : si.segs[i].pos)
                    ub = std::min(ub, coord_of(si.side.at(id)[slot_lo + 1], si.segs[i].vertical));
                std::uniform_int_distribution<int> pick(1, 63);
                c[i] = lb + (ub - lb) * pick(rng) / 64;
            }
        }
        Layout cand = layout_from_segment_coords(l, si, c, l.W, l.H);
        try {
            validate_layout(cand);
            return cand;
        } catch (const Error &) {
            continue;
        }
    }
    fail(Errc::Internal, "could not sample the order polytope");
}

namespace detail {

/// Longest-path layering with arbitrary roots; nullopt on a cycle.
inline std::optional<std::vector<long long>>
layer_multi(int nodes, const std::vector<std::pair<int, int>> &edges)
{
    std::vector<std::vector<int>> adj(nodes);
    std::vector<int> indeg(nodes, 0);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        indeg[b]++;
    }
    std::vector<long long> level(nodes, 0);
    std::vector<int> stack;
    for (int v = 0; v < nodes; ++v)
        if (indeg[v] == 0)
            stack.push_back(v);
    int done = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++done;
        for (int u : adj[v]) {
            level[u] = std::max(level[u], level[v] + 1);
            if (--indeg[u] == 0)
                stack.push_back(u);
        }
    }
    if (done != nodes)
        return std::nullopt;
    return level;
}

/// Junctions of segment i: the perpendicular segments meeting its interior,
/// tagged with the side they come from (false = neg side).
inline std::vector<std::pair<int, bool>> junctions_of(const SegmentIndex &si, int i)
{
    std::vector<std::tuple<Rat, int, bool>> js;
    const MaxSegment &s = si.segs[i];
    int top_slot = s.vertical ? 3 : 1; // top side for vertical, right side for horizontal
    for (size_t k = 0; k + 1 < s.neg.size(); ++k)
        js.emplace_back(si.segs[si.side.at(s.neg[k])[top_slot]].coord,
                        si.side.at(s.neg[k])[top_slot], false);
    for (size_t k = 0; k + 1 < s.pos.size(); ++k)
        js.emplace_back(si.segs[si.side.at(s.pos[k])[top_slot]].coord,
                        si.side.at(s.pos[k])[top_slot], true);
    std::sort(js.begin(), js.end());
    std::vector<std::pair<int, bool>> out;
    for (auto &[c, idx, side] : js)
        out.emplace_back(idx, side);
    return out;
}

} // namespace detail

/// Constructs a layout that is order-equivalent but inequivalent to `l` by
/// sliding one pair of opposite-side junctions past each other along a
/// maximal segment that is not the side of any rectangle. Returns nullopt for
/// one-sided layouts (where no such variant exists).
inline std::optional<Layout> order_equivalent_inequivalent_variant(const Layout &l)
{
    SegmentIndex si = segment_index(l);
    int m = static_cast<int>(si.segs.size());
    auto node = [&](int code) { return code >= 0 ? code : m + (-code - 1); };

    for (int s = 0; s < m; ++s) {
        if (si.segs[s].neg.size() < 2 || si.segs[s].pos.size() < 2)
            continue;
        auto chain = detail::junctions_of(si, s);
        for (size_t p = 0; p + 1 < chain.size(); ++p) {
            if (chain[p].second == chain[p + 1].second)
                continue; // need junctions from opposite sides
            std::vector<std::pair<int, int>> edges;
            for (auto &[id, sd] : si.side) {
                edges.emplace_back(node(sd[0]), node(sd[1]));
                edges.emplace_back(node(sd[2]), node(sd[3]));
            }
            for (int t = 0; t < m; ++t) {
                auto ch = detail::junctions_of(si, t);
                if (t == s)
                    std::swap(ch[p], ch[p + 1]);
                for (size_t k = 0; k + 1 < ch.size(); ++k)
                    edges.emplace_back(node(ch[k].first), node(ch[k + 1].first));
            }
            auto levels = detail::layer_multi(m + 4, edges);
            if (!levels)
                continue;
            std::vector<Rat> coords(m);
            for (int i = 0; i < m; ++i)
                coords[i] = Rat((*levels)[i]);
            Layout cand = layout_from_segment_coords(l, si, coords, Rat((*levels)[node(kBboxR)]),
                                                     Rat((*levels)[node(kBboxT)]));
            try {
                validate_layout(cand);
            } catch (const Error &) {
                continue;
            }
            if (order_equivalent(l, cand) && !equivalent(l, cand))
                return cand;
        }
    }
    return std::nullopt;
}

} // namespace rectdual
