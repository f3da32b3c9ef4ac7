#pragma once

#include "rectdual/extended_graph.hpp"

#include <optional>
#include <string>

namespace rectdual {

enum class Color : unsigned char { blue, red }; // blue = vertical adjacency (left->right)

struct EdgeLabel {
    Color color;
    int src; // tail vertex (full-graph index)
    bool operator==(const EdgeLabel &o) const = default;
};

/// Dart classes around a vertex, in clockwise order:
/// incoming blue, outgoing red, outgoing blue, incoming red.
enum : int { kInBlue = 0, kOutRed = 1, kOutBlue = 2, kInRed = 3 };

/// Regular edge labeling of an extended graph: a color and direction per
/// labeled edge (all edges except the exterior quadrangle).
struct RegularEdgeLabeling {
    const ExtendedGraph *host = nullptr;
    std::vector<EdgeLabel> labels; // parallel to host->ledges

    const EdgeLabel &label(int u, int v) const { return labels[host->eid(u, v)]; }

    int dart_class(int v, int u) const
    {
        const EdgeLabel &l = label(v, u);
        if (l.color == Color::blue)
            return l.src == v ? kOutBlue : kInBlue;
        return l.src == v ? kOutRed : kInRed;
    }

    /// Canonical encoding: one character per labeled edge in host edge order.
    std::string encode() const
    {
        std::string s(labels.size(), '?');
        for (size_t i = 0; i < labels.size(); ++i) {
            bool fwd = labels[i].src == host->ledges[i].first;
            s[i] = labels[i].color == Color::blue ? (fwd ? 'b' : 'B') : (fwd ? 'r' : 'R');
        }
        return s;
    }

    bool operator==(const RegularEdgeLabeling &o) const
    {
        return host == o.host && labels == o.labels;
    }
};

/// The exterior rule pins every edge incident to an exterior vertex:
/// left emits blue, top absorbs red, right absorbs blue, bottom emits red.
inline std::optional<EdgeLabel> forced_label(const ExtendedGraph &h, int u, int v)
{
    for (int k = 0; k < 4; ++k) {
        int e = h.ext[k];
        if (u != e && v != e)
            continue;
        int other = u == e ? v : u;
        switch (k) {
        case 0: return EdgeLabel{Color::blue, e};     // left: blue outgoing
        case 1: return EdgeLabel{Color::red, other};  // top: red incoming
        case 2: return EdgeLabel{Color::blue, other}; // right: blue incoming
        case 3: return EdgeLabel{Color::red, e};      // bottom: red outgoing
        }
    }
    return std::nullopt;
}

/// Checks both labeling invariants; returns a description of the first
/// violation, or nullopt when the labeling is regular.
inline std::optional<std::string> validate_rel(const RegularEdgeLabeling &rel)
{
    const ExtendedGraph &h = *rel.host;
    if (rel.labels.size() != h.ledges.size())
        return "label vector size mismatch";
    for (size_t i = 0; i < h.ledges.size(); ++i) {
        auto [u, v] = h.ledges[i];
        if (rel.labels[i].src != u && rel.labels[i].src != v)
            return "edge " + h.g.ids[u] + "-" + h.g.ids[v] + " directed at a non-endpoint";
        auto f = forced_label(h, u, v);
        if (f && !(rel.labels[i] == *f))
            return "exterior rule violated at edge " + h.g.ids[u] + "-" + h.g.ids[v];
    }
    for (int v = 0; v < h.g.n(); ++v) {
        if (h.exterior(v))
            continue;
        int d = h.g.degree(v);
        int changes = 0;
        bool bad = false;
        for (int k = 0; k < d; ++k) {
            int c0 = rel.dart_class(v, h.g.rot[v][k]);
            int c1 = rel.dart_class(v, h.g.rot[v][(k + 1) % d]);
            if (c0 != c1) {
                ++changes;
                if ((c0 + 1) % 4 != c1)
                    bad = true;
            }
        }
        if (bad || changes != 4)
            return "vertex " + h.g.ids[v] +
                   " does not have the four contiguous dart groups";
    }
    return std::nullopt;
}

namespace detail {

/// Backtracking search over per-vertex dart-class patterns. Every inner
/// vertex needs all four groups nonempty in clockwise order; edges shared
/// with already-fixed vertices and exterior-forced edges prune the domains.
struct RelSearch {
    const ExtendedGraph &h;
    std::vector<std::optional<EdgeLabel>> fixed; // per eid
    std::vector<int> order;                      // inner vertices, BFS order
    std::vector<RegularEdgeLabeling> found;
    size_t cap;
    bool stop_at_first;

    RelSearch(const ExtendedGraph &host, size_t cap_, bool first)
        : h(host), fixed(host.ledges.size()), cap(cap_), stop_at_first(first)
    {
        for (size_t i = 0; i < h.ledges.size(); ++i) {
            auto [u, v] = h.ledges[i];
            fixed[i] = forced_label(h, u, v);
        }
        // deterministic BFS over inner vertices from the lowest-id neighbor
        // of the left exterior vertex
        std::vector<int> seeds;
        for (int u : h.g.rot[h.ext[0]])
            if (!h.exterior(u))
                seeds.push_back(u);
        std::sort(seeds.begin(), seeds.end(),
                  [&](int a, int b) { return h.g.ids[a] < h.g.ids[b]; });
        std::vector<char> seen(h.g.n(), 0);
        std::vector<int> queue;
        if (!seeds.empty()) {
            queue.push_back(seeds[0]);
            seen[seeds[0]] = 1;
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            order.push_back(v);
            std::vector<int> nb;
            for (int u : h.g.rot[v])
                if (!h.exterior(u) && !seen[u])
                    nb.push_back(u);
            std::sort(nb.begin(), nb.end(),
                      [&](int a, int b) { return h.g.ids[a] < h.g.ids[b]; });
            for (int u : nb) {
                seen[u] = 1;
                queue.push_back(u);
            }
        }
    }

    static EdgeLabel label_for_class(int v, int u, int cls)
    {
        switch (cls) {
        case kInBlue: return {Color::blue, u};
        case kOutRed: return {Color::red, v};
        case kOutBlue: return {Color::blue, v};
        default: return {Color::red, u};
        }
    }

    bool search(size_t vi)
    {
        if (vi == order.size()) {
            RegularEdgeLabeling rel;
            rel.host = &h;
            rel.labels.resize(fixed.size());
            for (size_t i = 0; i < fixed.size(); ++i)
                rel.labels[i] = *fixed[i];
            found.push_back(std::move(rel));
            if (found.size() > cap)
                fail(Errc::CapExceeded, "regular edge labeling enumeration cap exceeded");
            return stop_at_first;
        }
        int v = order[vi];
        int d = h.g.degree(v);
        if (d < 4)
            fail(Errc::InvalidRel, "inner vertex " + h.g.ids[v] + " has degree < 4");
        // pattern: group of darts starting at `start`, sizes l0..l3 (>=1)
        for (int start = 0; start < d; ++start) {
            for (int l0 = 1; l0 <= d - 3; ++l0)
                for (int l1 = 1; l0 + l1 <= d - 2; ++l1)
                    for (int l2 = 1; l0 + l1 + l2 <= d - 1; ++l2) {
                        int l3 = d - l0 - l1 - l2;
                        std::vector<std::pair<int, EdgeLabel>> placed;
                        bool ok = true;
                        for (int k = 0; k < d && ok; ++k) {
                            int rel_pos = (k - start + d) % d;
                            int cls = rel_pos < l0             ? kInBlue
                                      : rel_pos < l0 + l1      ? kOutRed
                                      : rel_pos < l0 + l1 + l2 ? kOutBlue
                                                               : kInRed;
                            int u = h.g.rot[v][k];
                            EdgeLabel want = label_for_class(v, u, cls);
                            int eid = h.eid(v, u);
                            if (fixed[eid]) {
                                if (!(*fixed[eid] == want))
                                    ok = false;
                            } else {
                                fixed[eid] = want;
                                placed.emplace_back(eid, want);
                            }
                        }
                        if (ok && search(vi + 1))
                            return true;
                        for (auto &[eid, lab] : placed)
                            fixed[eid] = std::nullopt;
                    }
        }
        return false;
    }
};

} // namespace detail

/// Some valid regular edge labeling of the host (deterministic choice).
inline RegularEdgeLabeling initial_rel(const ExtendedGraph &host)
{
    detail::RelSearch s(host, 1, true);
    if (host.inner_count() == 0)
        fail(Errc::InvalidRel, "host has no inner vertices");
    s.search(0);
    if (s.found.empty())
        fail(Errc::InvalidRel, "host admits no regular edge labeling");
    auto rel = s.found.front();
    if (auto bad = validate_rel(rel))
        fail(Errc::Internal, "constructed labeling invalid: " + *bad);
    return rel;
}

/// Exhaustive enumeration of the host's regular edge labelings by constraint
/// search, independent of the flip machinery. Sorted by canonical encoding.
inline std::vector<RegularEdgeLabeling> all_rels_backtracking(const ExtendedGraph &host,
                                                              size_t cap = 100000)
{
    detail::RelSearch s(host, cap, false);
    s.search(0);
    std::sort(s.found.begin(), s.found.end(),
              [](const RegularEdgeLabeling &a, const RegularEdgeLabeling &b) {
                  return a.encode() < b.encode();
              });
    return s.found;
}

} // namespace rectdual
