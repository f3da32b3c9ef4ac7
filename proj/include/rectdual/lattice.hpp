#pragma once

#include "rectdual/rel.hpp"

#include <map>
#include <queue>
#include <set>

namespace rectdual {

/// A flippable item: a degree-four inner vertex, or an inner edge neither of
/// whose endpoints has degree four.
struct Item {
    bool is_vertex;
    int a, b; // vertex: (v, -1); edge: endpoints with a < b

    auto operator<=>(const Item &) const = default;

    static Item vertex(int v) { return Item{true, v, -1}; }
    static Item edge(int u, int v) { return Item{false, std::min(u, v), std::max(u, v)}; }

    std::string key(const PlanarGraph &g) const
    {
        if (is_vertex)
            return "v:" + g.ids[a];
        auto [x, y] = std::minmax(g.ids[a], g.ids[b]);
        return "e:" + x + "|" + y;
    }
};

struct Move {
    Item item;
    bool up;
};

namespace detail {

inline bool vertex_pattern_ok(const ExtendedGraph &h,
                              const std::vector<EdgeLabel> &labels, int v)
{
    int d = h.g.degree(v);
    auto cls = [&](int u) {
        const EdgeLabel &l = labels[h.eid(v, u)];
        if (l.color == Color::blue)
            return l.src == v ? kOutBlue : kInBlue;
        return l.src == v ? kOutRed : kInRed;
    };
    int changes = 0;
    for (int k = 0; k < d; ++k) {
        int c0 = cls(h.g.rot[v][k]);
        int c1 = cls(h.g.rot[v][(k + 1) % d]);
        if (c0 != c1) {
            ++changes;
            if ((c0 + 1) % 4 != c1)
                return false;
        }
    }
    return changes == 4;
}

inline int dart_class_of(const std::vector<EdgeLabel> &labels, const ExtendedGraph &h, int v,
                         int u)
{
    const EdgeLabel &l = labels[h.eid(v, u)];
    if (l.color == Color::blue)
        return l.src == v ? kOutBlue : kInBlue;
    return l.src == v ? kOutRed : kInRed;
}

/// Applies the recoloring of `item` to `labels` if the surrounding four-cycle
/// alternates; returns the move direction (true = upward) or nullopt.
inline std::optional<bool> try_flip(const RegularEdgeLabeling &rel, const Item &item,
                                    std::vector<EdgeLabel> &out_labels)
{
    const ExtendedGraph &h = *rel.host;
    const PlanarGraph &g = h.g;
    std::vector<int> cyc;     // surrounding four-cycle
    std::vector<int> spokes;  // edge ids to recolor
    if (item.is_vertex) {
        int v = item.a;
        if (g.degree(v) != 4)
            return std::nullopt;
        for (int u : g.rot[v]) {
            if (h.exterior(u))
                return std::nullopt; // exterior spokes are pinned
            cyc.push_back(u);
        }
        for (int u : cyc)
            spokes.push_back(h.eid(v, u));
    } else {
        int u = item.a, v = item.b;
        int f1 = h.faces.face_of_dart.at({u, v});
        int f2 = h.faces.face_of_dart.at({v, u});
        if (f1 == h.faces.outer_face || f2 == h.faces.outer_face)
            return std::nullopt;
        auto third = [&](int f) {
            for (auto &d : h.faces.faces[f])
                if (d.first != u && d.first != v)
                    return d.first;
            fail(Errc::Internal, "degenerate face");
        };
        cyc = {u, third(f1), v, third(f2)};
        spokes.push_back(h.eid(u, v));
    }
    // the four cycle edges must exist, be labeled, and alternate in color
    Color prev{};
    for (int k = 0; k < 4; ++k) {
        int a = cyc[k], b = cyc[(k + 1) % 4];
        if (!g.has_edge(a, b) || !h.is_labeled(a, b))
            return std::nullopt;
        Color c = rel.labels[h.eid(a, b)].color;
        if (k > 0 && c == prev)
            return std::nullopt;
        prev = c;
    }

    // affected vertices: spokes' endpoints
    std::set<int> affected;
    for (int eid : spokes) {
        auto [a, b] = h.ledges[eid];
        affected.insert(a);
        affected.insert(b);
    }
    // recolor, then pick the unique orientation set that keeps every affected
    // vertex pattern valid
    std::vector<EdgeLabel> cand(rel.labels);
    for (int eid : spokes)
        cand[eid].color = cand[eid].color == Color::blue ? Color::red : Color::blue;
    int nsp = static_cast<int>(spokes.size());
    std::optional<std::vector<EdgeLabel>> winner;
    for (int mask = 0; mask < (1 << nsp); ++mask) {
        std::vector<EdgeLabel> attempt(cand);
        for (int k = 0; k < nsp; ++k) {
            auto [a, b] = h.ledges[spokes[k]];
            attempt[spokes[k]].src = (mask >> k) & 1 ? a : b;
        }
        bool ok = true;
        for (int v : affected) {
            if (h.exterior(v))
                continue;
            if (!vertex_pattern_ok(h, attempt, v)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        if (winner)
            fail(Errc::Internal, "ambiguous orientation after recoloring");
        winner = std::move(attempt);
    }
    if (!winner)
        return std::nullopt;

    // direction: the dart class at every affected inner vertex shifts by one
    // position, counterclockwise (+1) for upward moves
    std::optional<int> shift;
    for (int eid : spokes) {
        auto [a, b] = h.ledges[eid];
        for (int v : {a, b}) {
            if (h.exterior(v))
                continue;
            int u = v == a ? b : a;
            int before = dart_class_of(rel.labels, h, v, u);
            int after = dart_class_of(*winner, h, v, u);
            int d = (after - before + 4) % 4;
            if (d != 1 && d != 3)
                fail(Errc::Internal, "dart class jumped two positions");
            if (shift && *shift != d)
                fail(Errc::Internal, "inconsistent boundary shift");
            shift = d;
        }
    }
    out_labels = std::move(*winner);
    return *shift == 1;
}

} // namespace detail

/// All flippable-item candidates of the host, sorted by item key.
inline std::vector<Item> item_candidates(const ExtendedGraph &h)
{
    std::vector<Item> out;
    for (int v = 0; v < h.g.n(); ++v)
        if (!h.exterior(v) && h.g.degree(v) == 4)
            out.push_back(Item::vertex(v));
    for (auto [u, v] : h.ledges)
        if (!h.exterior(u) && !h.exterior(v) && h.g.degree(u) != 4 && h.g.degree(v) != 4)
            out.push_back(Item::edge(u, v));
    std::sort(out.begin(), out.end(),
              [&](const Item &x, const Item &y) { return x.key(h.g) < y.key(h.g); });
    return out;
}

inline void require_decomposed(const ExtendedGraph &h)
{
    if (h.has_nontrivial_sep4)
        fail(Errc::NontrivialCycleHost,
             "host has a nontrivial separating four-cycle; decompose first");
}

/// Every available move of the labeling, classified upward/downward by the
/// boundary-shift rule, sorted by item key.
inline std::vector<Move> available_moves(const RegularEdgeLabeling &rel)
{
    require_decomposed(*rel.host);
    std::vector<Move> out;
    std::vector<EdgeLabel> scratch;
    for (const Item &it : item_candidates(*rel.host)) {
        auto dir = detail::try_flip(rel, it, scratch);
        if (dir)
            out.push_back(Move{it, *dir});
    }
    return out;
}

inline RegularEdgeLabeling apply_move(const RegularEdgeLabeling &rel, const Item &item,
                                      bool up)
{
    require_decomposed(*rel.host);
    std::vector<EdgeLabel> labels;
    auto dir = detail::try_flip(rel, item, labels);
    if (!dir || *dir != up)
        fail(Errc::IllegalMove, "item " + item.key(rel.host->g) +
                                    " has no such move in this labeling");
    RegularEdgeLabeling out;
    out.host = rel.host;
    out.labels = std::move(labels);
    if (auto bad = validate_rel(out))
        fail(Errc::Internal, "move produced an invalid labeling: " + *bad);
    return out;
}

/// Walks monotone moves in one direction until none remain; by distributivity
/// the result is the unique lattice minimum (down) or maximum (up).
inline RegularEdgeLabeling extremal_rel(RegularEdgeLabeling rel, bool up)
{
    while (true) {
        bool moved = false;
        for (const Move &m : available_moves(rel))
            if (m.up == up) {
                rel = apply_move(rel, m.item, up);
                moved = true;
                break;
            }
        if (!moved)
            return rel;
    }
}

/// Count of moves per item along a maximal descending path; by the
/// path-independence lemma this is f_x for the starting labeling.
inline std::map<Item, int> flip_counts(const RegularEdgeLabeling &rel)
{
    std::map<Item, int> counts;
    RegularEdgeLabeling cur = rel;
    while (true) {
        bool moved = false;
        for (const Move &m : available_moves(cur))
            if (!m.up) {
                cur = apply_move(cur, m.item, false);
                counts[m.item]++;
                moved = true;
                break;
            }
        if (!moved)
            return counts;
    }
}

/// The partial order on pairs (item, flip index). Relations come from the
/// per-triangle move chains (moves on items of one triangle are totally
/// ordered along every monotone path); `leq` is their transitive closure.
struct FlipPoset {
    const ExtendedGraph *host = nullptr;
    std::vector<std::pair<Item, int>> elems; // sorted by (item key, index)
    std::map<std::pair<Item, int>, int> index;
    std::vector<std::vector<char>> leq; // leq[i][j]: elems[i] <= elems[j]
    RegularEdgeLabeling min_rel, max_rel;
    std::map<Item, int> fmax;

    int size() const { return static_cast<int>(elems.size()); }
    bool has(const Item &x, int i) const { return index.count({x, i}) > 0; }
    int at(const Item &x, int i) const
    {
        auto it = index.find({x, i});
        if (it == index.end())
            fail(Errc::Internal, "pair not in poset");
        return it->second;
    }
};

inline FlipPoset build_flip_poset(const ExtendedGraph &h)
{
    require_decomposed(h);
    FlipPoset p;
    p.host = &h;
    RegularEdgeLabeling start = initial_rel(h);
    p.min_rel = extremal_rel(start, false);
    // climb once, recording the move sequence
    std::vector<Item> seq;
    RegularEdgeLabeling cur = p.min_rel;
    while (true) {
        bool moved = false;
        for (const Move &m : available_moves(cur))
            if (m.up) {
                cur = apply_move(cur, m.item, true);
                seq.push_back(m.item);
                moved = true;
                break;
            }
        if (!moved)
            break;
    }
    p.max_rel = cur;
    for (const Item &x : seq)
        p.fmax[x]++;

    for (const Item &x : item_candidates(h)) {
        auto it = p.fmax.find(x);
        int fx = it == p.fmax.end() ? 0 : it->second;
        for (int i = 0; i < fx; ++i) {
            p.index[{x, i}] = static_cast<int>(p.elems.size());
            p.elems.emplace_back(x, i);
        }
    }

    int n = p.size();
    p.leq.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        p.leq[i][i] = 1;

    // per-triangle chains: the subsequence of `seq` on the triangle's items
    std::vector<std::vector<int>> chains;
    for (int f = 0; f < h.faces.face_count(); ++f) {
        if (f == h.faces.outer_face)
            continue;
        auto vs = h.faces.face_vertices(f);
        std::set<Item> members;
        for (int v : vs)
            if (!h.exterior(v) && h.g.degree(v) == 4)
                members.insert(Item::vertex(v));
        for (int k = 0; k < 3; ++k) {
            int a = vs[k], b = vs[(k + 1) % 3];
            if (!h.exterior(a) && !h.exterior(b) && h.g.degree(a) != 4 &&
                h.g.degree(b) != 4)
                members.insert(Item::edge(a, b));
        }
        if (members.empty())
            continue;
        std::vector<int> chain;
        std::map<Item, int> cnt;
        for (const Item &x : seq)
            if (members.count(x))
                chain.push_back(p.at(x, cnt[x]++));
        chains.push_back(std::move(chain));
    }
    for (const auto &chain : chains)
        for (size_t k = 0; k + 1 < chain.size(); ++k)
            p.leq[chain[k]][chain[k + 1]] = 1;
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.leq[i][k])
                for (int j = 0; j < n; ++j)
                    if (p.leq[k][j])
                        p.leq[i][j] = 1;
    return p;
}

/// Downward-closed / upward-closed split of the poset representing a layout.
struct Partition {
    std::set<int> lower; // element indices in L; U is the complement
};

inline Partition partition_from_rel(const RegularEdgeLabeling &rel, const FlipPoset &p)
{
    auto counts = flip_counts(rel);
    Partition part;
    for (int i = 0; i < p.size(); ++i) {
        auto &[x, idx] = p.elems[i];
        auto it = counts.find(x);
        int fx = it == counts.end() ? 0 : it->second;
        if (idx < fx)
            part.lower.insert(i);
    }
    return part;
}

inline RegularEdgeLabeling rel_from_partition(const Partition &part, const FlipPoset &p)
{
    for (int i : part.lower)
        for (int j = 0; j < p.size(); ++j)
            if (p.leq[j][i] && !part.lower.count(j))
                fail(Errc::NotDownwardClosed,
                     "partition lower set is not downward closed");
    RegularEdgeLabeling cur = p.min_rel;
    std::map<Item, int> f;
    while (true) {
        bool moved = false;
        for (const Move &m : available_moves(cur)) {
            if (!m.up)
                continue;
            auto it = p.index.find({m.item, f[m.item]});
            if (it == p.index.end() || !part.lower.count(it->second))
                continue;
            cur = apply_move(cur, m.item, true);
            f[m.item]++;
            moved = true;
            break;
        }
        if (!moved)
            break;
    }
    for (int i = 0; i < p.size(); ++i) {
        auto &[x, idx] = p.elems[i];
        auto it = f.find(x);
        int fx = it == f.end() ? 0 : it->second;
        if (part.lower.count(i) != (idx < fx ? 1u : 0u))
            fail(Errc::Internal, "partition was not realized by upward moves");
    }
    return cur;
}

/// Items with an available move: some pair (x, f_x) is minimal in U or
/// (x, f_x - 1) is maximal in L.
inline std::set<Item> free_items(const RegularEdgeLabeling &rel, const FlipPoset &p)
{
    auto counts = flip_counts(rel);
    Partition part = partition_from_rel(rel, p);
    std::set<Item> out;
    std::set<Item> items;
    for (auto &[x, i] : p.elems)
        items.insert(x);
    for (const Item &x : items) {
        auto it = counts.find(x);
        int fx = it == counts.end() ? 0 : it->second;
        if (p.has(x, fx)) { // minimal element of U?
            int e = p.at(x, fx);
            bool minimal = !part.lower.count(e);
            for (int j = 0; minimal && j < p.size(); ++j)
                if (j != e && p.leq[j][e] && !part.lower.count(j))
                    minimal = false;
            if (minimal)
                out.insert(x);
        }
        if (fx > 0 && p.has(x, fx - 1)) { // maximal element of L?
            int e = p.at(x, fx - 1);
            bool maximal = part.lower.count(e) > 0;
            for (int j = 0; maximal && j < p.size(); ++j)
                if (j != e && p.leq[e][j] && part.lower.count(j))
                    maximal = false;
            if (maximal)
                out.insert(x);
        }
    }
    return out;
}

/// The full flip graph of a host: labelings sorted by canonical encoding plus
/// the upward move edges between them.
struct LatticeGraph {
    std::vector<RegularEdgeLabeling> rels;
    std::map<std::string, int> index;
    std::vector<std::tuple<int, int, Item>> up_edges; // (lower, upper, item)
};

inline LatticeGraph enumerate_lattice(const ExtendedGraph &h, size_t cap = 100000)
{
    require_decomposed(h);
    LatticeGraph lg;
    RegularEdgeLabeling start = initial_rel(h);
    std::map<std::string, RegularEdgeLabeling> seen;
    std::queue<std::string> todo;
    seen[start.encode()] = start;
    todo.push(start.encode());
    while (!todo.empty()) {
        RegularEdgeLabeling cur = seen.at(todo.front());
        todo.pop();
        for (const Move &m : available_moves(cur)) {
            RegularEdgeLabeling nxt = apply_move(cur, m.item, m.up);
            std::string enc = nxt.encode();
            if (!seen.count(enc)) {
                if (seen.size() >= cap)
                    fail(Errc::CapExceeded, "labeling enumeration cap exceeded");
                seen[enc] = nxt;
                todo.push(enc);
            }
        }
    }
    for (auto &[enc, rel] : seen) {
        lg.index[enc] = static_cast<int>(lg.rels.size());
        lg.rels.push_back(rel);
    }
    for (size_t i = 0; i < lg.rels.size(); ++i)
        for (const Move &m : available_moves(lg.rels[i]))
            if (m.up) {
                RegularEdgeLabeling nxt = apply_move(lg.rels[i], m.item, true);
                lg.up_edges.emplace_back(static_cast<int>(i), lg.index.at(nxt.encode()),
                                         m.item);
            }
    return lg;
}

/// All regular edge labelings of the host, canonically ordered.
inline std::vector<RegularEdgeLabeling> enumerate_rels(const ExtendedGraph &h,
                                                       size_t cap = 100000)
{
    return enumerate_lattice(h, cap).rels;
}

} // namespace rectdual
