#include "support/builders.hpp"
#include "support/layouts.hpp"

#include "rectdual/lattice.hpp"
#include "rectdual/rel_layout.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rectdual;
using namespace testsup;

namespace {

RegularEdgeLabeling random_walk(const RegularEdgeLabeling &start, std::mt19937_64 &rng,
                                int steps)
{
    RegularEdgeLabeling cur = start;
    for (int i = 0; i < steps; ++i) {
        auto moves = available_moves(cur);
        if (moves.empty())
            break;
        auto &m = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
        cur = apply_move(cur, m.item, m.up);
    }
    return cur;
}

RegularEdgeLabeling extremal_random_order(RegularEdgeLabeling rel, bool up,
                                          std::mt19937_64 &rng,
                                          std::map<Item, int> *counts = nullptr)
{
    while (true) {
        std::vector<Move> dir;
        for (auto &m : available_moves(rel))
            if (m.up == up)
                dir.push_back(m);
        if (dir.empty())
            return rel;
        auto &m = dir[std::uniform_int_distribution<size_t>(0, dir.size() - 1)(rng)];
        rel = apply_move(rel, m.item, m.up);
        if (counts)
            (*counts)[m.item]++;
    }
}

size_t count_downsets(const FlipPoset &p)
{
    std::set<std::set<int>> seen;
    std::vector<std::set<int>> todo{{}};
    seen.insert({});
    while (!todo.empty()) {
        std::set<int> cur = todo.back();
        todo.pop_back();
        for (int e = 0; e < p.size(); ++e) {
            if (cur.count(e))
                continue;
            bool minimal = true;
            for (int j = 0; j < p.size() && minimal; ++j)
                if (j != e && p.leq[j][e] && !cur.count(j))
                    minimal = false;
            if (!minimal)
                continue;
            std::set<int> nxt = cur;
            nxt.insert(e);
            if (seen.insert(nxt).second)
                todo.push_back(nxt);
        }
    }
    return seen.size();
}

std::vector<ExtendedGraph> decomposed_hosts_from_layouts(int count, uint64_t seed, int max_n)
{
    LayoutGen gen(seed);
    std::vector<ExtendedGraph> out;
    while (static_cast<int>(out.size()) < count) {
        Layout l = gen.layout(3 + static_cast<int>(out.size()) % (max_n - 2));
        ExtendedGraph e = extended_graph_from_layout(l);
        if (!e.has_nontrivial_sep4)
            out.push_back(std::move(e));
    }
    return out;
}

} // namespace

TEST_CASE("single inner vertex has one labeling and an empty poset")
{
    auto exts = enumerate_corner_assignments(single_vertex());
    const auto &e = exts[0];
    CHECK(enumerate_rels(e).size() == 1);
    auto p = build_flip_poset(e);
    CHECK(p.size() == 0);
    CHECK(free_items(p.min_rel, p).empty());
}

TEST_CASE("two-rectangle graph: each corner assignment forces its labeling")
{
    // the horizontal and the vertical split are duals of the two different
    // corner assignments of the single-edge graph, one labeling each
    auto exts = enumerate_corner_assignments(single_edge());
    REQUIRE(exts.size() == 2);
    std::set<bool> orientations;
    for (const auto &e : exts) {
        auto rels = enumerate_rels(e);
        REQUIRE(rels.size() == 1);
        Layout l = layout_from_rel(rels[0]);
        orientations.insert(l.rects.begin()->second.w == l.W);
    }
    CHECK(orientations.size() == 2); // one split is horizontal, one vertical
}

TEST_CASE("windmill vertex flip rotates the pinwheel")
{
    Layout pw = pinwheel();
    ExtendedGraph host = extended_graph_from_layout(pw);
    auto rel = rel_from_layout(pw, host);
    auto moves = available_moves(rel);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].item.is_vertex);
    CHECK(host.g.ids[moves[0].item.a] == "X");
    auto flipped = apply_move(rel, moves[0].item, moves[0].up);
    Layout pw2 = layout_from_rel(flipped);
    CHECK(!equivalent(pw, pw2));
    CHECK(is_one_sided(pw2).one_sided);
    // flip then unflip is the identity
    auto back = apply_move(flipped, moves[0].item, !moves[0].up);
    CHECK(back.encode() == rel.encode());
    CHECK(enumerate_rels(host).size() == 2);
}

TEST_CASE("flip closure equals exhaustive labeling enumeration")
{
    for (auto tg : {single_edge(), triangle(), windmill()}) {
        for (const auto &e : enumerate_corner_assignments(tg)) {
            if (e.has_nontrivial_sep4)
                continue;
            auto bfs = enumerate_rels(e);
            auto all = all_rels_backtracking(e);
            REQUIRE(bfs.size() == all.size());
            for (size_t i = 0; i < bfs.size(); ++i)
                CHECK(bfs[i].encode() == all[i].encode());
        }
    }
}

TEST_CASE("lattice has a unique source and sink on random hosts")
{
    for (const auto &e : decomposed_hosts_from_layouts(10, 4242, 8)) {
        auto lg = enumerate_lattice(e);
        int sources = 0, sinks = 0;
        for (const auto &r : lg.rels) {
            int ups = 0, downs = 0;
            for (auto &m : available_moves(r))
                (m.up ? ups : downs)++;
            if (downs == 0)
                sources++;
            if (ups == 0)
                sinks++;
        }
        CHECK(sources == 1);
        CHECK(sinks == 1);
        // and the flip closure matches the constraint search
        auto all = all_rels_backtracking(e);
        CHECK(lg.rels.size() == all.size());
    }
}

TEST_CASE("extremal elements are independent of move order")
{
    std::mt19937_64 rng(31337);
    for (const auto &e : decomposed_hosts_from_layouts(6, 99, 8)) {
        auto rel = initial_rel(e);
        auto min_c = extremal_rel(rel, false), max_c = extremal_rel(rel, true);
        CHECK(extremal_rel(min_c, false).encode() == min_c.encode());
        CHECK(extremal_rel(max_c, true).encode() == max_c.encode());
        for (int t = 0; t < 8; ++t) {
            auto start = random_walk(rel, rng, 6);
            CHECK(extremal_random_order(start, false, rng).encode() == min_c.encode());
            CHECK(extremal_random_order(start, true, rng).encode() == max_c.encode());
        }
    }
}

TEST_CASE("flip counts are path independent")
{
    std::mt19937_64 rng(555);
    for (const auto &e : decomposed_hosts_from_layouts(6, 1234, 9)) {
        auto rel = initial_rel(e);
        for (int t = 0; t < 6; ++t) {
            auto target = random_walk(rel, rng, 5);
            auto counts = flip_counts(target);
            // an independent monotone path: random descent
            std::map<Item, int> counts2;
            extremal_random_order(target, false, rng, &counts2);
            for (auto &[item, c] : counts2)
                CHECK(counts[item] == c);
            size_t nonzero = 0;
            for (auto &[item, c] : counts)
                if (c)
                    nonzero++;
            CHECK(nonzero == counts2.size());
        }
    }
}

TEST_CASE("poset partitions biject with labelings")
{
    for (const auto &e : decomposed_hosts_from_layouts(10, 2024, 9)) {
        auto p = build_flip_poset(e);
        auto lg = enumerate_lattice(e);
        CHECK(count_downsets(p) == lg.rels.size());
        CHECK(p.min_rel.encode() == extremal_rel(initial_rel(e), false).encode());
        for (const auto &r : lg.rels) {
            auto part = partition_from_rel(r, p);
            auto back = rel_from_partition(part, p);
            CHECK(back.encode() == r.encode());
        }
        // minimum <-> empty lower set, maximum <-> full lower set
        CHECK(partition_from_rel(p.min_rel, p).lower.empty());
        CHECK(static_cast<int>(partition_from_rel(p.max_rel, p).lower.size()) == p.size());
    }
}

TEST_CASE("free items equal the items with available moves")
{
    for (const auto &e : decomposed_hosts_from_layouts(8, 909, 9)) {
        auto p = build_flip_poset(e);
        for (const auto &r : enumerate_rels(e)) {
            std::set<Item> avail;
            for (auto &m : available_moves(r))
                avail.insert(m.item);
            CHECK(free_items(r, p) == avail);
        }
    }
}

TEST_CASE("period-4 shift property of the flip order")
{
    for (const auto &e : decomposed_hosts_from_layouts(8, 62, 9)) {
        auto p = build_flip_poset(e);
        for (int i = 0; i < p.size(); ++i)
            for (int j = 0; j < p.size(); ++j) {
                auto [x, xi] = p.elems[i];
                auto [y, yj] = p.elems[j];
                if (!p.has(x, xi + 1) || !p.has(y, yj + 1))
                    continue;
                CHECK(static_cast<bool>(p.leq[i][j]) ==
                      static_cast<bool>(p.leq[p.at(x, xi + 1)][p.at(y, yj + 1)]));
            }
    }
}

TEST_CASE("flip counts are bounded by distance to the outer boundary")
{
    for (const auto &e : decomposed_hosts_from_layouts(8, 4444, 10)) {
        auto p = build_flip_poset(e);
        // flipping graph on all candidate items, connected within triangles
        auto items = item_candidates(e);
        std::map<Item, int> idx;
        for (size_t i = 0; i < items.size(); ++i)
            idx[items[i]] = static_cast<int>(i);
        std::vector<std::set<int>> adj(items.size());
        std::vector<int> dist(items.size(), -1);
        std::vector<int> queue;
        for (int f = 0; f < e.faces.face_count(); ++f) {
            if (f == e.faces.outer_face)
                continue;
            auto vs = e.faces.face_vertices(f);
            bool touches_exterior = false;
            std::vector<int> members;
            for (int v : vs) {
                if (e.exterior(v))
                    touches_exterior = true;
                else if (e.g.degree(v) == 4)
                    members.push_back(idx.at(Item::vertex(v)));
            }
            for (int k = 0; k < 3; ++k) {
                int a = vs[k], b = vs[(k + 1) % 3];
                if (!e.exterior(a) && !e.exterior(b) && e.g.degree(a) != 4 &&
                    e.g.degree(b) != 4)
                    members.push_back(idx.at(Item::edge(a, b)));
            }
            for (int m1 : members)
                for (int m2 : members)
                    if (m1 != m2)
                        adj[m1].insert(m2);
            if (touches_exterior)
                for (int m : members)
                    if (dist[m] == -1) {
                        dist[m] = 0;
                        queue.push_back(m);
                    }
        }
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int u : adj[queue[qi]])
                if (dist[u] == -1) {
                    dist[u] = dist[queue[qi]] + 1;
                    queue.push_back(u);
                }
        for (auto &[item, f] : p.fmax) {
            int d = dist[idx.at(item)];
            if (d >= 0)
                CHECK(f <= d + 1);
        }
    }
}
