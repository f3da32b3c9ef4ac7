#include "support/builders.hpp"

#include "rectdual/rel.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace rectdual;
using namespace testsup;

TEST_CASE("single inner vertex has a unique forced labeling")
{
    auto exts = enumerate_corner_assignments(single_vertex());
    const auto &e = exts[0];
    auto rel = initial_rel(e);
    CHECK(!validate_rel(rel));
    auto all = all_rels_backtracking(e);
    REQUIRE(all.size() == 1);
    CHECK(all[0].encode() == rel.encode());
    // exterior rule: left edge is blue out of left, etc.
    int a = e.g.index_of("A");
    CHECK(rel.label(e.ext[0], a) == EdgeLabel{Color::blue, e.ext[0]});
    CHECK(rel.label(e.ext[1], a) == EdgeLabel{Color::red, a});
    CHECK(rel.label(e.ext[2], a) == EdgeLabel{Color::blue, a});
    CHECK(rel.label(e.ext[3], a) == EdgeLabel{Color::red, e.ext[3]});
}

TEST_CASE("every corner assignment of small hosts admits a labeling")
{
    for (auto tg : {single_edge(), triangle(), windmill(), two_in_ring()}) {
        for (const auto &e : enumerate_corner_assignments(tg)) {
            auto rel = initial_rel(e);
            CHECK(!validate_rel(rel));
        }
    }
}

TEST_CASE("flipping one edge color breaks validation")
{
    auto exts = enumerate_corner_assignments(windmill());
    REQUIRE(!exts.empty());
    const auto &e = exts[0];
    auto rel = initial_rel(e);
    // find an inner-inner edge and flip its color only
    for (size_t i = 0; i < e.ledges.size(); ++i) {
        auto [u, v] = e.ledges[i];
        if (e.exterior(u) || e.exterior(v))
            continue;
        auto broken = rel;
        broken.labels[i].color =
            broken.labels[i].color == Color::blue ? Color::red : Color::blue;
        auto violation = validate_rel(broken);
        REQUIRE(violation);
        CHECK(violation->find("four contiguous") != std::string::npos);
        break;
    }
}

TEST_CASE("reversing an exterior edge breaks the exterior rule")
{
    auto exts = enumerate_corner_assignments(single_vertex());
    const auto &e = exts[0];
    auto rel = initial_rel(e);
    auto broken = rel;
    int a = e.g.index_of("A");
    int eid = e.eid(e.ext[0], a);
    broken.labels[eid].src = a; // reverse: blue into the left vertex
    auto violation = validate_rel(broken);
    REQUIRE(violation);
    CHECK(violation->find("exterior rule") != std::string::npos);
}

TEST_CASE("windmill host labeling counts are plausible")
{
    // the symmetric corner assignment (one ring vertex per corner) gives the
    // pinwheel pair
    auto exts = enumerate_corner_assignments(windmill());
    size_t min_count = SIZE_MAX, max_count = 0;
    for (const auto &e : exts) {
        auto all = all_rels_backtracking(e);
        CHECK(!all.empty());
        min_count = std::min(min_count, all.size());
        max_count = std::max(max_count, all.size());
        for (const auto &r : all)
            CHECK(!validate_rel(r));
    }
    CHECK(min_count >= 1);
    CHECK(max_count >= 2);
}
