#include "support/builders.hpp"

#include "rectdual/planar_graph.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace rectdual;
using namespace testsup;

TEST_CASE("degenerate graphs validate")
{
    CHECK_NOTHROW(single_vertex());
    CHECK_NOTHROW(single_edge());
    CHECK_NOTHROW(triangle());
}

TEST_CASE("chordless 4-cycle is rejected with NonTriangularFace")
{
    // square A,B,C,D clockwise, no chord
    auto g = make_planar_graph(
        {"A", "B", "C", "D"},
        {{"A", {"B", "D"}}, {"B", {"C", "A"}}, {"C", {"D", "B"}}, {"D", {"A", "C"}}},
        {"A", "B", "C", "D"});
    try {
        validate_plane_triangulated(g);
        FAIL("expected NonTriangularFace");
    } catch (const Error &e) {
        CHECK(e.code == Errc::NonTriangularFace);
    }
}

TEST_CASE("inconsistent rotation is rejected")
{
    CHECK_THROWS_AS(make_planar_graph({"A", "B"}, {{"A", {"B"}}, {"B", {}}}, {"A", "B"}),
                    Error);
}

TEST_CASE("disconnected input is rejected")
{
    auto g = make_planar_graph({"A", "B", "C", "D"},
                               {{"A", {"B"}}, {"B", {"A"}}, {"C", {"D"}}, {"D", {"C"}}},
                               {"A", "B"});
    try {
        validate_plane_triangulated(g);
        FAIL("expected Disconnected");
    } catch (const Error &e) {
        CHECK(e.code == Errc::Disconnected);
    }
}

TEST_CASE("face tracing on K4")
{
    auto g = k4_with_center();
    auto fs = trace_faces(g);
    REQUIRE(fs.outer_face >= 0);
    CHECK(fs.face_count() == 4);
    for (int f = 0; f < fs.face_count(); ++f)
        CHECK(fs.faces[f].size() == 3);
    CHECK(cyclic_equal(fs.face_vertices(fs.outer_face),
                       {g.index_of("A"), g.index_of("B"), g.index_of("C")}));
}

TEST_CASE("windmill validates with five faces")
{
    auto tg = windmill();
    CHECK(tg.faces.face_count() == 5);
}
