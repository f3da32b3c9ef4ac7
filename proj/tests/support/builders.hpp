#pragma once

// Small hand-built instances shared across the test suite.
// Rotations are clockwise, outer walks are clockwise.

#include "rectdual/extended_graph.hpp"
#include "rectdual/planar_graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace testsup {

using namespace rectdual;

inline PlaneTriangulatedGraph single_vertex()
{
    return validate_plane_triangulated(make_planar_graph({"A"}, {{"A", {}}}, {"A"}));
}

inline PlaneTriangulatedGraph single_edge()
{
    return validate_plane_triangulated(
        make_planar_graph({"A", "B"}, {{"A", {"B"}}, {"B", {"A"}}}, {"A", "B"}));
}

inline PlaneTriangulatedGraph triangle()
{
    return validate_plane_triangulated(make_planar_graph(
        {"A", "B", "C"},
        {{"A", {"B", "C"}}, {"B", {"C", "A"}}, {"C", {"A", "B"}}},
        {"A", "B", "C"}));
}

inline PlanarGraph k4_with_center()
{
    // triangle A,B,C (outer) with D inside adjacent to all three
    return make_planar_graph(
        {"A", "B", "C", "D"},
        {{"A", {"B", "D", "C"}},
         {"B", {"C", "D", "A"}},
         {"C", {"A", "D", "B"}},
         {"D", {"A", "B", "C"}}},
        {"A", "B", "C"});
}

/// Wheel: center X surrounded by the 4-cycle N,E,S,W. Dual of the pinwheel
/// layout once extended.
inline PlaneTriangulatedGraph windmill()
{
    return validate_plane_triangulated(make_planar_graph(
        {"N", "E", "S", "W", "X"},
        {{"N", {"E", "X", "W"}},
         {"E", {"S", "X", "N"}},
         {"S", {"W", "X", "E"}},
         {"W", {"N", "X", "S"}},
         {"X", {"N", "E", "S", "W"}}},
        {"N", "E", "S", "W"}));
}

/// Two vertices A,B inside the 4-cycle N,E,S,W; after extension the ring is a
/// nontrivial separating four-cycle.
inline PlaneTriangulatedGraph two_in_ring()
{
    return validate_plane_triangulated(make_planar_graph(
        {"N", "E", "S", "W", "A", "B"},
        {{"N", {"E", "B", "A", "W"}},
         {"E", {"S", "B", "N"}},
         {"S", {"W", "A", "B", "E"}},
         {"W", {"N", "A", "S"}},
         {"A", {"N", "B", "S", "W"}},
         {"B", {"N", "E", "S", "A"}}},
        {"N", "E", "S", "W"}));
}

} // namespace testsup
