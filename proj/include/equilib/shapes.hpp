#pragma once

#include <vector>

#include "equilib/polyhedron.hpp"

namespace equilib {
namespace shapes {

ConvexPolyhedron tetrahedron();       // unit right-corner simplex
ConvexPolyhedron regular_tetrahedron();
ConvexPolyhedron cube();              // [0,1]^3
ConvexPolyhedron octahedron();
ConvexPolyhedron dodecahedron();
ConvexPolyhedron icosahedron();

// Icosahedron subdivided `level` times with vertices projected to the unit
// sphere.
ConvexPolyhedron icosphere(int level);

// Right prism over a convex counter-clockwise polygon, z in [0, height].
ConvexPolyhedron prism(const std::vector<Vec2>& base, double height);

}  // namespace shapes
}  // namespace equilib
