#pragma once

#include <vector>

#include "equilib/polyhedron.hpp"

namespace equilib {

// Convex hull of a 3D point cloud. Deterministic given the input order;
// coplanar faces are merged into polygons. Throws DegenerateInput if the
// points are coplanar/collinear within tolerance.
ConvexPolyhedron convex_hull(const std::vector<Vec3>& points,
                             double eps_rel = kGeomEpsRel);

}  // namespace equilib
