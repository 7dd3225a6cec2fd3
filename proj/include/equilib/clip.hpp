#pragma once

#include "equilib/polyhedron.hpp"

namespace equilib {

// Intersection of a convex polyhedron with a half-space. Returns the input
// unchanged when the plane misses it; throws EmptyResult when the
// intersection has empty interior.
ConvexPolyhedron clip(const ConvexPolyhedron& poly, const HalfSpace& h,
                      double eps_rel = kGeomEpsRel);

}  // namespace equilib
