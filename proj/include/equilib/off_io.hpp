#pragma once

#include <string>

#include "equilib/polyhedron.hpp"

namespace equilib {

// Reads an ASCII OFF mesh: header "OFF", a "V F E" counts line, V vertex
// lines and F face lines. Faces may arrive unoriented; they are oriented
// outward, coplanar faces are merged and non-convex input is rejected.
ConvexPolyhedron read_off(const std::string& path);

// Deterministic ASCII OFF writer, 17 significant digits per coordinate.
void write_off(const ConvexPolyhedron& poly, const std::string& path);

// Convenience OBJ export.
void write_obj(const ConvexPolyhedron& poly, const std::string& path);

}  // namespace equilib
