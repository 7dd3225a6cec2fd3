#pragma once

#include <string>
#include <vector>

#include "equilib/vec3.hpp"

namespace equilib {

// Single global relative tolerance on coordinates scaled to the circumradius.
// Every coplanarity/containment predicate derives its absolute epsilon from it.
inline constexpr double kGeomEpsRel = 1e-9;

// Faces whose unit normals differ by less than this angle (and whose offsets
// match within the absolute epsilon) are merged into one polygon.
inline constexpr double kMergeAngle = 1e-7;

struct Plane {
    Vec3 normal;        // unit length
    double offset = 0;  // plane = { x : normal . x = offset }

    double signed_distance(const Vec3& p) const { return dot(normal, p) - offset; }
};

// Points satisfying normal . x <= offset.
struct HalfSpace {
    Plane plane;

    bool contains(const Vec3& p, double eps_abs = 0.0) const {
        return plane.signed_distance(p) <= eps_abs;
    }
    HalfSpace complement() const { return {{-plane.normal, -plane.offset}}; }
};

struct Edge {
    int v0 = -1, v1 = -1;  // v0 < v1
    int f0 = -1, f1 = -1;  // incident faces, f0 < f1
};

struct MassProperties {
    double volume = 0;  // cubic model units
    Vec3 first_moment;  // quartic model units, about the origin
    Vec3 centroid;      // first_moment / volume
};

// Vertices plus outward-oriented face cycles (counter-clockwise seen from
// outside); edges and face planes are derived at construction.
struct ConvexPolyhedron {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;
    std::vector<Plane> planes;  // one per face
    std::vector<Edge> edges;    // sorted by (v0, v1)

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    Vec3 vertex_mean() const;
    // Circumradius about the vertex mean; the length scale for tolerances.
    double scale() const;
    double eps_abs(double eps_rel = kGeomEpsRel) const { return eps_rel * scale(); }

    // Area centroid of a face polygon.
    Vec3 face_centroid(int f) const;

    bool contains(const Vec3& p, double eps_abs) const;

    // Index into edges for the undirected pair, or -1.
    int edge_index(int a, int b) const;
    int edge_other_face(int e, int f) const;
};

// Builds a polyhedron from outward-oriented face cycles. Derives planes and
// edges, optionally merges coplanar faces, canonicalizes ordering. Throws
// DegenerateGeometry on structurally broken input (non-manifold edges,
// unused vertices, zero-length edges).
ConvexPolyhedron make_polyhedron(std::vector<Vec3> vertices,
                                 std::vector<std::vector<int>> faces,
                                 bool merge_coplanar = true,
                                 double eps_rel = kGeomEpsRel);

// Empty list iff all ConvexPolyhedron invariants hold within tolerance.
std::vector<std::string> validate(const ConvexPolyhedron& poly,
                                  double eps_rel = kGeomEpsRel);

// Volume and first moment by signed-tetrahedron decomposition against the
// vertex-average anchor.
MassProperties mass_properties(const ConvexPolyhedron& poly);

// Outward Newell plane of a polygon (unit normal).
Plane polygon_plane(const std::vector<Vec3>& vertices, const std::vector<int>& cycle);

// Minimum signed distance from an in-plane point to the face boundary,
// positive inside the relative interior.
double face_boundary_clearance(const ConvexPolyhedron& poly, int f, const Vec3& p);

// Rigid motion: rotate by the orthonormal rows r0,r1,r2, then translate.
// Combinatorics (face/edge ids) are preserved.
ConvexPolyhedron apply_rigid(const ConvexPolyhedron& poly, const Vec3& r0,
                             const Vec3& r1, const Vec3& r2, const Vec3& t);

ConvexPolyhedron apply_scale(const ConvexPolyhedron& poly, double s, const Vec3& about);

}  // namespace equilib
