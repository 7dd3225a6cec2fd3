#pragma once

#include <optional>
#include <vector>

#include "equilib/polyhedron.hpp"

namespace equilib {

struct GirthResult {
    double perimeter = 0;
    Vec3 direction;  // argmin projection direction
};

struct HausdorffResult {
    double value = 0;
    double outer = 0;        // boundary excess beyond the unit sphere
    double inner = 0;        // deepest gap between the unit sphere and the body
    double error_bound = 0;  // sampling resolution bound on the inner term
};

struct MetricsReport {
    double diameter = 0;
    double girth = 0;
    double ratio = 0;  // diameter / girth
    double hausdorff_to_ball = 0;
    double hausdorff_error_bound = 0;
    Vec3 girth_direction;
    std::optional<double> symmetry_residual;
    int symmetry_order = 0;
    Vec3 symmetry_axis;
};

// Number of direction samples for girth and Hausdorff sweeps.
inline constexpr int kDirectionSamples = 20000;

// Maximum pairwise vertex distance.
double diameter(const ConvexPolyhedron& poly);

// Perimeter of the 2D convex hull of vertices projected on the plane
// orthogonal to the unit direction u.
double projection_perimeter(const ConvexPolyhedron& poly, const Vec3& u);

// Minimum projection perimeter over directions: Fibonacci-lattice sweep
// followed by Nelder-Mead refinement from the best samples.
GirthResult girth(const ConvexPolyhedron& poly, int n_dir = kDirectionSamples);

// Mean width of a convex counter-clockwise polygon via the closed-form
// support integral over normal arcs. Equals perimeter / pi.
double mean_width_2d(const std::vector<Vec2>& polygon);

// Hausdorff distance between the polyhedron and the unit ball at the origin.
// Requires the origin in the interior.
HausdorffResult hausdorff_to_ball(const ConvexPolyhedron& poly,
                                  int n_dir = kDirectionSamples);

// Hausdorff distance between the vertex set and its rotated image by 2*pi/n
// about the axis, matched by nearest neighbour.
double nfold_symmetry_residual(const ConvexPolyhedron& poly, int n, const Vec3& axis);

// Euclidean distance from a point to the solid polyhedron (0 inside).
double distance_to_polyhedron(const ConvexPolyhedron& poly, const Vec3& p);

struct MetricsOptions {
    int n_dir = kDirectionSamples;
    int symmetry_order = 0;  // 0 = skip the symmetry residual
    Vec3 symmetry_axis{0, 0, 1};
};

// Full report; the Hausdorff term is measured after recentering the body at
// its centroid.
MetricsReport compute_metrics(const ConvexPolyhedron& poly,
                              const MetricsOptions& opts = {});

// Deterministic Fibonacci lattice on the unit sphere.
std::vector<Vec3> fibonacci_directions(int n);

}  // namespace equilib
