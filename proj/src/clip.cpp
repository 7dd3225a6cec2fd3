#include "equilib/clip.hpp"

#include <vector>

#include "equilib/errors.hpp"
#include "equilib/hull.hpp"

namespace equilib {

// The vertex set of P intersected with a half-space is the set of kept
// vertices plus one crossing point per cut edge; rebuilding the hull of that
// set assembles the cap face and restores all invariants in one step.
ConvexPolyhedron clip(const ConvexPolyhedron& poly, const HalfSpace& h, double eps_rel) {
    const double eps = poly.eps_abs(eps_rel);

    std::vector<double> d(poly.vertices.size());
    bool any_out = false, any_in = false;
    for (size_t i = 0; i < poly.vertices.size(); ++i) {
        d[i] = h.plane.signed_distance(poly.vertices[i]);
        if (d[i] > eps) any_out = true;
        if (d[i] < -eps) any_in = true;
    }
    if (!any_out) return poly;
    if (!any_in) throw EmptyResult("half-space leaves no interior");

    std::vector<Vec3> pts;
    for (size_t i = 0; i < poly.vertices.size(); ++i)
        if (d[i] <= eps) pts.push_back(poly.vertices[i]);

    for (const Edge& e : poly.edges) {
        double da = d[e.v0], db = d[e.v1];
        if ((da > eps && db < -eps) || (da < -eps && db > eps)) {
            double t = da / (da - db);
            pts.push_back(poly.vertices[e.v0] +
                          (poly.vertices[e.v1] - poly.vertices[e.v0]) * t);
        }
    }

    try {
        return convex_hull(pts, eps_rel);
    } catch (const DegenerateInput&) {
        throw EmptyResult("clipped body is flat within tolerance");
    }
}

}  // namespace equilib
