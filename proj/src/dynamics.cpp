#include "equilib/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "equilib/errors.hpp"

namespace equilib {

RollStep roll_step(const ConvexPolyhedron& poly, const Vec3& c, int face,
                   double eps_rel) {
    const double eps = poly.eps_abs(eps_rel);
    const Plane& pl = poly.planes[face];
    Vec3 foot = c - pl.normal * pl.signed_distance(c);

    const std::vector<int>& cyc = poly.faces[face];
    double best_violation = -std::numeric_limits<double>::infinity();
    int best_edge = -1, best_neighbor = -1;
    for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        Vec3 inward = cross(pl.normal, poly.vertices[b] - poly.vertices[a]);
        double violation = -dot(inward, foot - poly.vertices[a]) / norm(inward);
        int e = poly.edge_index(a, b);
        // Vertex-balance ties break to the lexicographically smaller edge id.
        if (violation > best_violation + eps ||
            (violation > best_violation - eps && (best_edge < 0 || e < best_edge))) {
            best_violation = std::max(best_violation, violation);
            best_edge = e;
            best_neighbor = poly.edge_other_face(e, face);
        }
    }

    if (best_violation < -eps) return {true, -1, -1};
    if (best_violation <= eps)
        throw DegenerateRest("foot of reference point lies on the face boundary");
    return {false, best_neighbor, best_edge};
}

RollTrace roll_trace(const ConvexPolyhedron& poly, const Vec3& c, int start_face,
                     double eps_rel) {
    RollTrace trace;
    const int cap = 10 * poly.face_count();
    int face = start_face;
    for (int step = 0; step <= cap; ++step) {
        double potential = -poly.planes[face].signed_distance(c);
        if (!trace.potentials.empty() && potential >= trace.potentials.back())
            throw Error("tipping failed to lower the reference point");
        trace.faces.push_back(face);
        trace.potentials.push_back(potential);

        RollStep s = roll_step(poly, c, face, eps_rel);
        if (s.rest) return trace;

        const Edge& e = poly.edges[s.tipped_edge];
        const Vec3& a = poly.vertices[e.v0];
        Vec3 axis = poly.vertices[e.v1] - a;
        double radius = norm(cross(c - a, axis)) / norm(axis);
        double turn = std::acos(std::clamp(
            dot(poly.planes[face].normal, poly.planes[s.next_face].normal), -1.0, 1.0));
        trace.arc_length += radius * turn;
        trace.tipped_edges.push_back(s.tipped_edge);
        face = s.next_face;
    }
    throw Error("rolling exceeded the step cap");
}

bool monostable_oracle(const ConvexPolyhedron& poly, double eps_rel) {
    Vec3 c = mass_properties(poly).centroid;
    EquilibriumReport rep = classify_equilibria(poly, c, eps_rel);
    if (rep.any_degenerate)
        throw DegenerateReport("equilibrium census is degenerate");
    if (rep.S != 1) return false;

    int stable_face = -1;
    for (const EquilibriumPoint& p : rep.points)
        if (p.kind == FeatureKind::Face && !p.degenerate) stable_face = p.feature;

    for (int f = 0; f < poly.face_count(); ++f) {
        RollTrace t = roll_trace(poly, c, f, eps_rel);
        if (t.faces.back() != stable_face) return false;
    }
    return true;
}

}  // namespace equilib
