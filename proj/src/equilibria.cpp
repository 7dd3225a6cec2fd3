#include "equilib/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "equilib/clip.hpp"
#include "equilib/errors.hpp"

namespace equilib {

double EquilibriumReport::min_clearance() const {
    double m = std::numeric_limits<double>::infinity();
    for (const EquilibriumPoint& p : points)
        if (!p.degenerate) m = std::min(m, p.clearance);
    return m;
}

namespace {

void require_interior(const ConvexPolyhedron& poly, const Vec3& c, double eps) {
    for (const Plane& pl : poly.planes)
        if (pl.signed_distance(c) > -eps)
            throw ReferenceNotInterior("reference point is not strictly interior");
}

// Largest violation of the candidate supporting plane through `q` with outward
// direction `u`, over all vertices except the feature's own. Support holds
// when the result is clearly negative.
double support_margin(const ConvexPolyhedron& poly, const Vec3& q, const Vec3& u,
                      int skip_a, int skip_b) {
    double margin = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < poly.vertex_count(); ++i) {
        if (i == skip_a || i == skip_b) continue;
        margin = std::max(margin, dot(poly.vertices[i] - q, u));
    }
    return margin;
}

}  // namespace

EquilibriumReport classify_equilibria(const ConvexPolyhedron& poly, const Vec3& c,
                                      double eps_rel) {
    const double eps = poly.eps_abs(eps_rel);
    require_interior(poly, c, eps);

    EquilibriumReport rep;

    // Faces: the perpendicular foot of c on the face plane is a stable point
    // iff it lies in the relative interior of the face. The face plane itself
    // is the supporting plane, so no separate support test is needed.
    for (int f = 0; f < poly.face_count(); ++f) {
        const Plane& pl = poly.planes[f];
        Vec3 foot = c - pl.normal * pl.signed_distance(c);
        double clear = face_boundary_clearance(poly, f, foot);
        if (clear > eps) {
            rep.points.push_back({foot, FeatureKind::Face, f, EquilibriumClass::Stable,
                                  false, clear});
        } else if (clear >= -eps) {
            rep.points.push_back({foot, FeatureKind::Face, f, EquilibriumClass::Stable,
                                  true, clear});
        }
    }

    // Edges: perpendicular foot of c on the edge line, interior to the edge,
    // with the plane through the foot supporting the polyhedron.
    for (int e = 0; e < poly.edge_count(); ++e) {
        const Vec3& a = poly.vertices[poly.edges[e].v0];
        const Vec3& b = poly.vertices[poly.edges[e].v1];
        Vec3 ab = b - a;
        double t = dot(c - a, ab) / norm2(ab);
        Vec3 foot = a + ab * t;
        double end_clear = std::min(t, 1.0 - t) * norm(ab);
        if (end_clear < -eps) continue;
        Vec3 u = normalized(foot - c);
        double gap = -support_margin(poly, foot, u, poly.edges[e].v0, poly.edges[e].v1);
        if (gap < -eps) continue;
        bool interior = end_clear > eps;
        bool supported = gap > eps;
        if (interior && supported) {
            rep.points.push_back({foot, FeatureKind::Edge, e, EquilibriumClass::Saddle,
                                  false, std::min(end_clear, gap)});
        } else {
            rep.points.push_back({foot, FeatureKind::Edge, e, EquilibriumClass::Saddle,
                                  true, std::min(end_clear, gap)});
        }
    }

    // Vertices: the plane through v perpendicular to v - c must support.
    for (int v = 0; v < poly.vertex_count(); ++v) {
        const Vec3& p = poly.vertices[v];
        Vec3 u = normalized(p - c);
        double gap = -support_margin(poly, p, u, v, -1);
        if (gap < -eps) continue;
        if (gap > eps) {
            rep.points.push_back({p, FeatureKind::Vertex, v, EquilibriumClass::Unstable,
                                  false, gap});
        } else {
            rep.points.push_back({p, FeatureKind::Vertex, v, EquilibriumClass::Unstable,
                                  true, gap});
        }
    }

    std::sort(rep.points.begin(), rep.points.end(),
              [](const EquilibriumPoint& x, const EquilibriumPoint& y) {
                  if (x.cls != y.cls) return x.cls < y.cls;
                  return x.feature < y.feature;
              });

    for (const EquilibriumPoint& p : rep.points) {
        if (p.degenerate) {
            rep.any_degenerate = true;
            continue;
        }
        switch (p.cls) {
            case EquilibriumClass::Stable: rep.S++; break;
            case EquilibriumClass::Saddle: rep.H++; break;
            case EquilibriumClass::Unstable: rep.U++; break;
        }
    }
    rep.euler_residual = rep.S - rep.H + rep.U - 2;
    return rep;
}

bool poincare_hopf_check(const EquilibriumReport& report) {
    if (report.any_degenerate)
        throw DegenerateReport("census is unreliable: degenerate equilibria present");
    return report.euler_residual == 0;
}

namespace {

std::vector<Vec3> ball_samples(const Vec3& c, double radius, int samples) {
    std::vector<Vec3> out;
    out.push_back(c);
    if (radius <= 0 || samples <= 0) return out;
    // Fibonacci sphere on the boundary, where deviations are largest.
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < samples; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / samples;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = ga * i;
        out.push_back(c + Vec3{r * std::cos(phi), r * std::sin(phi), z} * radius);
    }
    return out;
}

std::vector<std::pair<int, int>> feature_signature(const EquilibriumReport& rep) {
    std::vector<std::pair<int, int>> sig;
    for (const EquilibriumPoint& p : rep.points)
        if (!p.degenerate) sig.emplace_back(static_cast<int>(p.kind), p.feature);
    std::sort(sig.begin(), sig.end());
    return sig;
}

}  // namespace

bool reference_stability_scan(const ConvexPolyhedron& poly, const Vec3& c,
                              double radius, int samples, double eps_rel) {
    const double eps = poly.eps_abs(eps_rel);
    for (const Plane& pl : poly.planes)
        if (pl.signed_distance(c) > -(radius - eps))
            throw ReferenceNotInterior("ball about the reference point exits the body");

    EquilibriumReport base = classify_equilibria(poly, c, eps_rel);
    if (base.any_degenerate)
        throw DegenerateReport("reference census is degenerate");
    auto base_sig = feature_signature(base);

    for (const Vec3& x : ball_samples(c, radius, samples)) {
        EquilibriumReport r = classify_equilibria(poly, x, eps_rel);
        if (r.any_degenerate) return false;
        if (r.S != base.S || r.H != base.H || r.U != base.U) return false;
        if (feature_signature(r) != base_sig) return false;
    }
    return true;
}

bool centroid_shift_check(const ConvexPolyhedron& poly, const HalfSpace& h,
                          double eps_rel) {
    MassProperties whole = mass_properties(poly);
    ConvexPolyhedron clipped = clip(poly, h, eps_rel);
    MassProperties part = mass_properties(clipped);

    double removed = whole.volume - part.volume;
    double r = 0;
    for (const Vec3& v : poly.vertices) r = std::max(r, distance(v, whole.centroid));

    double shift = distance(part.centroid, whole.centroid);
    double bound = removed * r / part.volume;
    // Tolerance for roundoff when the clip removes (next to) nothing.
    return shift <= bound + 1e-12 * r;
}

}  // namespace equilib
