#pragma once

#include <vector>

#include "equilib/polyhedron.hpp"

namespace equilib {

enum class FeatureKind { Face, Edge, Vertex };
enum class EquilibriumClass { Stable, Saddle, Unstable };

// A boundary point where the plane through it perpendicular to (point - ref)
// supports the polyhedron. Stable/saddle/unstable corresponds to contact
// feature dimension 2/1/0.
struct EquilibriumPoint {
    Vec3 location;
    FeatureKind kind;
    int feature = -1;  // face, edge or vertex id
    EquilibriumClass cls;
    bool degenerate = false;
    // Distance from the point to the relative boundary of its feature, or the
    // support gap, whichever is smaller; the margin the classification rests on.
    double clearance = 0;
};

struct EquilibriumReport {
    int S = 0, H = 0, U = 0;  // nondegenerate stable/saddle/unstable counts
    std::vector<EquilibriumPoint> points;  // sorted by (class, feature id)
    bool any_degenerate = false;
    int euler_residual = 0;  // S - H + U - 2

    double min_clearance() const;  // over nondegenerate points
};

// Enumerates equilibria of `poly` relative to the interior reference point c.
// Candidates whose margins fall inside the tolerance band are flagged
// degenerate and excluded from the counts.
EquilibriumReport classify_equilibria(const ConvexPolyhedron& poly, const Vec3& c,
                                      double eps_rel = kGeomEpsRel);

// True iff S - H + U = 2. Throws DegenerateReport when the report carries a
// degeneracy flag.
bool poincare_hopf_check(const EquilibriumReport& report);

// True iff every sampled reference point in the closed ball about c yields
// the same census on the same features.
bool reference_stability_scan(const ConvexPolyhedron& poly, const Vec3& c,
                              double radius, int samples,
                              double eps_rel = kGeomEpsRel);

// Checks |c(P ∩ h) - c(P)| <= vol_removed * circumradius / vol(P ∩ h).
bool centroid_shift_check(const ConvexPolyhedron& poly, const HalfSpace& h,
                          double eps_rel = kGeomEpsRel);

}  // namespace equilib
