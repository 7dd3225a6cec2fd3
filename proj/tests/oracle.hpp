#pragma once

// Brute-force equilibrium oracle with independently coded predicates. It
// shares no geometry code with the library: vectors are raw arrays, the
// point-in-face test is an angle sum instead of edge clearances, and the
// support tests run over explicitly rebuilt feature lists.

#include <array>
#include <cmath>
#include <vector>

#include "equilib/polyhedron.hpp"

namespace oracle {

using V3 = std::array<double, 3>;

inline V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline double dt(const V3& a, const V3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline V3 cr(const V3& a, const V3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}
inline double len(const V3& a) { return std::sqrt(dt(a, a)); }

struct Census {
    int S = 0, H = 0, U = 0;
    bool uncertain = false;  // some margin fell inside the tolerance band
    std::vector<std::pair<int, int>> features;  // (kind 0/1/2, id) of counted points
};

// kind 0 = face, 1 = edge, 2 = vertex, matching the library's report order.
inline Census classify(const equilib::ConvexPolyhedron& poly, const equilib::Vec3& ref,
                       double eps) {
    Census c;
    const V3 rp{ref.x, ref.y, ref.z};
    auto vert = [&](int i) -> V3 {
        return {poly.vertices[i].x, poly.vertices[i].y, poly.vertices[i].z};
    };

    for (int f = 0; f < poly.face_count(); ++f) {
        const auto& cyc = poly.faces[f];
        // Plane from the first three corners only; the oracle does not reuse
        // the library's Newell fit.
        V3 a = vert(cyc[0]), b = vert(cyc[1]), d = vert(cyc[2]);
        V3 n = cr(sub(b, a), sub(d, a));
        double nl = len(n);
        n = {n[0] / nl, n[1] / nl, n[2] / nl};
        double sd = dt(sub(rp, a), n);
        V3 foot = {rp[0] - sd * n[0], rp[1] - sd * n[1], rp[2] - sd * n[2]};

        // Angle sum: interior points subtend 2*pi.
        double angle = 0;
        double min_edge_dist = 1e300;
        for (size_t i = 0; i < cyc.size(); ++i) {
            V3 p = vert(cyc[i]);
            V3 q = vert(cyc[(i + 1) % cyc.size()]);
            V3 u = sub(p, foot), w = sub(q, foot);
            double lu = len(u), lw = len(w);
            min_edge_dist = std::min(min_edge_dist, lu);
            angle += std::acos(std::clamp(dt(u, w) / (lu * lw), -1.0, 1.0));
            // distance from foot to the segment
            V3 pq = sub(q, p);
            double t = std::clamp(dt(sub(foot, p), pq) / dt(pq, pq), 0.0, 1.0);
            V3 proj = {p[0] + t * pq[0], p[1] + t * pq[1], p[2] + t * pq[2]};
            min_edge_dist = std::min(min_edge_dist, len(sub(foot, proj)));
        }
        bool inside = std::abs(angle - 2.0 * M_PI) < 1e-6;
        if (min_edge_dist <= eps) {
            c.uncertain = true;
        } else if (inside) {
            c.S++;
            c.features.emplace_back(0, f);
        }
    }

    for (int e = 0; e < poly.edge_count(); ++e) {
        V3 a = vert(poly.edges[e].v0), b = vert(poly.edges[e].v1);
        V3 ab = sub(b, a);
        double t = dt(sub(rp, a), ab) / dt(ab, ab);
        V3 foot = {a[0] + t * ab[0], a[1] + t * ab[1], a[2] + t * ab[2]};
        double end_dist = std::min(t, 1.0 - t) * len(ab);
        V3 u = sub(foot, rp);
        double ul = len(u);
        u = {u[0] / ul, u[1] / ul, u[2] / ul};
        double worst = -1e300;
        for (int i = 0; i < poly.vertex_count(); ++i) {
            if (i == poly.edges[e].v0 || i == poly.edges[e].v1) continue;
            worst = std::max(worst, dt(sub(vert(i), foot), u));
        }
        if (std::abs(end_dist) <= eps || std::abs(worst) <= eps) {
            if (end_dist > -eps && worst < eps) c.uncertain = true;
        } else if (end_dist > 0 && worst < 0) {
            c.H++;
            c.features.emplace_back(1, e);
        }
    }

    for (int v = 0; v < poly.vertex_count(); ++v) {
        V3 p = vert(v);
        V3 u = sub(p, rp);
        double ul = len(u);
        u = {u[0] / ul, u[1] / ul, u[2] / ul};
        double worst = -1e300;
        for (int i = 0; i < poly.vertex_count(); ++i) {
            if (i == v) continue;
            worst = std::max(worst, dt(sub(vert(i), p), u));
        }
        if (std::abs(worst) <= eps) {
            c.uncertain = true;
        } else if (worst < 0) {
            c.U++;
            c.features.emplace_back(2, v);
        }
    }

    std::sort(c.features.begin(), c.features.end());
    return c;
}

}  // namespace oracle
