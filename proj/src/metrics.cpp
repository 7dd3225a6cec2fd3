#include "equilib/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "equilib/errors.hpp"
#include "equilib/parallel.hpp"

namespace equilib {

std::vector<Vec3> fibonacci_directions(int n) {
    std::vector<Vec3> dirs(n);
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = ga * i;
        dirs[i] = {r * std::cos(phi), r * std::sin(phi), z};
    }
    return dirs;
}

double diameter(const ConvexPolyhedron& poly) {
    double best = 0;
    const auto& v = poly.vertices;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            best = std::max(best, norm2(v[i] - v[j]));
    return std::sqrt(best);
}

namespace {

void orthobasis(const Vec3& u, Vec3& e1, Vec3& e2) {
    Vec3 seed = std::abs(u.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    e1 = normalized(cross(u, seed));
    e2 = cross(u, e1);
}

// Andrew monotone chain. Returns hull vertices in counter-clockwise order.
std::vector<Vec2> hull2d(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    const int n = static_cast<int>(pts.size());
    if (n < 3) return pts;
    std::vector<Vec2> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

double perimeter2d(const std::vector<Vec2>& poly) {
    double p = 0;
    for (size_t i = 0; i < poly.size(); ++i)
        p += norm(poly[(i + 1) % poly.size()] - poly[i]);
    return p;
}

}  // namespace

double projection_perimeter(const ConvexPolyhedron& poly, const Vec3& u) {
    Vec3 e1, e2;
    orthobasis(u, e1, e2);
    std::vector<Vec2> pts;
    pts.reserve(poly.vertices.size());
    for (const Vec3& v : poly.vertices) pts.push_back({dot(e1, v), dot(e2, v)});
    return perimeter2d(hull2d(std::move(pts)));
}

namespace {

// Nelder-Mead on the tangent plane at u0; coordinates are pulled back to the
// sphere through normalization.
Vec3 refine_direction(const ConvexPolyhedron& poly, const Vec3& u0, double& best,
                      bool maximize, double (*eval)(const ConvexPolyhedron&, const Vec3&)) {
    Vec3 e1, e2;
    orthobasis(u0, e1, e2);
    auto lift = [&](const Vec2& t) { return normalized(u0 + e1 * t.x + e2 * t.y); };
    auto f = [&](const Vec2& t) {
        double v = eval(poly, lift(t));
        return maximize ? -v : v;
    };

    std::array<Vec2, 3> simplex = {Vec2{0, 0}, Vec2{0.02, 0}, Vec2{0, 0.02}};
    std::array<double, 3> fv;
    for (int i = 0; i < 3; ++i) fv[i] = f(simplex[i]);

    for (int it = 0; it < 120; ++it) {
        std::array<int, 3> ord = {0, 1, 2};
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        int lo = ord[0], mid = ord[1], hi = ord[2];
        Vec2 centroid = (simplex[lo] + simplex[mid]) * 0.5;
        Vec2 refl = centroid + (centroid - simplex[hi]);
        double fr = f(refl);
        if (fr < fv[lo]) {
            Vec2 exp = centroid + (centroid - simplex[hi]) * 2.0;
            double fe = f(exp);
            if (fe < fr) { simplex[hi] = exp; fv[hi] = fe; }
            else { simplex[hi] = refl; fv[hi] = fr; }
        } else if (fr < fv[mid]) {
            simplex[hi] = refl;
            fv[hi] = fr;
        } else {
            Vec2 con = centroid + (simplex[hi] - centroid) * 0.5;
            double fc = f(con);
            if (fc < fv[hi]) { simplex[hi] = con; fv[hi] = fc; }
            else {
                for (int i : {mid, hi}) {
                    simplex[i] = simplex[lo] + (simplex[i] - simplex[lo]) * 0.5;
                    fv[i] = f(simplex[i]);
                }
            }
        }
        if (std::abs(fv[ord[2]] - fv[ord[0]]) < 1e-14 * (1.0 + std::abs(fv[ord[0]])))
            break;
    }
    int lo = 0;
    for (int i = 1; i < 3; ++i)
        if (fv[i] < fv[lo]) lo = i;
    double val = maximize ? -fv[lo] : fv[lo];
    Vec3 dir = lift(simplex[lo]);
    bool better = maximize ? val > best : val < best;
    if (better) { best = val; return dir; }
    return u0;
}

}  // namespace

GirthResult girth(const ConvexPolyhedron& poly, int n_dir) {
    std::vector<Vec3> dirs = fibonacci_directions(n_dir);
    std::vector<double> per(dirs.size());
    parallel_for(static_cast<int>(dirs.size()),
                 [&](int i) { per[i] = projection_perimeter(poly, dirs[i]); });

    std::vector<int> order(dirs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::partial_sort(order.begin(), order.begin() + std::min<size_t>(3, order.size()),
                      order.end(), [&](int a, int b) { return per[a] < per[b]; });

    double best = per[order[0]];
    Vec3 best_dir = dirs[order[0]];
    for (int r = 0; r < std::min<int>(3, static_cast<int>(order.size())); ++r) {
        double cand = per[order[r]];
        Vec3 d = refine_direction(poly, dirs[order[r]], cand, /*maximize=*/false,
                                  &projection_perimeter);
        if (cand < best) { best = cand; best_dir = d; }
    }
    return {best, best_dir};
}

double mean_width_2d(const std::vector<Vec2>& polygon) {
    if (polygon.size() < 3) throw DegeneratePolygon("need at least 3 vertices");
    double area2 = 0;
    for (size_t i = 0; i < polygon.size(); ++i)
        area2 += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
    if (area2 <= 0) throw DegeneratePolygon("polygon is degenerate or clockwise");

    // Support integral: each vertex supports the normal arc between its two
    // incident edge normals; integrate v . (cos t, sin t) in closed form.
    const int n = static_cast<int>(polygon.size());
    double total = 0;
    for (int i = 0; i < n; ++i) {
        const Vec2& prev = polygon[(i + n - 1) % n];
        const Vec2& v = polygon[i];
        const Vec2& next = polygon[(i + 1) % n];
        Vec2 din = v - prev, dout = next - v;
        double t0 = std::atan2(-din.x, din.y);    // outward normal of incoming edge
        double t1 = std::atan2(-dout.x, dout.y);  // outward normal of outgoing edge
        if (t1 < t0) t1 += 2.0 * M_PI;
        total += v.x * (std::sin(t1) - std::sin(t0)) - v.y * (std::cos(t1) - std::cos(t0));
    }
    return total / M_PI;
}

double distance_to_polyhedron(const ConvexPolyhedron& poly, const Vec3& p) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const Plane& pl : poly.planes) worst = std::max(worst, pl.signed_distance(p));
    if (worst <= 0) return 0;

    // The nearest boundary point lies on a face whose plane the query is on or
    // beyond (up to roundoff at edges and corners).
    double best = std::numeric_limits<double>::infinity();
    for (int f = 0; f < poly.face_count(); ++f) {
        double sd = poly.planes[f].signed_distance(p);
        if (sd < -1e-12) continue;
        Vec3 foot = p - poly.planes[f].normal * sd;
        if (face_boundary_clearance(poly, f, foot) >= 0) {
            best = std::min(best, sd);
            continue;
        }
        const auto& cyc = poly.faces[f];
        for (size_t i = 0; i < cyc.size(); ++i) {
            const Vec3& a = poly.vertices[cyc[i]];
            const Vec3& b = poly.vertices[cyc[(i + 1) % cyc.size()]];
            Vec3 ab = b - a;
            double t = std::clamp(dot(p - a, ab) / norm2(ab), 0.0, 1.0);
            best = std::min(best, distance(p, a + ab * t));
        }
    }
    return best;
}

HausdorffResult hausdorffa_impl(const ConvexPolyhedron& poly, int n_dir) {
    const double eps = poly.eps_abs();
    for (const Plane& pl : poly.planes)
        if (pl.offset <= eps)
            throw OriginNotInterior("origin is not interior to the polyhedron");

    HausdorffResult res;
    for (const Vec3& v : poly.vertices)
        res.outer = std::max(res.outer, norm(v) - 1.0);
    res.outer = std::max(res.outer, 0.0);

    // Exact gaps along face normals are free lower bounds for the inner term.
    double inner = 0;
    Vec3 inner_dir{0, 0, 1};
    for (const Plane& pl : poly.planes) {
        if (1.0 - pl.offset > inner) {
            inner = 1.0 - pl.offset;
            inner_dir = pl.normal;
        }
    }

    std::vector<Vec3> dirs = fibonacci_directions(n_dir);
    std::vector<double> gap(dirs.size());
    parallel_for(static_cast<int>(dirs.size()),
                 [&](int i) { gap[i] = distance_to_polyhedron(poly, dirs[i]); });
    for (size_t i = 0; i < dirs.size(); ++i) {
        if (gap[i] > inner) {
            inner = gap[i];
            inner_dir = dirs[i];
        }
    }

    // Local pattern search around the best direction.
    Vec3 e1, e2;
    orthobasis(inner_dir, e1, e2);
    double step = 2.0 / std::sqrt(static_cast<double>(n_dir));
    Vec3 cur = inner_dir;
    for (int it = 0; it < 40; ++it) {
        bool moved = false;
        for (const Vec3& d : {e1, e2, -e1, -e2}) {
            Vec3 cand = normalized(cur + d * step);
            double g = distance_to_polyhedron(poly, cand);
            if (g > inner) {
                inner = g;
                cur = cand;
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
        if (step < 1e-12) break;
    }

    res.inner = inner;
    // d(u, P) is 1-Lipschitz in u, so the sweep misses at most the covering
    // radius of the lattice.
    res.error_bound = 2.0 * std::acos(std::clamp(1.0 - 2.0 / n_dir, -1.0, 1.0));
    res.value = std::max(res.outer, res.inner);
    return res;
}

HausdorffResult hausdorff_to_ball(const ConvexPolyhedron& poly, int n_dir) {
    return hausdorffa_impl(poly, n_dir);
}

double nfold_symmetry_residual(const ConvexPolyhedron& poly, int n, const Vec3& axis) {
    const double a = 2.0 * M_PI / n;
    const Vec3 k = normalized(axis);
    const double ca = std::cos(a), sa = std::sin(a);
    auto rotate = [&](const Vec3& v) {
        return v * ca + cross(k, v) * sa + k * (dot(k, v) * (1.0 - ca));
    };

    std::vector<Vec3> image(poly.vertices.size());
    for (size_t i = 0; i < image.size(); ++i) image[i] = rotate(poly.vertices[i]);

    auto one_sided = [](const std::vector<Vec3>& from, const std::vector<Vec3>& to) {
        double worst = 0;
        for (const Vec3& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Vec3& q : to) best = std::min(best, norm2(p - q));
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(one_sided(image, poly.vertices), one_sided(poly.vertices, image));
}

MetricsReport compute_metrics(const ConvexPolyhedron& poly, const MetricsOptions& opts) {
    MetricsReport rep;
    rep.diameter = diameter(poly);
    GirthResult g = girth(poly, opts.n_dir);
    rep.girth = g.perimeter;
    rep.girth_direction = g.direction;
    rep.ratio = rep.diameter / rep.girth;

    Vec3 c = mass_properties(poly).centroid;
    ConvexPolyhedron centered = apply_rigid(poly, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, -c);
    HausdorffResult h = hausdorff_to_ball(centered, opts.n_dir);
    rep.hausdorff_to_ball = h.value;
    rep.hausdorff_error_bound = h.error_bound;

    if (opts.symmetry_order >= 2) {
        rep.symmetry_order = opts.symmetry_order;
        rep.symmetry_axis = normalized(opts.symmetry_axis);
        // Measured about the axis through the centroid.
        rep.symmetry_residual =
            nfold_symmetry_residual(centered, opts.symmetry_order, rep.symmetry_axis);
    }
    return rep;
}

}  // namespace equilib
