#include "equilib/hull.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "equilib/errors.hpp"

namespace equilib {

namespace {

// Triangulated working hull. Faces are triangles until the final coplanar
// merge; adjacency is tracked through directed edges.
struct Tri {
    int v[3];
    Vec3 n;
    double d;
    bool alive = true;
};

Tri make_tri(const std::vector<Vec3>& pts, int a, int b, int c) {
    Tri t;
    t.v[0] = a;
    t.v[1] = b;
    t.v[2] = c;
    Vec3 nn = cross(pts[b] - pts[a], pts[c] - pts[a]);
    double len = norm(nn);
    if (len > 0) nn = nn / len;
    t.n = nn;
    t.d = (dot(nn, pts[a]) + dot(nn, pts[b]) + dot(nn, pts[c])) / 3.0;
    return t;
}

// Four affinely independent seed points: extremes are preferred over input
// order so that structured inputs (grids, rings) start from a fat simplex.
std::array<int, 4> initial_simplex(const std::vector<Vec3>& pts, double eps_abs) {
    const int n = static_cast<int>(pts.size());
    int i0 = 0;
    for (int i = 1; i < n; ++i) {
        const Vec3 &a = pts[i], &b = pts[i0];
        if (a.x != b.x ? a.x < b.x : (a.y != b.y ? a.y < b.y : a.z < b.z)) i0 = i;
    }
    int i1 = -1;
    double best = eps_abs;
    for (int i = 0; i < n; ++i) {
        double d = distance(pts[i], pts[i0]);
        if (d > best) { best = d; i1 = i; }
    }
    if (i1 < 0) throw DegenerateInput("all points coincide");

    int i2 = -1;
    best = eps_abs;
    Vec3 axis = pts[i1] - pts[i0];
    double alen = norm(axis);
    for (int i = 0; i < n; ++i) {
        double d = norm(cross(axis, pts[i] - pts[i0])) / alen;
        if (d > best) { best = d; i2 = i; }
    }
    if (i2 < 0) throw DegenerateInput("points are collinear");

    int i3 = -1;
    best = eps_abs;
    Vec3 nrm = normalized(cross(axis, pts[i2] - pts[i0]));
    for (int i = 0; i < n; ++i) {
        double d = std::abs(dot(nrm, pts[i] - pts[i0]));
        if (d > best) { best = d; i3 = i; }
    }
    if (i3 < 0) throw DegenerateInput("points are coplanar");

    if (dot(nrm, pts[i3] - pts[i0]) > 0) std::swap(i1, i2);
    return {i0, i1, i2, i3};
}

}  // namespace

ConvexPolyhedron convex_hull(const std::vector<Vec3>& points, double eps_rel) {
    if (points.size() < 4) throw DegenerateInput("need at least 4 points");
    for (const Vec3& p : points)
        if (!finite(p)) throw DegenerateInput("non-finite input point");

    Vec3 mean;
    for (const Vec3& p : points) mean += p;
    mean = mean / static_cast<double>(points.size());
    double scale = 0;
    for (const Vec3& p : points) scale = std::max(scale, distance(p, mean));
    const double eps_abs = eps_rel * (scale > 0 ? scale : 1.0);

    auto [i0, i1, i2, i3] = initial_simplex(points, eps_abs);

    std::vector<Tri> tris;
    tris.push_back(make_tri(points, i0, i1, i2));
    tris.push_back(make_tri(points, i0, i2, i3));
    tris.push_back(make_tri(points, i0, i3, i1));
    tris.push_back(make_tri(points, i1, i3, i2));

    // Directed edge (a,b) -> triangle owning it.
    std::map<std::pair<int, int>, int> owner;
    auto register_tri = [&](int ti) {
        const Tri& t = tris[ti];
        for (int k = 0; k < 3; ++k)
            owner[{t.v[k], t.v[(k + 1) % 3]}] = ti;
    };
    for (int ti = 0; ti < 4; ++ti) register_tri(ti);

    for (int pi = 0; pi < static_cast<int>(points.size()); ++pi) {
        if (pi == i0 || pi == i1 || pi == i2 || pi == i3) continue;
        const Vec3& p = points[pi];

        std::vector<int> visible;
        std::vector<char> mark(tris.size(), 0);
        for (size_t ti = 0; ti < tris.size(); ++ti) {
            if (!tris[ti].alive) continue;
            if (dot(tris[ti].n, p) - tris[ti].d > eps_abs) {
                visible.push_back(static_cast<int>(ti));
                mark[ti] = 1;
            }
        }
        if (visible.empty()) continue;  // interior or on the current hull

        // Absorb adjacent faces the point is nearly coplanar with, so no
        // sliver triangles survive on the new cone.
        std::deque<int> queue(visible.begin(), visible.end());
        while (!queue.empty()) {
            int ti = queue.front();
            queue.pop_front();
            const Tri& t = tris[ti];
            for (int k = 0; k < 3; ++k) {
                auto it = owner.find({t.v[(k + 1) % 3], t.v[k]});
                if (it == owner.end()) continue;
                int nb = it->second;
                if (mark[nb] || !tris[nb].alive) continue;
                if (dot(tris[nb].n, p) - tris[nb].d > -eps_abs) {
                    mark[nb] = 1;
                    visible.push_back(nb);
                    queue.push_back(nb);
                }
            }
        }

        // Horizon: directed edges of visible triangles whose twin is hidden.
        std::map<int, int> horizon;  // start vertex -> end vertex
        for (int ti : visible) {
            const Tri& t = tris[ti];
            for (int k = 0; k < 3; ++k) {
                int a = t.v[k], b = t.v[(k + 1) % 3];
                auto it = owner.find({b, a});
                if (it == owner.end() || !mark[it->second]) {
                    if (!horizon.emplace(a, b).second)
                        throw DegenerateInput("hull horizon is not a simple loop");
                }
            }
        }
        if (horizon.empty()) continue;  // point dominates nothing real

        for (int ti : visible) tris[ti].alive = false;

        // Fan of new triangles around the horizon loop.
        int start = horizon.begin()->first;
        int cur = start;
        size_t steps = 0;
        do {
            auto it = horizon.find(cur);
            if (it == horizon.end()) throw DegenerateInput("hull horizon does not close");
            int nxt = it->second;
            tris.push_back(make_tri(points, cur, nxt, pi));
            register_tri(static_cast<int>(tris.size()) - 1);
            cur = nxt;
        } while (cur != start && ++steps <= horizon.size());
        if (cur != start) throw DegenerateInput("hull horizon has multiple loops");
    }

    std::vector<std::vector<int>> faces;
    for (const Tri& t : tris)
        if (t.alive) faces.push_back({t.v[0], t.v[1], t.v[2]});

    return make_polyhedron(points, std::move(faces), /*merge=*/true, eps_rel);
}

}  // namespace equilib
