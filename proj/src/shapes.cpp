#include "equilib/shapes.hpp"

#include <cmath>
#include <map>

#include "equilib/hull.hpp"

namespace equilib {
namespace shapes {

ConvexPolyhedron tetrahedron() {
    return make_polyhedron({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                           {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

ConvexPolyhedron regular_tetrahedron() {
    return convex_hull({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
}

ConvexPolyhedron cube() {
    std::vector<Vec3> v;
    for (int i = 0; i < 8; ++i)
        v.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
    return convex_hull(v);
}

ConvexPolyhedron octahedron() {
    return convex_hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

ConvexPolyhedron dodecahedron() {
    const double p = (1.0 + std::sqrt(5.0)) / 2.0;
    const double q = 1.0 / p;
    std::vector<Vec3> v;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
    for (int a : {-1, 1})
        for (int b : {-1, 1}) {
            v.push_back({0, a * q, b * p});
            v.push_back({a * q, b * p, 0});
            v.push_back({a * p, 0, b * q});
        }
    return convex_hull(v);
}

ConvexPolyhedron icosahedron() {
    const double p = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v;
    for (int a : {-1, 1})
        for (int b : {-1, 1}) {
            v.push_back({0, double(a), b * p});
            v.push_back({double(a), b * p, 0});
            v.push_back({a * p, 0, double(b)});
        }
    return convex_hull(v);
}

ConvexPolyhedron icosphere(int level) {
    ConvexPolyhedron ico = icosahedron();
    std::vector<Vec3> verts = ico.vertices;
    for (Vec3& v : verts) v = normalized(v);
    std::vector<std::array<int, 3>> tris;
    for (const auto& f : ico.faces) tris.push_back({f[0], f[1], f[2]});

    for (int l = 0; l < level; ++l) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            int idx = static_cast<int>(verts.size());
            verts.push_back(normalized((verts[a] + verts[b]) * 0.5));
            midpoint.emplace(key, idx);
            return idx;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(tris.size() * 4);
        for (const auto& t : tris) {
            int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
            next.push_back({t[0], ab, ca});
            next.push_back({t[1], bc, ab});
            next.push_back({t[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        tris = std::move(next);
    }

    std::vector<std::vector<int>> faces;
    faces.reserve(tris.size());
    for (const auto& t : tris) faces.push_back({t[0], t[1], t[2]});
    return make_polyhedron(std::move(verts), std::move(faces), /*merge=*/false);
}

ConvexPolyhedron prism(const std::vector<Vec2>& base, double height) {
    const int n = static_cast<int>(base.size());
    std::vector<Vec3> verts;
    for (const Vec2& p : base) verts.push_back({p.x, p.y, 0.0});
    for (const Vec2& p : base) verts.push_back({p.x, p.y, height});
    std::vector<std::vector<int>> faces;
    std::vector<int> bottom, top;
    for (int i = n - 1; i >= 0; --i) bottom.push_back(i);
    for (int i = 0; i < n; ++i) top.push_back(n + i);
    faces.push_back(bottom);
    faces.push_back(top);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        faces.push_back({i, j, n + j, n + i});
    }
    return make_polyhedron(std::move(verts), std::move(faces));
}

}  // namespace shapes
}  // namespace equilib
