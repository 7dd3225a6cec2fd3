#include "equilib/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "equilib/errors.hpp"

namespace equilib {

Vec3 ConvexPolyhedron::vertex_mean() const {
    Vec3 m;
    for (const Vec3& v : vertices) m += v;
    return m / static_cast<double>(vertices.size());
}

double ConvexPolyhedron::scale() const {
    Vec3 m = vertex_mean();
    double r = 0;
    for (const Vec3& v : vertices) r = std::max(r, distance(v, m));
    return r > 0 ? r : 1.0;
}

Vec3 ConvexPolyhedron::face_centroid(int f) const {
    const std::vector<int>& cyc = faces[f];
    const Vec3& p0 = vertices[cyc[0]];
    Vec3 acc;
    double area = 0;
    for (size_t i = 1; i + 1 < cyc.size(); ++i) {
        const Vec3& p1 = vertices[cyc[i]];
        const Vec3& p2 = vertices[cyc[i + 1]];
        double a = norm(cross(p1 - p0, p2 - p0));
        acc += (p0 + p1 + p2) * (a / 3.0);
        area += a;
    }
    if (area <= 0) {
        Vec3 m;
        for (int vi : cyc) m += vertices[vi];
        return m / static_cast<double>(cyc.size());
    }
    return acc / area;
}

bool ConvexPolyhedron::contains(const Vec3& p, double eps) const {
    for (const Plane& pl : planes)
        if (pl.signed_distance(p) > eps) return false;
    return true;
}

int ConvexPolyhedron::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    Edge key{a, b, 0, 0};
    auto it = std::lower_bound(edges.begin(), edges.end(), key,
                               [](const Edge& e, const Edge& k) {
                                   return e.v0 != k.v0 ? e.v0 < k.v0 : e.v1 < k.v1;
                               });
    if (it == edges.end() || it->v0 != a || it->v1 != b) return -1;
    return static_cast<int>(it - edges.begin());
}

int ConvexPolyhedron::edge_other_face(int e, int f) const {
    return edges[e].f0 == f ? edges[e].f1 : edges[e].f0;
}

Plane polygon_plane(const std::vector<Vec3>& vertices, const std::vector<int>& cycle) {
    Vec3 n;
    for (size_t i = 0; i < cycle.size(); ++i) {
        const Vec3& a = vertices[cycle[i]];
        const Vec3& b = vertices[cycle[(i + 1) % cycle.size()]];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    double len = norm(n);
    if (len <= 0) throw DegenerateGeometry("face has zero area normal");
    n = n / len;
    double off = 0;
    for (int vi : cycle) off += dot(n, vertices[vi]);
    return {n, off / static_cast<double>(cycle.size())};
}

double face_boundary_clearance(const ConvexPolyhedron& poly, int f, const Vec3& p) {
    const std::vector<int>& cyc = poly.faces[f];
    const Vec3& n = poly.planes[f].normal;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < cyc.size(); ++i) {
        const Vec3& a = poly.vertices[cyc[i]];
        const Vec3& b = poly.vertices[cyc[(i + 1) % cyc.size()]];
        Vec3 inward = cross(n, b - a);
        double len = norm(inward);
        if (len <= 0) continue;
        best = std::min(best, dot(inward, p - a) / len);
    }
    return best;
}

namespace {

struct GroupedFaces {
    std::vector<std::vector<int>> cycles;
};

// Merge adjacent faces whose planes coincide within tolerance, then drop
// vertices that are no longer corners (fewer than three incident planes).
std::vector<std::vector<int>> merge_coplanar(const std::vector<Vec3>& vertices,
                                             const std::vector<std::vector<int>>& faces,
                                             double eps_abs) {
    const int nf = static_cast<int>(faces.size());
    std::vector<Plane> planes(nf);
    for (int f = 0; f < nf; ++f) planes[f] = polygon_plane(vertices, faces[f]);

    // Directed edge -> owning face.
    std::map<std::pair<int, int>, int> owner;
    for (int f = 0; f < nf; ++f) {
        const auto& cyc = faces[f];
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (!owner.emplace(std::make_pair(a, b), f).second)
                throw DegenerateGeometry("directed edge appears twice; inconsistent orientation");
        }
    }

    // Union-find over faces.
    std::vector<int> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    const double sin_merge = std::sin(kMergeAngle);
    for (const auto& [de, f] : owner) {
        auto twin = owner.find({de.second, de.first});
        if (twin == owner.end())
            throw DegenerateGeometry("boundary edge; polyhedron is not closed");
        int g = twin->second;
        if (f >= g) continue;
        const Plane& pf = planes[f];
        const Plane& pg = planes[g];
        if (dot(pf.normal, pg.normal) > 0 &&
            norm(cross(pf.normal, pg.normal)) < sin_merge &&
            std::abs(pf.offset - pg.offset) <= eps_abs) {
            parent[find(f)] = find(g);
        }
    }

    // Boundary cycles per group.
    std::map<int, std::map<int, int>> boundary;  // group -> (start vertex -> end vertex)
    for (const auto& [de, f] : owner) {
        int gf = find(f);
        int gg = find(owner.at({de.second, de.first}));
        if (gf == gg) continue;
        if (!boundary[gf].emplace(de.first, de.second).second)
            throw DegenerateGeometry("merged face boundary is not a simple cycle");
    }

    std::vector<std::vector<int>> merged;
    for (auto& [g, next] : boundary) {
        (void)g;
        std::vector<int> cyc;
        int start = next.begin()->first;
        int cur = start;
        do {
            cyc.push_back(cur);
            auto it = next.find(cur);
            if (it == next.end())
                throw DegenerateGeometry("merged face boundary does not close");
            cur = it->second;
        } while (cur != start && cyc.size() <= next.size());
        if (cur != start || cyc.size() != next.size())
            throw DegenerateGeometry("merged face has multiple boundary loops");
        merged.push_back(std::move(cyc));
    }

    // Corner criterion: a vertex of the final polytope lies on >= 3 planes.
    std::vector<std::set<int>> incident(vertices.size());
    for (size_t f = 0; f < merged.size(); ++f)
        for (int vi : merged[f]) incident[vi].insert(static_cast<int>(f));
    for (auto& cyc : merged) {
        std::vector<int> kept;
        for (int vi : cyc)
            if (incident[vi].size() >= 3) kept.push_back(vi);
        if (kept.size() < 3) throw DegenerateGeometry("merged face collapsed");
        cyc = std::move(kept);
    }
    return merged;
}

void canonicalize(std::vector<std::vector<int>>& faces) {
    for (auto& cyc : faces) {
        auto mn = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mn, cyc.end());
    }
    std::sort(faces.begin(), faces.end());
}

}  // namespace

ConvexPolyhedron make_polyhedron(std::vector<Vec3> vertices,
                                 std::vector<std::vector<int>> faces,
                                 bool merge, double eps_rel) {
    if (vertices.size() < 4) throw DegenerateGeometry("fewer than 4 vertices");
    if (faces.size() < 4) throw DegenerateGeometry("fewer than 4 faces");
    for (const Vec3& v : vertices)
        if (!finite(v)) throw DegenerateGeometry("non-finite vertex coordinate");
    const int nv = static_cast<int>(vertices.size());
    for (const auto& cyc : faces) {
        if (cyc.size() < 3) throw DegenerateGeometry("face with fewer than 3 vertices");
        std::set<int> uniq(cyc.begin(), cyc.end());
        if (uniq.size() != cyc.size()) throw DegenerateGeometry("face repeats a vertex");
        for (int vi : cyc)
            if (vi < 0 || vi >= nv) throw DegenerateGeometry("face index out of range");
    }

    Vec3 m;
    for (const Vec3& v : vertices) m += v;
    m = m / nv;
    double scale = 0;
    for (const Vec3& v : vertices) scale = std::max(scale, distance(v, m));
    const double eps_abs = eps_rel * (scale > 0 ? scale : 1.0);

    if (merge) faces = merge_coplanar(vertices, faces, eps_abs);

    // Drop unused vertices, remap indices in ascending original order.
    std::vector<int> remap(vertices.size(), -1);
    std::vector<char> used(vertices.size(), 0);
    for (const auto& cyc : faces)
        for (int vi : cyc) used[vi] = 1;
    if (!merge) {
        for (size_t i = 0; i < used.size(); ++i)
            if (!used[i]) throw DegenerateGeometry("vertex " + std::to_string(i) + " unused");
    }
    std::vector<Vec3> vv;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (used[i]) {
            remap[i] = static_cast<int>(vv.size());
            vv.push_back(vertices[i]);
        }
    for (auto& cyc : faces)
        for (int& vi : cyc) vi = remap[vi];

    canonicalize(faces);

    ConvexPolyhedron poly;
    poly.vertices = std::move(vv);
    poly.faces = std::move(faces);
    for (const auto& cyc : poly.faces) {
        poly.planes.push_back(polygon_plane(poly.vertices, cyc));
        for (size_t i = 0; i < cyc.size(); ++i) {
            const Vec3& a = poly.vertices[cyc[i]];
            const Vec3& b = poly.vertices[cyc[(i + 1) % cyc.size()]];
            if (distance(a, b) <= eps_abs) throw DegenerateGeometry("zero-length edge");
        }
    }

    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int f = 0; f < poly.face_count(); ++f) {
        const auto& cyc = poly.faces[f];
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    }
    for (const auto& [key, fs] : edge_faces) {
        if (fs.size() != 2)
            throw DegenerateGeometry("edge (" + std::to_string(key.first) + "," +
                                     std::to_string(key.second) + ") has " +
                                     std::to_string(fs.size()) + " incident faces");
        poly.edges.push_back({key.first, key.second, std::min(fs[0], fs[1]),
                              std::max(fs[0], fs[1])});
    }
    return poly;
}

std::vector<std::string> validate(const ConvexPolyhedron& poly, double eps_rel) {
    std::vector<std::string> out;
    const double eps = 2.0 * poly.eps_abs(eps_rel);

    int v = poly.vertex_count(), e = poly.edge_count(), f = poly.face_count();
    if (v - e + f != 2)
        out.push_back("Euler relation violated: V-E+F = " + std::to_string(v - e + f));

    for (int i = 0; i < f; ++i) {
        const Plane& pl = poly.planes[i];
        if (std::abs(norm(pl.normal) - 1.0) > 1e-12)
            out.push_back("face " + std::to_string(i) + " normal is not unit length");
        for (int vi : poly.faces[i]) {
            double d = pl.signed_distance(poly.vertices[vi]);
            if (std::abs(d) > eps)
                out.push_back("face " + std::to_string(i) + " vertex " + std::to_string(vi) +
                              " off plane by " + std::to_string(d));
        }
    }

    // Convexity: every vertex inside every face half-space.
    for (int i = 0; i < f; ++i) {
        for (int vi = 0; vi < v; ++vi) {
            double d = poly.planes[i].signed_distance(poly.vertices[vi]);
            if (d > eps)
                out.push_back("vertex " + std::to_string(vi) + " outside face " +
                              std::to_string(i) + " by " + std::to_string(d));
        }
    }

    // Adjacent faces must not be coplanar.
    const double sin_merge = std::sin(kMergeAngle);
    for (const Edge& ed : poly.edges) {
        const Plane& a = poly.planes[ed.f0];
        const Plane& b = poly.planes[ed.f1];
        if (dot(a.normal, b.normal) > 0 && norm(cross(a.normal, b.normal)) < sin_merge &&
            std::abs(a.offset - b.offset) <= eps)
            out.push_back("faces " + std::to_string(ed.f0) + " and " + std::to_string(ed.f1) +
                          " are coplanar across edge (" + std::to_string(ed.v0) + "," +
                          std::to_string(ed.v1) + ")");
    }

    // Orientation consistency: each undirected edge seen once per direction.
    std::map<std::pair<int, int>, int> dir_count;
    for (const auto& cyc : poly.faces)
        for (size_t i = 0; i < cyc.size(); ++i)
            dir_count[{cyc[i], cyc[(i + 1) % cyc.size()]}]++;
    for (const auto& [de, c] : dir_count) {
        if (c != 1 || dir_count.count({de.second, de.first}) == 0) {
            out.push_back("inconsistent face orientation around edge (" +
                          std::to_string(de.first) + "," + std::to_string(de.second) + ")");
            break;
        }
    }

    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (distance(poly.vertices[i], poly.vertices[j]) <= eps) {
                out.push_back("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                              " coincide");
            }

    return out;
}

MassProperties mass_properties(const ConvexPolyhedron& poly) {
    const Vec3 anchor = poly.vertex_mean();
    double vol = 0;
    Vec3 moment;
    for (const auto& cyc : poly.faces) {
        const Vec3& p0 = poly.vertices[cyc[0]];
        for (size_t i = 1; i + 1 < cyc.size(); ++i) {
            const Vec3& p1 = poly.vertices[cyc[i]];
            const Vec3& p2 = poly.vertices[cyc[i + 1]];
            double tv = dot(cross(p0 - anchor, p1 - anchor), p2 - anchor) / 6.0;
            vol += tv;
            moment += (anchor + p0 + p1 + p2) * (tv / 4.0);
        }
    }
    if (vol <= 0) throw DegenerateGeometry("non-positive volume");
    return {vol, moment, moment / vol};
}

ConvexPolyhedron apply_rigid(const ConvexPolyhedron& poly, const Vec3& r0,
                             const Vec3& r1, const Vec3& r2, const Vec3& t) {
    ConvexPolyhedron out = poly;
    for (size_t i = 0; i < out.vertices.size(); ++i) {
        const Vec3& v = poly.vertices[i];
        out.vertices[i] = Vec3{dot(r0, v), dot(r1, v), dot(r2, v)} + t;
    }
    for (size_t f = 0; f < out.planes.size(); ++f)
        out.planes[f] = polygon_plane(out.vertices, out.faces[f]);
    return out;
}

ConvexPolyhedron apply_scale(const ConvexPolyhedron& poly, double s, const Vec3& about) {
    ConvexPolyhedron out = poly;
    for (size_t i = 0; i < out.vertices.size(); ++i)
        out.vertices[i] = about + (poly.vertices[i] - about) * s;
    for (size_t f = 0; f < out.planes.size(); ++f)
        out.planes[f] = polygon_plane(out.vertices, out.faces[f]);
    return out;
}

}  // namespace equilib
