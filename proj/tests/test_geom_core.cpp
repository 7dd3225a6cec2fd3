#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equilib/clip.hpp"
#include "equilib/errors.hpp"
#include "equilib/hull.hpp"
#include "equilib/shapes.hpp"
#include "helpers.hpp"

using namespace equilib;

TEST_CASE("hull of cube corners has cube combinatorics") {
    ConvexPolyhedron cube = shapes::cube();
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);
    CHECK(cube.face_count() == 6);
    for (const auto& f : cube.faces) CHECK(f.size() == 4);
    CHECK(validate(cube).empty());
}

TEST_CASE("hull of octahedron points has 8 triangular faces") {
    ConvexPolyhedron octa = shapes::octahedron();
    CHECK(octa.face_count() == 8);
    for (const auto& f : octa.faces) CHECK(f.size() == 3);
    CHECK(validate(octa).empty());
}

TEST_CASE("interior points are ignored by the hull") {
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
    ConvexPolyhedron plain = convex_hull(pts);
    pts.push_back({0.5, 0.5, 0.5});
    ConvexPolyhedron with_inner = convex_hull(pts);
    CHECK(with_inner.vertex_count() == plain.vertex_count());
    CHECK(with_inner.faces == plain.faces);
}

TEST_CASE("degenerate input is rejected") {
    CHECK_THROWS_AS(convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), DegenerateInput);
    CHECK_THROWS_AS(
        convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.3, 0.4, 0}}),
        DegenerateInput);
    CHECK_THROWS_AS(convex_hull({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}),
                    DegenerateInput);
}

TEST_CASE("hull is deterministic given input order") {
    std::mt19937_64 rng(7);
    auto pts = testutil::random_ball_points(rng, 60);
    ConvexPolyhedron a = convex_hull(pts);
    ConvexPolyhedron b = convex_hull(pts);
    CHECK(a.faces == b.faces);
    REQUIRE(a.vertex_count() == b.vertex_count());
    for (int i = 0; i < a.vertex_count(); ++i) {
        CHECK(a.vertices[i].x == b.vertices[i].x);
        CHECK(a.vertices[i].y == b.vertices[i].y);
        CHECK(a.vertices[i].z == b.vertices[i].z);
    }
}

TEST_CASE("random cloud hulls pass validation") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> size(20, 500);
    for (int trial = 0; trial < 40; ++trial) {
        ConvexPolyhedron p = testutil::random_hull(rng, size(rng));
        auto violations = validate(p);
        CAPTURE(trial);
        if (!violations.empty()) CAPTURE(violations.front());
        CHECK(violations.empty());
    }
}

TEST_CASE("mass properties of reference solids") {
    MassProperties cube = mass_properties(shapes::cube());
    CHECK(cube.volume == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cube.centroid.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cube.centroid.y == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cube.centroid.z == doctest::Approx(0.5).epsilon(1e-12));

    MassProperties tet = mass_properties(shapes::tetrahedron());
    CHECK(tet.volume == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(tet.centroid.x == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(tet.centroid.y == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(tet.centroid.z == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("clip: half cube") {
    ConvexPolyhedron half = clip(shapes::cube(), {{{1, 0, 0}, 0.5}});
    MassProperties mp = mass_properties(half);
    CHECK(mp.volume == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mp.centroid.x == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(mp.centroid.y == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mp.centroid.z == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(validate(half).empty());
}

TEST_CASE("clip: plane missing the body is a no-op") {
    ConvexPolyhedron cube = shapes::cube();
    ConvexPolyhedron same = clip(cube, {{{1, 0, 0}, 2.0}});
    CHECK(same.faces == cube.faces);
    CHECK(same.vertex_count() == 8);
}

TEST_CASE("clip: empty result throws") {
    CHECK_THROWS_AS(clip(shapes::cube(), {{{1, 0, 0}, -0.5}}), EmptyResult);
}

TEST_CASE("clip: truncating a tetrahedron vertex yields 5 faces") {
    // Cutting near (0,0,1): keeps the 4 original faces, adds the cap.
    ConvexPolyhedron cut = clip(shapes::tetrahedron(), {{{0, 0, 1}, 0.8}});
    CHECK(cut.face_count() == 5);
    CHECK(validate(cut).empty());
}

TEST_CASE("clip: volume and first moment additivity") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    for (int trial = 0; trial < 30; ++trial) {
        ConvexPolyhedron p = testutil::random_hull(rng, 40);
        Vec3 n = normalized({u(rng), u(rng), u(rng) + 1e-3});
        HalfSpace h{{n, u(rng) * 0.4}};
        ConvexPolyhedron a, b;
        try {
            a = clip(p, h);
            b = clip(p, h.complement());
        } catch (const EmptyResult&) {
            continue;  // plane missed the interior on one side
        }
        MassProperties mp = mass_properties(p);
        MassProperties ma = mass_properties(a);
        MassProperties mb = mass_properties(b);
        CHECK(ma.volume + mb.volume == doctest::Approx(mp.volume).epsilon(1e-9));
        CHECK(norm(ma.first_moment + mb.first_moment - mp.first_moment) <=
              1e-9 * norm(mp.first_moment) + 1e-15);
    }
}

TEST_CASE("mass properties are rigid-motion invariant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexPolyhedron p = testutil::random_hull(rng, 50);
        MassProperties before = mass_properties(p);
        Vec3 r0, r1, r2;
        testutil::random_rotation(rng, r0, r1, r2);
        Vec3 t{rng() % 7 * 0.25, rng() % 5 * 0.5, rng() % 3 * 1.0};
        MassProperties after = mass_properties(apply_rigid(p, r0, r1, r2, t));
        CHECK(after.volume == doctest::Approx(before.volume).epsilon(1e-9));
        Vec3 expect = testutil::rotate(r0, r1, r2, before.centroid) + t;
        CHECK(norm(after.centroid - expect) < 1e-9);
    }
}

TEST_CASE("validate flags a displaced vertex") {
    ConvexPolyhedron cube = shapes::cube();
    // Push one vertex outward along the +z face normal by 10 * eps_geom.
    double bump = 10.0 * cube.eps_abs();
    int idx = -1;
    for (int i = 0; i < cube.vertex_count(); ++i)
        if (cube.vertices[i].z == 1.0 && cube.vertices[i].x == 0.0 &&
            cube.vertices[i].y == 0.0)
            idx = i;
    REQUIRE(idx >= 0);
    cube.vertices[idx].z += bump;
    CHECK(!validate(cube).empty());
}

TEST_CASE("validate flags a duplicated face") {
    ConvexPolyhedron cube = shapes::cube();
    cube.faces.push_back(cube.faces.front());
    cube.planes.push_back(cube.planes.front());
    CHECK(!validate(cube).empty());
}

TEST_CASE("dodecahedron merges to 12 pentagons") {
    ConvexPolyhedron d = shapes::dodecahedron();
    CHECK(d.face_count() == 12);
    for (const auto& f : d.faces) CHECK(f.size() == 5);
    CHECK(d.vertex_count() == 20);
    CHECK(d.edge_count() == 30);
    CHECK(validate(d).empty());
}

TEST_CASE("icosphere is a valid refined ball") {
    ConvexPolyhedron s = shapes::icosphere(3);
    CHECK(s.vertex_count() == 642);
    CHECK(s.face_count() == 1280);
    CHECK(validate(s).empty());
}
