#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "equilib/dynamics.hpp"
#include "equilib/errors.hpp"
#include "equilib/shapes.hpp"
#include "helpers.hpp"

using namespace equilib;

TEST_CASE("cube rests on every face") {
    ConvexPolyhedron cube = shapes::cube();
    Vec3 c = mass_properties(cube).centroid;
    for (int f = 0; f < cube.face_count(); ++f) {
        RollStep s = roll_step(cube, c, f);
        CHECK(s.rest);
        RollTrace t = roll_trace(cube, c, f);
        CHECK(t.faces.size() == 1);
        CHECK(t.arc_length == 0.0);
    }
    CHECK_FALSE(monostable_oracle(cube));
}

TEST_CASE("the tip predicate follows the perpendicular foot") {
    // For an axis-aligned box every face's orthogonal prism covers the whole
    // interior, so a displaced reference still rests on the x = 0 face.
    ConvexPolyhedron cube = shapes::cube();
    Vec3 c{0.9, 0.5, 0.5};
    int face_x0 = -1;
    for (int f = 0; f < cube.face_count(); ++f)
        if (std::abs(cube.planes[f].normal.x + 1.0) < 1e-12) face_x0 = f;
    REQUIRE(face_x0 >= 0);
    CHECK(roll_step(cube, c, face_x0).rest);

    // An obtuse cross-section does tip: the foot on the bottom face exits
    // past x = 3 and the body rolls across that edge onto the slanted face.
    ConvexPolyhedron slab = shapes::prism({{0, 0}, {3, 0}, {3.6, 1}}, 1.2);
    Vec3 ref{3.2, 0.6, 0.6};
    int bottom = -1;
    for (int f = 0; f < slab.face_count(); ++f)
        if (std::abs(slab.planes[f].normal.y + 1.0) < 1e-12) bottom = f;
    REQUIRE(bottom >= 0);
    RollStep s = roll_step(slab, ref, bottom);
    CHECK_FALSE(s.rest);
    CHECK(slab.planes[s.next_face].normal.x > 0.8);
    const Edge& e = slab.edges[s.tipped_edge];
    CHECK(slab.vertices[e.v0].x == doctest::Approx(3.0));
    CHECK(slab.vertices[e.v1].x == doctest::Approx(3.0));
}

TEST_CASE("rest faces coincide with stable equilibria") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        ConvexPolyhedron p = testutil::random_hull(rng, 50);
        Vec3 c = mass_properties(p).centroid;
        EquilibriumReport rep = classify_equilibria(p, c);
        if (rep.any_degenerate) continue;
        std::set<int> stable;
        for (const EquilibriumPoint& q : rep.points)
            if (q.kind == FeatureKind::Face && !q.degenerate) stable.insert(q.feature);
        for (int f = 0; f < p.face_count(); ++f) {
            RollStep s = roll_step(p, c, f);
            CHECK(s.rest == (stable.count(f) > 0));
        }
    }
}

TEST_CASE("potentials decrease strictly and traces stay within the cap") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        ConvexPolyhedron p = testutil::random_hull(rng, 40);
        Vec3 c = mass_properties(p).centroid;
        if (classify_equilibria(p, c).any_degenerate) continue;
        for (int f = 0; f < p.face_count(); ++f) {
            RollTrace t = roll_trace(p, c, f);
            CHECK(t.faces.size() <= static_cast<size_t>(10 * p.face_count()));
            for (size_t i = 1; i < t.potentials.size(); ++i)
                CHECK(t.potentials[i] < t.potentials[i - 1]);
            CHECK(roll_step(p, c, t.faces.back()).rest);
        }
    }
}

TEST_CASE("a slim prism with a shifted reference rolls at least twice") {
    // Obtuse cross-section: the foot on the long bottom face exits past x = 3
    // when the reference point sits near the obtuse corner.
    ConvexPolyhedron slab = shapes::prism({{0, 0}, {3, 0}, {3.6, 1}}, 1.2);
    Vec3 ref{3.2, 0.6, 0.6};
    EquilibriumReport rep = classify_equilibria(slab, ref);
    REQUIRE_FALSE(rep.any_degenerate);
    int bottom = -1;
    for (int f = 0; f < slab.face_count(); ++f)
        if (std::abs(slab.planes[f].normal.y + 1.0) < 1e-12) bottom = f;
    REQUIRE(bottom >= 0);
    RollTrace t = roll_trace(slab, ref, bottom);
    CHECK(t.faces.size() >= 2);
    CHECK(t.arc_length > 0.0);
}

TEST_CASE("oracle agrees with the classifier census") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        ConvexPolyhedron p = testutil::random_hull(rng, 30);
        Vec3 c = mass_properties(p).centroid;
        EquilibriumReport rep = classify_equilibria(p, c);
        if (rep.any_degenerate) continue;
        CHECK(monostable_oracle(p) == (rep.S == 1));
    }
    CHECK_FALSE(monostable_oracle(shapes::regular_tetrahedron()));
}
