#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equilib/errors.hpp"
#include "equilib/metrics.hpp"
#include "equilib/shapes.hpp"
#include "helpers.hpp"

using namespace equilib;

namespace {

ConvexPolyhedron centered_cube() {
    return apply_rigid(shapes::cube(), {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                       {-0.5, -0.5, -0.5});
}

}  // namespace

TEST_CASE("diameter of reference solids") {
    CHECK(diameter(shapes::cube()) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(diameter(shapes::icosphere(4)) == doctest::Approx(2.0).epsilon(0.005));
}

TEST_CASE("projection perimeter of the cube") {
    ConvexPolyhedron cube = shapes::cube();
    CHECK(projection_perimeter(cube, {0, 0, 1}) == doctest::Approx(4.0).epsilon(1e-12));

    Vec3 diag = normalized({1, 1, 1});
    double hexagon = 6.0 * std::sqrt(2.0) / std::sqrt(3.0);
    CHECK(projection_perimeter(cube, diag) == doctest::Approx(hexagon).epsilon(1e-9));
    CHECK(std::abs(projection_perimeter(cube, diag) - 4.899) < 1e-3);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Vec3 u = normalized(testutil::random_ball_points(rng, 1, 1.0)[0]);
        CHECK(projection_perimeter(cube, u) ==
              doctest::Approx(projection_perimeter(cube, -u)).epsilon(1e-12));
    }
}

TEST_CASE("girth of the cube is 4 along a face normal") {
    ConvexPolyhedron cube = shapes::cube();
    GirthResult g = girth(cube);
    CHECK(g.perimeter == doctest::Approx(4.0).epsilon(1e-6));
    Vec3 d = g.direction;
    double largest = std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)});
    CHECK(largest > 1.0 - 1e-4);

    // Dense sweep: no direction beats the face normals.
    for (const Vec3& u : fibonacci_directions(100000))
        CHECK(projection_perimeter(cube, u) >= 4.0 - 1e-9);
}

TEST_CASE("girth of a refined ball approaches 2*pi") {
    GirthResult g = girth(shapes::icosphere(3));
    CHECK(g.perimeter == doctest::Approx(2.0 * M_PI).epsilon(0.01));
}

TEST_CASE("projection perimeter is bounded below by girth") {
    std::mt19937_64 rng(9);
    ConvexPolyhedron p = testutil::random_hull(rng, 60);
    GirthResult g = girth(p);
    for (const Vec3& u : fibonacci_directions(500))
        CHECK(projection_perimeter(p, u) >= g.perimeter - 1e-9);
}

TEST_CASE("mean width closed forms") {
    std::vector<Vec2> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(mean_width_2d(square) == doctest::Approx(4.0 / M_PI).epsilon(1e-12));

    std::vector<Vec2> hexagon;
    for (int i = 0; i < 6; ++i)
        hexagon.push_back({std::cos(i * M_PI / 3.0), std::sin(i * M_PI / 3.0)});
    CHECK(mean_width_2d(hexagon) == doctest::Approx(6.0 / M_PI).epsilon(1e-12));

    CHECK_THROWS_AS(mean_width_2d({{0, 0}, {1, 0}}), DegeneratePolygon);
    CHECK_THROWS_AS(mean_width_2d({{0, 0}, {1, 0}, {2, 0}}), DegeneratePolygon);
}

namespace {

std::vector<Vec2> hull2d_of_projection(const ConvexPolyhedron& p, const Vec3& u) {
    Vec3 e1 = normalized(cross(u, std::abs(u.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0}));
    Vec3 e2 = cross(u, e1);
    std::vector<Vec2> proj;
    for (const Vec3& v : p.vertices) proj.push_back({dot(e1, v), dot(e2, v)});
    std::sort(proj.begin(), proj.end(), [](const Vec2& a, const Vec2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::vector<Vec2> h(2 * proj.size());
    int k = 0;
    for (size_t i = 0; i < proj.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], proj[i] - h[k - 2]) <= 0) --k;
        h[k++] = proj[i];
    }
    for (int i = static_cast<int>(proj.size()) - 2, low = k + 1; i >= 0; --i) {
        while (k >= low && cross(h[k - 1] - h[k - 2], proj[i] - h[k - 2]) <= 0) --k;
        h[k++] = proj[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

TEST_CASE("Cauchy identity on random projections") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 100) {
        ConvexPolyhedron p = testutil::random_hull(rng, 30);
        Vec3 u = normalized(testutil::random_ball_points(rng, 1)[0]);
        double perim = projection_perimeter(p, u);
        std::vector<Vec2> polygon = hull2d_of_projection(p, u);
        if (polygon.size() < 3) continue;
        double mw = mean_width_2d(polygon);
        CHECK(std::abs(mw * M_PI - perim) < 1e-9 * perim);
        ++done;
    }
}

TEST_CASE("hausdorff distance to the unit ball") {
    // Cube with unit circumradius: the gap sits at the face centers.
    double r = 1.0 / std::sqrt(3.0);
    ConvexPolyhedron cube = apply_scale(centered_cube(), 2.0 * r, {0, 0, 0});
    HausdorffResult h = hausdorff_to_ball(cube);
    CHECK(h.outer == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(h.value == doctest::Approx(1.0 - r).epsilon(1e-9));

    HausdorffResult tiny = hausdorff_to_ball(shapes::icosphere(4));
    CHECK(tiny.value < 0.005);

    ConvexPolyhedron inflated = apply_scale(shapes::icosphere(3), 1.1, {0, 0, 0});
    HausdorffResult outer = hausdorff_to_ball(inflated);
    CHECK(outer.value == doctest::Approx(0.1).epsilon(1e-6));

    ConvexPolyhedron off = shapes::cube();  // origin on the boundary
    CHECK_THROWS_AS(hausdorff_to_ball(off), OriginNotInterior);
}

TEST_CASE("hausdorff is monotone under scaling away from 1") {
    ConvexPolyhedron ball = shapes::icosphere(2);
    double prev = hausdorff_to_ball(ball, 4000).value;
    for (double s : {1.03, 1.06, 1.1}) {
        double h = hausdorff_to_ball(apply_scale(ball, s, {0, 0, 0}), 4000).value;
        CHECK(h >= prev - 1e-12);
        prev = h;
    }
    prev = hausdorff_to_ball(ball, 4000).value;
    for (double s : {0.97, 0.94, 0.9}) {
        double h = hausdorff_to_ball(apply_scale(ball, s, {0, 0, 0}), 4000).value;
        CHECK(h >= prev - 1e-12);
        prev = h;
    }
}

TEST_CASE("n-fold symmetry residual") {
    ConvexPolyhedron cube = centered_cube();
    CHECK(nfold_symmetry_residual(cube, 4, {0, 0, 1}) < 1e-12);
    CHECK(nfold_symmetry_residual(cube, 3, {0, 0, 1}) > 0.1);
    // The long cube diagonal is a genuine 3-fold axis.
    CHECK(nfold_symmetry_residual(cube, 3, normalized({1, 1, 1})) < 1e-12);
}

TEST_CASE("metrics report carries the universal ratio bound") {
    MetricsOptions opts;
    opts.n_dir = 4000;
    opts.symmetry_order = 4;
    MetricsReport rep = compute_metrics(shapes::cube(), opts);
    CHECK(rep.ratio >= 1.0 / M_PI - 1e-6);
    CHECK(rep.diameter == doctest::Approx(std::sqrt(3.0)));
    CHECK(rep.girth == doctest::Approx(4.0).epsilon(1e-4));
    REQUIRE(rep.symmetry_residual.has_value());
    CHECK(*rep.symmetry_residual < 1e-12);
}
