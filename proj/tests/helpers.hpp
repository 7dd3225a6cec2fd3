#pragma once

#include <random>
#include <vector>

#include "equilib/hull.hpp"
#include "equilib/polyhedron.hpp"

namespace testutil {

using equilib::Vec3;

inline std::vector<Vec3> random_ball_points(std::mt19937_64& rng, int count,
                                            double radius = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec3> pts;
    while (static_cast<int>(pts.size()) < count) {
        Vec3 p{u(rng), u(rng), u(rng)};
        if (norm2(p) <= 1.0) pts.push_back(p * radius);
    }
    return pts;
}

inline equilib::ConvexPolyhedron random_hull(std::mt19937_64& rng, int count) {
    return equilib::convex_hull(random_ball_points(rng, count));
}

// Uniform random rotation from two unit quaternion-ish draws (deterministic
// under the caller's rng). Rows are returned.
inline void random_rotation(std::mt19937_64& rng, Vec3& r0, Vec3& r1, Vec3& r2) {
    std::normal_distribution<double> g(0.0, 1.0);
    double q0 = g(rng), q1 = g(rng), q2 = g(rng), q3 = g(rng);
    double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    q0 /= n; q1 /= n; q2 /= n; q3 /= n;
    r0 = {1 - 2 * (q2 * q2 + q3 * q3), 2 * (q1 * q2 - q0 * q3), 2 * (q1 * q3 + q0 * q2)};
    r1 = {2 * (q1 * q2 + q0 * q3), 1 - 2 * (q1 * q1 + q3 * q3), 2 * (q2 * q3 - q0 * q1)};
    r2 = {2 * (q1 * q3 - q0 * q2), 2 * (q2 * q3 + q0 * q1), 1 - 2 * (q1 * q1 + q2 * q2)};
}

inline Vec3 rotate(const Vec3& r0, const Vec3& r1, const Vec3& r2, const Vec3& v) {
    return {dot(r0, v), dot(r1, v), dot(r2, v)};
}

}  // namespace testutil
