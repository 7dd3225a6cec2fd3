#include "equilib/construct.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "equilib/clip.hpp"
#include "equilib/errors.hpp"
#include "equilib/hull.hpp"
#include "equilib/metrics.hpp"

namespace equilib {

bool chain_feasible(const ChainSpec& spec) {
    if (!(spec.beta > 0 && spec.beta < M_PI)) return false;
    if (!(spec.target_radius > 0 && spec.target_radius < 1)) return false;
    if (spec.k < 1) return false;
    return std::pow(std::cos(spec.beta / spec.k), spec.k) > spec.target_radius;
}

std::vector<Vec2> conway_chain(const ChainSpec& spec) {
    if (!(spec.beta > 0 && spec.beta < M_PI))
        throw InfeasibleChain("beta must lie in (0, pi)");
    if (!(spec.target_radius > 0 && spec.target_radius < 1))
        throw InfeasibleChain("target radius must lie in (0, 1)");
    if (spec.k < 1) throw InfeasibleChain("k must be positive");

    const double step = spec.beta / spec.k;
    const double raw_end = std::pow(std::cos(step), spec.k);
    if (!(raw_end > spec.target_radius))
        throw InfeasibleChain("cos^k(beta/k) <= target radius; raise k");

    // Raw radii cos^i(beta/k) put each point on the Thales circle of the
    // previous one (right angle); shrinking by a uniform geometric factor
    // makes every angle strictly obtuse and lands exactly on the target.
    const double shrink = std::pow(spec.target_radius / raw_end, 1.0 / spec.k);
    const double ratio = std::cos(step) * shrink;

    std::vector<Vec2> pts;
    pts.reserve(spec.k + 1);
    double r = 1.0;
    for (int i = 0; i <= spec.k; ++i) {
        double ang = i * step;
        pts.push_back({r * std::cos(ang), r * std::sin(ang)});
        r *= ratio;
    }
    return pts;
}

namespace {

struct ProfileSchedule {
    double rim_frac = 0.5;    // rim radius = 1 - rim_frac * eps
    double apex_frac = 0.5;   // apex radius = 1 + apex_frac * eps
    double depth_frac = 0.8;  // bottom plane kept at distance >= 1 - depth_frac * eps
    double sigma_scale = 0.95;
};

std::vector<Vec2> profile_impl(double eps, int k, const ProfileSchedule& sch) {
    if (!(eps > 0 && eps < 0.5)) throw InfeasibleProfile("eps must lie in (0, 0.5)");
    if (k < 1) throw InfeasibleProfile("k must be positive");

    const double r_rim = 1.0 - sch.rim_frac * eps;
    const double r_apex = 1.0 + sch.apex_frac * eps;
    // Rim polar angle: keep the bottom plane within the Hausdorff budget.
    const double sigma =
        sch.sigma_scale * std::acos(std::min(1.0, (1.0 - sch.depth_frac * eps) / r_rim));
    const double theta_rim = M_PI - sigma;

    const double step = theta_rim / k;
    const double ratio = r_rim / r_apex;
    if (!(std::pow(std::cos(step), k) > ratio))
        throw InfeasibleProfile("k too small for an obtuse monotone profile; raise k");

    const double growth = std::pow(r_apex / r_rim, 1.0 / k);
    std::vector<Vec2> pts;
    pts.reserve(k + 1);
    double r = r_rim;
    for (int i = 0; i <= k; ++i) {
        double theta = theta_rim * (1.0 - double(i) / k);
        if (i == k) theta = 0.0;
        pts.push_back({r * std::sin(theta), r * std::cos(theta)});
        r *= growth;
    }
    return pts;
}

struct SpikeSchedule {
    double ring_angle = M_PI / 3.0;  // target polar angle of the spike ring
    double reach_frac = 0.75;        // spike tips reach 1 + reach_frac * eps
};

std::vector<Vec3> candidate_cloud(int n, int s, double eps, int k,
                                  GeneratorMode mode, const ProfileSchedule& prof,
                                  const SpikeSchedule& spikes) {
    const int m = n * s;
    std::vector<Vec2> profile = profile_impl(eps, k, prof);

    std::vector<Vec3> pts;
    pts.reserve(static_cast<size_t>(m) * k + 1 + (mode == GeneratorMode::NSpikes ? n : 0));
    for (int i = 0; i < k; ++i) {  // last profile point is the axis apex
        double rho = profile[i].x, z = profile[i].y;
        for (int j = 0; j < m; ++j) {
            double phi = 2.0 * M_PI * j / m;
            pts.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
        }
    }
    pts.push_back({0.0, 0.0, profile[k].y});

    if (mode == GeneratorMode::NSpikes) {
        // Ring closest to the requested polar angle, above the equator.
        int ring = 1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 1; i + 1 < static_cast<int>(profile.size()); ++i) {
            double theta = std::atan2(profile[i].x, profile[i].y);
            double diff = std::abs(theta - spikes.ring_angle);
            if (diff < best) {
                best = diff;
                ring = i;
            }
        }
        double rho = profile[ring].x, z = profile[ring].y;
        double radius = std::hypot(rho, z);
        double lift = (1.0 + spikes.reach_frac * eps) / radius;
        for (int t = 0; t < n; ++t) {
            double phi = 2.0 * M_PI * (t * s) / m;
            pts.push_back({lift * rho * std::cos(phi), lift * rho * std::sin(phi),
                           lift * z});
        }
    }
    return pts;
}

int auto_k(double eps, const ProfileSchedule& sch) {
    const double r_rim = 1.0 - sch.rim_frac * eps;
    const double r_apex = 1.0 + sch.apex_frac * eps;
    const double sigma =
        sch.sigma_scale * std::acos(std::min(1.0, (1.0 - sch.depth_frac * eps) / r_rim));
    const double theta = M_PI - sigma;
    // ln cos^k(theta/k) ~ -theta^2 / (2k); require it above ln(r_rim/r_apex).
    double need = theta * theta / (2.0 * std::log(r_apex / r_rim));
    int k = 8;
    while (k < 1.3 * need) k *= 2;
    return k;
}

int auto_s(double eps, int n) {
    // Azimuthal chords of the flank must stay within the Hausdorff budget.
    double arg = (1.0 - 0.9 * eps) / (1.0 - 0.5 * eps);
    double max_step = std::acos(std::min(1.0, arg));
    int m = std::max(8, static_cast<int>(std::ceil(M_PI / max_step)));
    return std::max(1, (m + n - 1) / n);
}

}  // namespace

std::vector<Vec2> monotone_profile(double eps, int k) {
    return profile_impl(eps, k, ProfileSchedule{});
}

GeneratorResult generate_monostable(const GeneratorParams& params) {
    if (params.n < 3) throw DegenerateInput("symmetry order must be at least 3");
    if (!(params.eps > 0 && params.eps < 0.5))
        throw DegenerateInput("eps must lie in (0, 0.5)");
    if (params.max_attempts < 1) throw DegenerateInput("max_attempts must be positive");

    ProfileSchedule prof;
    SpikeSchedule spikes;
    int s = params.s > 0 ? params.s : auto_s(params.eps, params.n);
    if (params.n * s < 8) s = (8 + params.n - 1) / params.n;
    int k = params.k > 0 ? params.k : auto_k(params.eps, prof);

    std::mt19937_64 rng(params.seed);
    std::ostringstream diag;
    bool bump_k = true;

    for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
        std::string failure;
        try {
            std::vector<Vec3> cloud =
                candidate_cloud(params.n, s, params.eps, k, params.mode, prof, spikes);
            ConvexPolyhedron poly = convex_hull(cloud);
            MassProperties mp = mass_properties(poly);
            double off_axis = std::hypot(mp.centroid.x, mp.centroid.y);
            if (off_axis > poly.eps_abs())
                throw DegenerateGeometry("centroid left the symmetry axis");

            EquilibriumReport rep = classify_equilibria(poly, mp.centroid);
            HausdorffResult haus = hausdorff_to_ball(poly);
            double sym = nfold_symmetry_residual(poly, params.n, {0, 0, 1});

            if (!rep.any_degenerate && rep.S == 1 && haus.value < params.eps &&
                sym < kSymmetryEps) {
                GeneratorResult res;
                res.polyhedron = std::move(poly);
                res.report = std::move(rep);
                res.hausdorff = haus.value;
                res.symmetry_residual = sym;
                res.attempts = attempt;
                res.k = k;
                res.s = s;
                return res;
            }
            std::ostringstream why;
            why << "census (" << rep.S << "," << rep.H << "," << rep.U << ")"
                << (rep.any_degenerate ? " degenerate" : "") << ", hausdorff "
                << haus.value << ", symmetry " << sym;
            failure = why.str();
        } catch (const InfeasibleProfile& e) {
            failure = e.what();
        } catch (const DegenerateGeometry& e) {
            failure = e.what();
        }

        diag << "attempt " << attempt << " (k=" << k << ", s=" << s << "): " << failure
             << "\n";

        // Both refinements enlarge the feasible region; alternate them and
        // jitter the radial schedule.
        if (bump_k) k *= 2; else s += 1;
        bump_k = !bump_k;
        std::uniform_real_distribution<double> jitter(-1.0, 1.0);
        prof.apex_frac = std::clamp(0.5 + 0.1 * jitter(rng), 0.35, 0.6);
        prof.depth_frac = std::clamp(0.8 + 0.05 * jitter(rng), 0.7, 0.9);
        if (params.mode == GeneratorMode::NSpikes) {
            spikes.reach_frac = std::clamp(0.75 + 0.1 * jitter(rng), 0.55, 0.9);
            spikes.ring_angle = std::clamp(M_PI / 3.0 + 0.2 * jitter(rng), M_PI / 6.0,
                                           0.45 * M_PI);
        }
    }
    throw GenerationFailed("no candidate met the targets within max_attempts",
                           diag.str());
}

ConvexPolyhedron cone_extension(const ConvexPolyhedron& poly, int face, double tau,
                                double eps_rel) {
    if (tau < 0) throw DegenerateInput("tau must be non-negative");
    if (tau == 0) return poly;
    const double eps = poly.eps_abs(eps_rel);

    Vec3 w = poly.face_centroid(face);
    Vec3 apex = w * (1.0 + tau);
    if (poly.planes[face].signed_distance(apex) <= eps)
        throw DegenerateInput("face plane passes through the origin; apex does not rise");
    for (int f = 0; f < poly.face_count(); ++f) {
        if (f == face) continue;
        if (poly.planes[f].signed_distance(apex) > eps)
            throw ConvexityLoss("apex sees past the base face; tau too large");
    }

    std::vector<Vec3> pts = poly.vertices;
    pts.push_back(apex);
    return convex_hull(pts, eps_rel);
}

bool truncation_safety(const ConvexPolyhedron& poly, const Vec3& c,
                       const HalfSpace& h, double eps_rel) {
    ConvexPolyhedron cut = clip(poly, h, eps_rel);
    if (cut.vertex_count() == poly.vertex_count() &&
        cut.face_count() == poly.face_count())
        return true;  // the plane missed the body, nothing was created

    const double eps = cut.eps_abs(eps_rel);
    EquilibriumReport rep = classify_equilibria(cut, c, eps_rel);

    auto on_plane = [&](int vi) {
        return std::abs(h.plane.signed_distance(cut.vertices[vi])) <= eps;
    };
    for (const EquilibriumPoint& p : rep.points) {
        switch (p.kind) {
            case FeatureKind::Face:
                for (int vi : cut.faces[p.feature])
                    if (on_plane(vi)) return false;
                break;
            case FeatureKind::Edge:
                if (on_plane(cut.edges[p.feature].v0) || on_plane(cut.edges[p.feature].v1))
                    return false;
                break;
            case FeatureKind::Vertex:
                if (on_plane(p.feature)) return false;
                break;
        }
    }
    return true;
}

}  // namespace equilib
