#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equilib/equilibria.hpp"
#include "equilib/polyhedron.hpp"

namespace equilib {

// Planar chain x_0..x_k with strictly decreasing distance from the origin and
// every angle x_{i-1} x_i o strictly obtuse.
struct ChainSpec {
    double beta = 0;           // polar angle swept by the chain, in (0, pi)
    double target_radius = 0;  // |x_k|, in (0, 1)
    int k = 1;                 // number of chain steps
};

// Feasibility boundary of the chain construction: the raw step radii are
// cos^i(beta/k), so the shrunk chain exists iff cos^k(beta/k) > target.
bool chain_feasible(const ChainSpec& spec);

// Returns k+1 points, x_0 = (1, 0), x_i at polar angle i*beta/k, radii
// strictly decreasing to target_radius. Throws InfeasibleChain.
std::vector<Vec2> conway_chain(const ChainSpec& spec);

// Meridian profile in the (distance-from-axis, z) half-plane: from a bottom
// rim point near polar angle pi at radius 1 - eps/2 up to an apex on the
// positive axis, radius strictly increasing, every consecutive triple obtuse
// in the reversed orientation, all points within [1 - eps, 1 + eps].
std::vector<Vec2> monotone_profile(double eps, int k);

enum class GeneratorMode { AxisApex, NSpikes };

struct GeneratorParams {
    int n = 3;           // required rotational symmetry order
    int s = 0;           // azimuthal refinement, m = n*s facets per ring; 0 = auto
    double eps = 0.25;   // Hausdorff budget to the unit ball, in (0, 0.5)
    int k = 0;           // meridian chain steps; 0 = auto
    GeneratorMode mode = GeneratorMode::AxisApex;
    int max_attempts = 16;
    std::uint64_t seed = 0;  // drives retry perturbations only
};

struct GeneratorResult {
    ConvexPolyhedron polyhedron;
    EquilibriumReport report;  // relative to its own centroid
    double hausdorff = 0;
    double symmetry_residual = 0;
    int attempts = 0;
    int k = 0, s = 0;  // accepted refinement parameters
};

inline constexpr double kSymmetryEps = 1e-9;

// Builds a homogeneous monostable polyhedron with an n-fold rotational
// symmetry about the z-axis and Hausdorff distance to the unit ball below
// eps. Candidates are constructed from the revolved monotone profile and
// verified with the classifier; refinement is raised and the schedule
// perturbed on failure. Throws GenerationFailed after max_attempts.
GeneratorResult generate_monostable(const GeneratorParams& params);

// conv(P with the face's centroid pushed out to (1+tau) of its position).
// All faces other than `face` are preserved exactly. Throws ConvexityLoss
// when the apex sees past the face's neighbours.
ConvexPolyhedron cone_extension(const ConvexPolyhedron& poly, int face, double tau,
                                double eps_rel = kGeomEpsRel);

// True iff clipping by h creates no equilibrium relative to c whose feature
// touches the cutting plane.
bool truncation_safety(const ConvexPolyhedron& poly, const Vec3& c,
                       const HalfSpace& h, double eps_rel = kGeomEpsRel);

}  // namespace equilib
