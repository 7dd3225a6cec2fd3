#pragma once

#include <vector>

#include "equilib/equilibria.hpp"
#include "equilib/polyhedron.hpp"

namespace equilib {

struct RollStep {
    bool rest = false;
    int next_face = -1;
    int tipped_edge = -1;
};

struct RollTrace {
    std::vector<int> faces;         // resting sequence, first = start face
    std::vector<double> potentials; // distance from c to each resting plane
    std::vector<int> tipped_edges;
    double arc_length = 0;          // rolling contact path of the reference point
};

// One quasi-static tipping step: rest when the perpendicular foot of c lies
// in the face's relative interior, otherwise tip across the most violated
// edge into the neighbouring face.
RollStep roll_step(const ConvexPolyhedron& poly, const Vec3& c, int face,
                   double eps_rel = kGeomEpsRel);

// Iterates roll_step until rest. Potentials decrease strictly; the step count
// is capped at 10 * face count.
RollTrace roll_trace(const ConvexPolyhedron& poly, const Vec3& c, int start_face,
                     double eps_rel = kGeomEpsRel);

// True iff exactly one face is a stable equilibrium relative to the centroid
// and every roll trace terminates on it.
bool monostable_oracle(const ConvexPolyhedron& poly, double eps_rel = kGeomEpsRel);

}  // namespace equilib
