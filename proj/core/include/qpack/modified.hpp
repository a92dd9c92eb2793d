#pragma once

#include "qpack/generate.hpp"

namespace qpack {

// Parameters of the modified projection: a center whose occupation exceeds
// p% of the 2k cluster points gets all its arithmetic neighbours projected
// (inside or outside the strip); anything below is admitted only when at
// least `delta` away from every point already in the pattern.
struct ModifiedConfig {
    StripSpec spec;
    double p = 50.0;      // percentage threshold, in (0, 100]
    double delta = 0.0;   // minimum admission distance, physical units
    double eps_pos = 1e-4;
};

// Minimum nonzero pairwise distance among the 2k points {+-v_i}; the default
// admission distance is half of this.
double min_cluster_distance(const GCluster& cluster);

// Occupation-ordered projection. Centers are the standard fragment's points
// sorted by occupation descending (ties: ascending lattice coordinates).
// High-occupancy centers emit their own projection plus all 2k neighbour
// projections, deduplicated at eps_pos; low-occupancy centers pass the
// delta admission test instead. Completion points are exempt from the
// radius gate and from the delta test.
Pattern generate_modified(const ModifiedConfig& cfg);

}  // namespace qpack
