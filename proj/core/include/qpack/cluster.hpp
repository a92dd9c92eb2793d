#pragma once

#include <array>
#include <vector>

#include "qpack/linalg.hpp"

namespace qpack {

// Finite point groups supported for cluster construction: the planar cyclic
// groups C_n (n >= 3) acting on R^2 and the icosahedral rotation group acting
// on R^3.
struct GroupSpec {
    enum class Kind { cyclic, icosahedral };

    Kind kind = Kind::cyclic;
    int n = 0;  // cyclic order; unused for icosahedral

    static GroupSpec cyclic(int n) { return {Kind::cyclic, n}; }
    static GroupSpec icosahedral() { return {Kind::icosahedral, 0}; }

    int dimension() const { return kind == Kind::cyclic ? 2 : 3; }
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// A symmetric cluster {+-v_1, ..., +-v_k} stored as one representative per
// antipodal pair. Guaranteed by build_cluster: no two representatives equal
// or antipodal, the symmetric set is closed under the group action, k >= d.
struct GCluster {
    int d = 0;
    std::vector<Vec> reps;  // each of size d

    int k() const { return static_cast<int>(reps.size()); }
};

// Orbit of a nonzero seed under C_n; exactly n points a^j(seed) ordered by j,
// where a rotates by 2*pi/n. Throws std::invalid_argument for n < 3 or a
// zero seed.
std::vector<Vec> cyclic_orbit(int n, const Vec& seed);

// All 60 rotations of the icosahedral group, closed from the two standard
// generators (5-fold and 2-fold). Element 0 is the identity; the rest follow
// breadth-first discovery order, which is deterministic.
const std::vector<Mat3>& icosahedral_group();

// Distinct images of a nonzero seed under the icosahedral group, sorted
// lexicographically. Sizes are 12, 20, 30 or 60 depending on the seed axis.
std::vector<Vec> icosahedral_orbit(const Vec& seed);

// Union of the orbits of all seeds, symmetrized (v and -v both present) and
// reduced to one representative per antipodal pair. Cyclic representatives
// are the upper-half-plane points in ascending-angle order, matching the
// conventional basis for one-shell clusters; icosahedral representatives are
// the lexicographically larger point of each pair, sorted per orbit.
// Coincident points across seeds merge silently.
GCluster build_cluster(const GroupSpec& group, const std::vector<Vec>& seeds);

// True iff applying every group generator maps the symmetric set {+-v_i}
// onto itself within tol (relative to the largest point norm).
bool cluster_is_group_invariant(const GCluster& cluster, const GroupSpec& group,
                                double tol = 1e-9);

}  // namespace qpack
