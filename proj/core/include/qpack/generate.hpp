#pragma once

#include <string>
#include <vector>

#include "qpack/strip.hpp"

namespace qpack {

// How a point entered the pattern. Standard enumeration emits `interior`
// points only; the modified method adds the other three.
enum class PointKind { interior, center, completion, admitted };

struct ProjectedPoint {
    Vec phys;            // scaled physical coordinates, = project_physical(source)
    LatticeVec source;   // lattice point it was projected from
    int occupation = 0;  // neighbours of source inside the translated strip
    PointKind kind = PointKind::interior;
};

enum class Method { standard, modified };

struct PatternInfo {
    Method method = Method::standard;
    bool truncated = false;  // enumeration stopped by cap with work pending
    long long analysed = 0;  // lattice points dequeued
    Vec translation;
    double radius = 0.0;
    RadiusSpace radius_space = RadiusSpace::superspace;
    long long cap = 0;
    double eps_pos = 1e-4;
    // modified-method parameters (0 when standard)
    double p = 0.0;
    double delta = 0.0;
    // provenance: the orbit seeds the cluster was built from (set by callers
    // that know them; empty when a pattern is built directly from a spec)
    std::vector<Vec> cluster_seeds;
};

struct Pattern {
    PatternInfo info;
    std::vector<ProjectedPoint> points;

    std::size_t size() const { return points.size(); }
};

struct FragmentResult {
    std::vector<LatticeVec> points;  // in-strip dequeued points, dequeue order
    long long analysed = 0;
    bool truncated = false;
};

// Breadth-first walk of the translated strip. The queue starts at the
// component-wise round of the translation (half away from zero); dequeued
// points are tested against the strip, and in-strip points enqueue their 2k
// arithmetic neighbours in axis order with the -1 step before +1, skipping
// anything already queued or processed. Out-of-strip points are dead ends.
// Stops after `cap` dequeues (truncated) or when the queue drains.
FragmentResult enumerate_fragment(const StripSpec& spec);

// Number of the 2k arithmetic neighbours of x inside the translated strip.
int occupation(const StripSpec& spec, const LatticeVec& x);

// Standard strip projection: project every enumerated in-strip point that
// passes the radius gate, skipping positions that duplicate an earlier one
// within eps_pos. Emission order is enumeration order.
Pattern generate_standard(const StripSpec& spec, double eps_pos = 1e-4);

// Radius gate on x - t: superspace squared norm by default, physical when
// configured. Strict comparison, matching the reference semantics.
bool within_radius(const StripSpec& spec, const LatticeVec& x);

}  // namespace qpack
