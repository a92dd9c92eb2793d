#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qpack/embed.hpp"
#include "qpack/linalg.hpp"

namespace qpack {

// One face-family constraint of the selection strip. The strip membership
// determinant for a point y restricted to the columns `indices` expands as
// sum_j y[indices[j]] * cofactors[j]; the point is inside this slab iff the
// absolute value stays within `bound`. Degenerate families (all cofactors
// zero, bound ~ 0) have an identically vanishing determinant and are skipped.
struct StripConstraint {
    std::array<int, 4> indices{};      // d+1 used entries, increasing
    std::array<double, 4> cofactors{};  // signed minors of the row matrix
    double bound = 0.0;
    bool active = true;
};

enum class RadiusSpace { superspace, physical };

// The translated strip plus the enumeration parameters of a run.
struct StripSpec {
    Embedding embedding;
    std::vector<StripConstraint> constraints;  // C(k, d+1), lexicographic
    Vec translation;                           // length k
    double radius = 0.0;                       // enumeration radius, > 0
    RadiusSpace radius_space = RadiusSpace::superspace;
    long long cap = 1;                         // max lattice points analysed

    int d() const { return embedding.d; }
    int k() const { return embedding.k; }
};

// One constraint per increasing (d+1)-tuple of column indices. Cofactor j is
// the signed d x d minor of the row matrix at the tuple with column j
// removed; the bound is the maximum of |sum_j alpha_j * cofactor_j| over
// vertex sign vectors alpha in {-1/2,+1/2}^(d+1), evaluated in closed form
// as half the cofactor 1-norm. Families with bound <= 1e-12 * row_norm^d are
// marked inactive.
std::vector<StripConstraint> build_constraints(const Embedding& emb);

// True iff y lies in the (untranslated) strip: every active constraint
// satisfies |det| <= bound, with closed comparisons and no epsilon. Callers
// test a translated strip by passing y = x - t.
bool in_strip(const StripSpec& spec, const Vec& y);

// Independent geometric oracle for in_strip: decides whether the affine
// d-plane {y - sum_a c_a w_a} meets the unit hypercube [-1/2,1/2]^k by exact
// low-dimensional feasibility. d=2 uses successive convex polygon clipping
// in the plane of projection coefficients; d=3 enumerates vertices over
// triples of the 2k bounding planes with feasibility filtering. Agreement
// with in_strip is a tested property, never assumed.
bool slice_oracle(const Embedding& emb, const Vec& y);

StripSpec make_strip_spec(const Embedding& emb, Vec translation, double radius,
                          long long cap,
                          RadiusSpace space = RadiusSpace::superspace);

}  // namespace qpack
