#pragma once

#include <cstdint>

#include "qpack/strip.hpp"

namespace qpack {

// Self-check machinery shared by the `verify` command and the acceptance
// suite: the determinant membership test against the geometric slice oracle,
// and the embedding orthogonality invariants.

struct OracleReport {
    long long tested = 0;       // samples with margin outside the guard band
    long long mismatches = 0;   // in_strip != slice_oracle among tested
    long long guard_banded = 0; // samples skipped (some |margin| <= guard)

    bool ok() const { return mismatches == 0; }
};

// Compares in_strip with slice_oracle on `samples` points: uniform draws in
// [-1.5, 1.5]^k plus points rescaled to sit just outside the guard band of a
// constraint boundary. Deterministic for a fixed seed.
OracleReport verify_oracle_equivalence(const StripSpec& spec, long long samples,
                                       std::uint64_t seed = 20240915,
                                       double guard = 1e-7);

struct EmbeddingReport {
    double max_cross = 0.0;   // max |<w_a, w_b>| / row_norm^2 over a != b
    double max_spread = 0.0;  // max | |w_a| - row_norm | / row_norm

    bool ok(double tol = 1e-9) const { return max_cross <= tol && max_spread <= tol; }
};

EmbeddingReport verify_embedding_invariants(const Embedding& emb);

// Uniform double in [lo, hi) from a 64-bit generator; bit-stable across
// platforms, unlike std::uniform_real_distribution.
double uniform(std::uint64_t bits, double lo, double hi);

}  // namespace qpack
