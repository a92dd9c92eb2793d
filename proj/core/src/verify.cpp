#include "qpack/verify.hpp"

#include <cmath>
#include <random>

namespace qpack {

double uniform(std::uint64_t bits, double lo, double hi) {
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

namespace {

// smallest |bound - |det|| over active constraints; negative margins do not
// occur (the value is an absolute distance to the nearest boundary)
double min_abs_margin(const StripSpec& spec, const Vec& y) {
    const int n = spec.d() + 1;
    double best = std::numeric_limits<double>::infinity();
    for (const StripConstraint& c : spec.constraints) {
        if (!c.active) continue;
        double det = 0.0;
        for (int j = 0; j < n; ++j) det += y[c.indices[j]] * c.cofactors[j];
        best = std::min(best, std::abs(c.bound - std::abs(det)));
    }
    return best;
}

}  // namespace

OracleReport verify_oracle_equivalence(const StripSpec& spec, long long samples,
                                       std::uint64_t seed, double guard) {
    std::mt19937_64 rng(seed);
    const int k = spec.k();
    OracleReport rep;

    // count active constraints once, for boundary targeting
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < spec.constraints.size(); ++i)
        if (spec.constraints[i].active) active.push_back(i);

    for (long long s = 0; s < samples; ++s) {
        Vec y(k);
        for (int i = 0; i < k; ++i) y[i] = uniform(rng(), -1.5, 1.5);

        // every third sample is rescaled so one constraint sits near its
        // boundary (just past the guard band on either side)
        if (s % 3 == 2 && !active.empty()) {
            const StripConstraint& c = spec.constraints[active[rng() % active.size()]];
            const int n = spec.d() + 1;
            double det = 0.0;
            for (int j = 0; j < n; ++j) det += y[c.indices[j]] * c.cofactors[j];
            if (std::abs(det) > 1e-6) {
                const double offset = uniform(rng(), 2e-7, 1e-5);
                const bool outside = rng() & 1;
                const double target = c.bound + (outside ? offset : -offset);
                const double scale = target / std::abs(det);
                for (double& v : y) v *= scale;
            }
        }

        if (min_abs_margin(spec, y) <= guard) {
            ++rep.guard_banded;
            continue;
        }
        ++rep.tested;
        if (in_strip(spec, y) != slice_oracle(spec.embedding, y)) ++rep.mismatches;
    }
    return rep;
}

EmbeddingReport verify_embedding_invariants(const Embedding& emb) {
    EmbeddingReport rep;
    const double n2 = emb.row_norm * emb.row_norm;
    for (int a = 0; a < emb.d; ++a) {
        rep.max_spread = std::max(rep.max_spread,
                                  std::abs(norm(emb.rows[a]) - emb.row_norm) / emb.row_norm);
        for (int b = a + 1; b < emb.d; ++b)
            rep.max_cross = std::max(rep.max_cross, std::abs(dot(emb.rows[a], emb.rows[b])) / n2);
    }
    return rep;
}

}  // namespace qpack
