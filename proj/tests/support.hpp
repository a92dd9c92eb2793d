// Test-only oracles and helpers. Everything here is deliberately written
// against the definitions, not the production code paths it checks.
#pragma once

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpack/diffract.hpp"
#include "qpack/generate.hpp"
#include "qpack/strip.hpp"

namespace qpack::testing {

// Brute-force constraint bound: max over all sign vectors alpha in
// {-1/2,+1/2}^n of |sum alpha_j * cof_j|. The production code uses the
// closed form; this is the defining 2^n loop.
inline double brute_force_bound(const std::array<double, 4>& cof, int n) {
    double best = 0.0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += ((mask >> j) & 1 ? 0.5 : -0.5) * cof[j];
        best = std::max(best, std::abs(s));
    }
    return best;
}

// Exhaustive scan of the integer box |x_i - t_i| <= R+1 filtered by strip
// membership and the radius gate; the reference for BFS completeness.
inline std::vector<LatticeVec> box_scan(const StripSpec& spec) {
    const int k = spec.k();
    std::vector<int> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        lo[i] = static_cast<int>(std::floor(spec.translation[i] - (spec.radius + 1)));
        hi[i] = static_cast<int>(std::ceil(spec.translation[i] + (spec.radius + 1)));
    }
    std::vector<LatticeVec> found;
    LatticeVec x(lo.begin(), lo.end());
    while (true) {
        const Vec y = sub(to_vec(x), spec.translation);
        if (norm2(y) < spec.radius * spec.radius && in_strip(spec, y)) found.push_back(x);
        int i = 0;
        while (i < k && ++x[i] > hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == k) break;
    }
    return found;
}

// Independent diffraction oracle via std::complex accumulation.
inline double naive_intensity(const Pattern& pat, const Vec& xi) {
    std::complex<double> sum = 0.0;
    for (const ProjectedPoint& p : pat.points)
        sum += std::exp(std::complex<double>(0.0, dot(p.phys, xi)));
    return std::norm(sum);
}

struct RefPoint {
    double x, y;
    bool filled;
};

// Golden reference point sets for the shipped configurations
// (tests/data/*.csv: "x,y,filled" per line after a header).
inline std::vector<RefPoint> load_reference(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference file " + path);
    std::vector<RefPoint> pts;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string a, b, c;
        std::getline(ss, a, ',');
        std::getline(ss, b, ',');
        std::getline(ss, c, ',');
        pts.push_back({std::stod(a), std::stod(b), c == "1"});
    }
    return pts;
}

// Greedy bijective matching under a Chebyshev tolerance; sound here because
// the reference sets have minimum spacing far above tol. Returns the number
// of unmatched points (0 = multisets agree).
inline int multiset_mismatches(const std::vector<std::array<double, 2>>& mine,
                               const std::vector<RefPoint>& ref, double tol) {
    if (mine.size() != ref.size()) return static_cast<int>(mine.size() + ref.size());
    std::vector<bool> used(ref.size(), false);
    int misses = 0;
    for (const auto& m : mine) {
        bool hit = false;
        for (std::size_t j = 0; j < ref.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(m[0] - ref[j].x) <= tol && std::abs(m[1] - ref[j].y) <= tol) {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if (!hit) ++misses;
    }
    return misses;
}

}  // namespace qpack::testing
