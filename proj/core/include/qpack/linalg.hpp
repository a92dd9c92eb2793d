#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace qpack {

using Vec = std::vector<double>;
using LatticeVec = std::vector<int>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec to_vec(const LatticeVec& x) {
    return Vec(x.begin(), x.end());
}

inline double dist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// FNV-1a over the raw coordinates; lattice points are small ints.
struct LatticeVecHash {
    std::size_t operator()(const LatticeVec& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int c : v) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace qpack
