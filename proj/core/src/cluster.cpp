#include "qpack/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpack {

namespace {

constexpr double kMatTol = 1e-9;  // dedup tolerance for rotation matrices

Vec mat_apply(const Mat3& m, const Vec& v) {
    Vec r(3, 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
    return r;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int l = 0; l < 3; ++l) s += a[i][l] * b[l][j];
            r[i][j] = s;
        }
    return r;
}

bool mat_close(const Mat3& a, const Mat3& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(a[i][j] - b[i][j]) > kMatTol) return false;
    return true;
}

bool points_close(const Vec& a, const Vec& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

bool points_antipodal(const Vec& a, const Vec& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] + b[i]) > tol) return false;
    return true;
}

double max_norm(const std::vector<Vec>& pts) {
    double m = 0.0;
    for (const auto& p : pts) m = std::max(m, norm(p));
    return m;
}

// Lexicographic "larger" with fuzzy equality, so that +-0 noise from group
// multiplication cannot flip the choice.
bool lex_greater(const Vec& a, const Vec& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) <= tol) continue;
        return a[i] > b[i];
    }
    return false;
}

// One representative per antipodal pair of a symmetric point set.
std::vector<Vec> antipodal_reps(const std::vector<Vec>& sym, double tol,
                                bool upper_half_plane) {
    std::vector<Vec> reps;
    std::vector<bool> used(sym.size(), false);
    for (std::size_t i = 0; i < sym.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::size_t partner = sym.size();
        for (std::size_t j = i + 1; j < sym.size(); ++j) {
            if (!used[j] && points_antipodal(sym[i], sym[j], tol)) {
                partner = j;
                used[j] = true;
                break;
            }
        }
        if (partner == sym.size())
            throw std::logic_error("antipodal_reps: unpaired point in symmetric set");
        const Vec& a = sym[i];
        const Vec& b = sym[partner];
        if (upper_half_plane) {
            // keep the point with angle in [0, pi): y > 0, or y ~ 0 and x > 0
            const Vec& up = (a[1] > tol || (std::abs(a[1]) <= tol && a[0] > 0)) ? a : b;
            reps.push_back(up);
        } else {
            reps.push_back(lex_greater(a, b, tol) ? a : b);
        }
    }
    return reps;
}

}  // namespace

std::vector<Vec> cyclic_orbit(int n, const Vec& seed) {
    if (n < 3) throw std::invalid_argument("cyclic_orbit: group order must be >= 3");
    if (seed.size() != 2) throw std::invalid_argument("cyclic_orbit: seed must be 2-dimensional");
    if (norm(seed) == 0.0) throw std::invalid_argument("cyclic_orbit: seed must be nonzero");
    const double step = 2.0 * std::numbers::pi / n;
    const double c = std::cos(step), s = std::sin(step);
    std::vector<Vec> orbit;
    orbit.reserve(n);
    Vec p = seed;
    for (int j = 0; j < n; ++j) {
        orbit.push_back(p);
        p = {c * p[0] - s * p[1], s * p[0] + c * p[1]};
    }
    return orbit;
}

const std::vector<Mat3>& icosahedral_group() {
    static const std::vector<Mat3> group = [] {
        const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
        const Mat3 a = {{{(tau - 1) / 2, -tau / 2, 0.5},
                         {tau / 2, 0.5, (tau - 1) / 2},
                         {-0.5, (tau - 1) / 2, tau / 2}}};
        const Mat3 b = {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
        const Mat3 id = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        std::vector<Mat3> elems = {id};
        // breadth-first closure under left multiplication by the generators
        for (std::size_t head = 0; head < elems.size(); ++head) {
            for (const Mat3& g : {a, b}) {
                Mat3 c = mat_mul(g, elems[head]);
                bool known = false;
                for (const Mat3& e : elems)
                    if (mat_close(c, e)) { known = true; break; }
                if (!known) elems.push_back(c);
            }
        }
        return elems;
    }();
    return group;
}

std::vector<Vec> icosahedral_orbit(const Vec& seed) {
    if (seed.size() != 3) throw std::invalid_argument("icosahedral_orbit: seed must be 3-dimensional");
    if (norm(seed) == 0.0) throw std::invalid_argument("icosahedral_orbit: seed must be nonzero");
    const double tol = 1e-9 * norm(seed);
    std::vector<Vec> orbit;
    for (const Mat3& g : icosahedral_group()) {
        Vec p = mat_apply(g, seed);
        bool known = false;
        for (const Vec& q : orbit)
            if (points_close(p, q, tol)) { known = true; break; }
        if (!known) orbit.push_back(std::move(p));
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

GCluster build_cluster(const GroupSpec& group, const std::vector<Vec>& seeds) {
    if (seeds.empty()) throw std::invalid_argument("build_cluster: at least one seed required");
    const int d = group.dimension();
    for (const Vec& s : seeds) {
        if (static_cast<int>(s.size()) != d)
            throw std::invalid_argument("build_cluster: seed dimension does not match the group");
        if (norm(s) == 0.0) throw std::invalid_argument("build_cluster: seeds must be nonzero");
    }

    GCluster cluster;
    cluster.d = d;
    for (const Vec& s : seeds) {
        std::vector<Vec> orbit = (group.kind == GroupSpec::Kind::cyclic)
                                     ? cyclic_orbit(group.n, s)
                                     : icosahedral_orbit(s);
        // symmetric closure; a no-op when the orbit already contains -v
        const double tol = 1e-9 * max_norm(orbit);
        std::vector<Vec> sym = orbit;
        for (const Vec& p : orbit) {
            Vec m(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) m[i] = -p[i];
            bool known = false;
            for (const Vec& q : sym)
                if (points_close(m, q, tol)) { known = true; break; }
            if (!known) sym.push_back(std::move(m));
        }
        std::vector<Vec> reps =
            antipodal_reps(sym, tol, group.kind == GroupSpec::Kind::cyclic);
        if (group.kind == GroupSpec::Kind::cyclic) {
            std::sort(reps.begin(), reps.end(), [](const Vec& a, const Vec& b) {
                return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
            });
        } else {
            std::sort(reps.begin(), reps.end());
        }
        // merge with previous shells, dropping coincident or antipodal dups
        for (Vec& r : reps) {
            bool known = false;
            for (const Vec& q : cluster.reps)
                if (points_close(r, q, tol) || points_antipodal(r, q, tol)) {
                    known = true;
                    break;
                }
            if (!known) cluster.reps.push_back(std::move(r));
        }
    }
    if (cluster.reps.empty())
        throw std::invalid_argument("build_cluster: empty cluster");
    if (cluster.k() < d)
        throw std::invalid_argument("build_cluster: cluster needs at least d independent pairs");
    return cluster;
}

bool cluster_is_group_invariant(const GCluster& cluster, const GroupSpec& group,
                                double tol) {
    const double eps = tol * max_norm(cluster.reps);
    std::vector<Vec> sym = cluster.reps;
    for (const Vec& v : cluster.reps) {
        Vec m(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) m[i] = -v[i];
        sym.push_back(std::move(m));
    }
    auto in_set = [&](const Vec& p) {
        for (const Vec& q : sym)
            if (points_close(p, q, eps)) return true;
        return false;
    };
    if (group.kind == GroupSpec::Kind::cyclic) {
        const double step = 2.0 * std::numbers::pi / group.n;
        const double c = std::cos(step), s = std::sin(step);
        for (const Vec& p : sym)
            if (!in_set({c * p[0] - s * p[1], s * p[0] + c * p[1]})) return false;
    } else {
        const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
        const Mat3 a = {{{(tau - 1) / 2, -tau / 2, 0.5},
                         {tau / 2, 0.5, (tau - 1) / 2},
                         {-0.5, (tau - 1) / 2, tau / 2}}};
        const Mat3 b = {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
        for (const Mat3& g : {a, b})
            for (const Vec& p : sym)
                if (!in_set(mat_apply(g, p))) return false;
    }
    return true;
}

}  // namespace qpack
