#include "qpack/generate.hpp"

#include <cmath>
#include <deque>
#include <unordered_set>

namespace qpack {

namespace {

LatticeVec round_half_away(const Vec& t) {
    LatticeVec r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        r[i] = static_cast<int>(t[i] >= 0.0 ? std::floor(t[i] + 0.5)
                                            : std::ceil(t[i] - 0.5));
    return r;
}

}  // namespace

bool within_radius(const StripSpec& spec, const LatticeVec& x) {
    const Vec y = sub(to_vec(x), spec.translation);
    if (spec.radius_space == RadiusSpace::superspace)
        return norm2(y) < spec.radius * spec.radius;
    const Vec p = project_physical(spec.embedding, y);
    return norm2(p) < spec.radius * spec.radius;
}

FragmentResult enumerate_fragment(const StripSpec& spec) {
    const int k = spec.k();
    FragmentResult res;
    std::deque<LatticeVec> queue;
    std::unordered_set<LatticeVec, LatticeVecHash> seen;

    LatticeVec start = round_half_away(spec.translation);
    seen.insert(start);
    queue.push_back(std::move(start));

    while (!queue.empty() && res.analysed < spec.cap) {
        LatticeVec x = std::move(queue.front());
        queue.pop_front();
        ++res.analysed;
        if (!in_strip(spec, sub(to_vec(x), spec.translation))) continue;
        for (int i = 0; i < k; ++i)
            for (int step : {-1, 1}) {
                LatticeVec nb = x;
                nb[i] += step;
                if (seen.insert(nb).second) queue.push_back(std::move(nb));
            }
        res.points.push_back(std::move(x));
    }
    res.truncated = !queue.empty();
    return res;
}

int occupation(const StripSpec& spec, const LatticeVec& x) {
    const int k = spec.k();
    int n = 0;
    Vec y = sub(to_vec(x), spec.translation);
    for (int i = 0; i < k; ++i) {
        const double yi = y[i];
        for (int step : {-1, 1}) {
            y[i] = yi + step;
            if (in_strip(spec, y)) ++n;
        }
        y[i] = yi;
    }
    return n;
}

Pattern generate_standard(const StripSpec& spec, double eps_pos) {
    FragmentResult frag = enumerate_fragment(spec);
    Pattern pat;
    pat.info.method = Method::standard;
    pat.info.truncated = frag.truncated;
    pat.info.analysed = frag.analysed;
    pat.info.translation = spec.translation;
    pat.info.radius = spec.radius;
    pat.info.radius_space = spec.radius_space;
    pat.info.cap = spec.cap;
    pat.info.eps_pos = eps_pos;

    for (LatticeVec& x : frag.points) {
        if (!within_radius(spec, x)) continue;
        Vec pos = project_physical(spec.embedding, to_vec(x));
        bool dup = false;
        for (const ProjectedPoint& q : pat.points)
            if (dist(q.phys, pos) < eps_pos) { dup = true; break; }
        if (dup) continue;
        ProjectedPoint pp;
        pp.phys = std::move(pos);
        pp.occupation = occupation(spec, x);
        pp.source = std::move(x);
        pp.kind = PointKind::interior;
        pat.points.push_back(std::move(pp));
    }
    return pat;
}

}  // namespace qpack
