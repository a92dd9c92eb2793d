#include "qpack/modified.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qpack {

double min_cluster_distance(const GCluster& cluster) {
    const auto& reps = cluster.reps;
    double best = std::numeric_limits<double>::infinity();
    // distances within {+-v}: |v_i - v_j|, |v_i + v_j|, and 2|v_i|
    for (std::size_t i = 0; i < reps.size(); ++i) {
        best = std::min(best, 2.0 * norm(reps[i]));
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            double dm = 0.0, dp = 0.0;
            for (std::size_t a = 0; a < reps[i].size(); ++a) {
                const double m = reps[i][a] - reps[j][a];
                const double p = reps[i][a] + reps[j][a];
                dm += m * m;
                dp += p * p;
            }
            best = std::min({best, std::sqrt(dm), std::sqrt(dp)});
        }
    }
    return best;
}

Pattern generate_modified(const ModifiedConfig& cfg) {
    if (cfg.p <= 0.0 || cfg.p > 100.0)
        throw std::invalid_argument("generate_modified: p must be in (0, 100]");
    if (cfg.delta < cfg.eps_pos)
        throw std::invalid_argument(
            "generate_modified: delta below eps_pos makes the admission rule vacuous");

    const StripSpec& spec = cfg.spec;
    const int k = spec.k();
    const double threshold = cfg.p * 2.0 * k / 100.0;

    // the standard fragment supplies the centers and their occupations
    Pattern base = generate_standard(spec, cfg.eps_pos);

    std::vector<std::size_t> order(base.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const ProjectedPoint& pa = base.points[a];
        const ProjectedPoint& pb = base.points[b];
        if (pa.occupation != pb.occupation) return pa.occupation > pb.occupation;
        return pa.source < pb.source;
    });

    Pattern pat;
    pat.info = base.info;
    pat.info.method = Method::modified;
    pat.info.p = cfg.p;
    pat.info.delta = cfg.delta;

    auto min_dist_to_emitted = [&](const Vec& pos) {
        double best = std::numeric_limits<double>::infinity();
        for (const ProjectedPoint& q : pat.points)
            best = std::min(best, dist(q.phys, pos));
        return best;
    };
    auto emit_unless_close = [&](Vec pos, LatticeVec src, PointKind kind) {
        if (min_dist_to_emitted(pos) < cfg.eps_pos) return;
        ProjectedPoint pp;
        pp.phys = std::move(pos);
        pp.occupation = occupation(spec, src);
        pp.source = std::move(src);
        pp.kind = kind;
        pat.points.push_back(std::move(pp));
    };

    for (std::size_t idx : order) {
        const ProjectedPoint& c = base.points[idx];
        if (c.occupation > threshold) {
            emit_unless_close(c.phys, c.source, PointKind::center);
            for (int i = 0; i < k; ++i)
                for (int step : {-1, 1}) {
                    LatticeVec nb = c.source;
                    nb[i] += step;
                    Vec pos = project_physical(spec.embedding, to_vec(nb));
                    emit_unless_close(std::move(pos), std::move(nb), PointKind::completion);
                }
        } else {
            if (min_dist_to_emitted(c.phys) >= cfg.delta) {
                ProjectedPoint pp = c;
                pp.kind = PointKind::admitted;
                pat.points.push_back(std::move(pp));
            }
        }
    }
    return pat;
}

}  // namespace qpack
