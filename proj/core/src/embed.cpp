#include "qpack/embed.hpp"

#include <cmath>
#include <stdexcept>

namespace qpack {

Embedding embed(const GCluster& cluster) {
    Embedding emb;
    emb.d = cluster.d;
    emb.k = cluster.k();
    emb.rows.assign(emb.d, Vec(emb.k));
    for (int i = 0; i < emb.k; ++i)
        for (int a = 0; a < emb.d; ++a) emb.rows[a][i] = cluster.reps[i][a];

    emb.row_norm = norm(emb.rows[0]);
    if (emb.row_norm <= 0.0)
        throw std::invalid_argument("not a G-cluster embedding: zero row norm");
    const double tol = 1e-9 * emb.row_norm;
    for (int a = 0; a < emb.d; ++a) {
        if (std::abs(norm(emb.rows[a]) - emb.row_norm) > tol)
            throw std::invalid_argument("not a G-cluster embedding: unequal row norms");
        for (int b = a + 1; b < emb.d; ++b)
            if (std::abs(dot(emb.rows[a], emb.rows[b])) > tol * emb.row_norm)
                throw std::invalid_argument("not a G-cluster embedding: rows not orthogonal");
    }
    return emb;
}

Vec project_physical(const Embedding& emb, const Vec& x) {
    if (static_cast<int>(x.size()) != emb.k)
        throw std::invalid_argument("project_physical: dimension mismatch");
    Vec p(emb.d);
    for (int a = 0; a < emb.d; ++a) p[a] = dot(x, emb.rows[a]);
    return p;
}

Vec project_perp(const Embedding& emb, const Vec& x) {
    if (static_cast<int>(x.size()) != emb.k)
        throw std::invalid_argument("project_perp: dimension mismatch");
    const double inv_n2 = 1.0 / (emb.row_norm * emb.row_norm);
    Vec r = x;
    for (int a = 0; a < emb.d; ++a) {
        const double c = dot(x, emb.rows[a]) * inv_n2;
        for (int i = 0; i < emb.k; ++i) r[i] -= c * emb.rows[a][i];
    }
    return r;
}

}  // namespace qpack
