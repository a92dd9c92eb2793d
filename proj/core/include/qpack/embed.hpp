#pragma once

#include <vector>

#include "qpack/cluster.hpp"
#include "qpack/linalg.hpp"

namespace qpack {

// Superspace embedding of a cluster: row a of `rows` collects coordinate a of
// every representative, so rows is d x k. For a genuine union of orbits the
// rows are pairwise orthogonal with a common norm (row_norm), which embed()
// verifies and enforces.
struct Embedding {
    int d = 0;
    int k = 0;
    std::vector<Vec> rows;  // d rows, each of length k
    double row_norm = 0.0;

    // column i of the row matrix = cluster point v_i
    Vec column(int i) const {
        Vec c(d);
        for (int a = 0; a < d; ++a) c[a] = rows[a][i];
        return c;
    }
};

// Builds the embedding and verifies orthogonality / equal norms to 1e-9
// relative. A violation means the input is not a union of orbits; throws
// std::invalid_argument("not a G-cluster embedding").
Embedding embed(const GCluster& cluster);

// Physical coordinates of the projection of x: (<x,w_1>, ..., <x,w_d>).
// These are the scaled coordinates (row_norm times the metric ones); with
// them the projection of the i-th lattice basis vector is exactly v_i.
Vec project_physical(const Embedding& emb, const Vec& x);

// x minus its orthogonal projection onto the physical subspace; the result
// is orthogonal to every row.
Vec project_perp(const Embedding& emb, const Vec& x);

}  // namespace qpack
