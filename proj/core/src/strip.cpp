#include "qpack/strip.hpp"

#include <cmath>
#include <stdexcept>

namespace qpack {

namespace {

// 2x2 minor of the two embedding rows at columns p, q
inline double minor2(const Embedding& e, int p, int q) {
    return e.rows[0][p] * e.rows[1][q] - e.rows[0][q] * e.rows[1][p];
}

// 3x3 minor of the three embedding rows at columns p, q, r
inline double minor3(const Embedding& e, int p, int q, int r) {
    return e.rows[0][p] * (e.rows[1][q] * e.rows[2][r] - e.rows[1][r] * e.rows[2][q]) -
           e.rows[0][q] * (e.rows[1][p] * e.rows[2][r] - e.rows[1][r] * e.rows[2][p]) +
           e.rows[0][r] * (e.rows[1][p] * e.rows[2][q] - e.rows[1][q] * e.rows[2][p]);
}

}  // namespace

std::vector<StripConstraint> build_constraints(const Embedding& emb) {
    const int k = emb.k, d = emb.d;
    if (d != 2 && d != 3)
        throw std::invalid_argument("build_constraints: physical dimension must be 2 or 3");
    const double eps_deg = 1e-12 * std::pow(emb.row_norm, d);
    std::vector<StripConstraint> cons;
    if (d == 2) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l) {
                    StripConstraint c;
                    c.indices = {i, j, l, 0};
                    c.cofactors = {minor2(emb, j, l), -minor2(emb, i, l),
                                   minor2(emb, i, j), 0.0};
                    c.bound = 0.5 * (std::abs(c.cofactors[0]) + std::abs(c.cofactors[1]) +
                                     std::abs(c.cofactors[2]));
                    c.active = c.bound > eps_deg;
                    cons.push_back(c);
                }
    } else {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    for (int m = l + 1; m < k; ++m) {
                        StripConstraint c;
                        c.indices = {i, j, l, m};
                        c.cofactors = {minor3(emb, j, l, m), -minor3(emb, i, l, m),
                                       minor3(emb, i, j, m), -minor3(emb, i, j, l)};
                        c.bound = 0.5 * (std::abs(c.cofactors[0]) + std::abs(c.cofactors[1]) +
                                         std::abs(c.cofactors[2]) + std::abs(c.cofactors[3]));
                        c.active = c.bound > eps_deg;
                        cons.push_back(c);
                    }
    }
    return cons;
}

bool in_strip(const StripSpec& spec, const Vec& y) {
    if (static_cast<int>(y.size()) != spec.k())
        throw std::invalid_argument("in_strip: dimension mismatch");
    const int n = spec.d() + 1;
    for (const StripConstraint& c : spec.constraints) {
        if (!c.active) continue;
        double det = 0.0;
        for (int j = 0; j < n; ++j) det += y[c.indices[j]] * c.cofactors[j];
        if (std::abs(det) > c.bound) return false;
    }
    return true;
}

namespace {

// --- d = 2: clip an initial box against the 2k half-planes |<v_i,a> - y_i| <= 1/2

struct P2 {
    double x, y;
};

// keep the side n.a <= b
std::vector<P2> clip_halfplane(const std::vector<P2>& poly, double nx, double ny, double b) {
    std::vector<P2> out;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const P2& cur = poly[i];
        const P2& nxt = poly[(i + 1) % m];
        const double dc = nx * cur.x + ny * cur.y - b;
        const double dn = nx * nxt.x + ny * nxt.y - b;
        if (dc <= 0.0) out.push_back(cur);
        if ((dc < 0.0 && dn > 0.0) || (dc > 0.0 && dn < 0.0)) {
            const double s = dc / (dc - dn);
            out.push_back({cur.x + s * (nxt.x - cur.x), cur.y + s * (nxt.y - cur.y)});
        }
    }
    return out;
}

bool slice_feasible_2d(const Embedding& emb, const Vec& y) {
    const int k = emb.k;
    const double n2 = emb.row_norm * emb.row_norm;
    // any feasible coefficient vector lies within half the cube diagonal of
    // the least-squares center, plus slack
    const double cx = dot(y, emb.rows[0]) / n2;
    const double cy = dot(y, emb.rows[1]) / n2;
    const double h = 0.5 * std::sqrt(static_cast<double>(k)) / emb.row_norm + 1.0;
    std::vector<P2> poly = {{cx - h, cy - h}, {cx + h, cy - h}, {cx + h, cy + h}, {cx - h, cy + h}};
    for (int i = 0; i < k && !poly.empty(); ++i) {
        const double vx = emb.rows[0][i], vy = emb.rows[1][i];
        poly = clip_halfplane(poly, vx, vy, y[i] + 0.5);
        if (poly.empty()) return false;
        poly = clip_halfplane(poly, -vx, -vy, -(y[i] - 0.5));
    }
    return !poly.empty();
}

// --- d = 3: vertex enumeration over triples of the 2k bounding planes

bool slice_feasible_3d(const Embedding& emb, const Vec& y) {
    const int k = emb.k;
    constexpr double tol = 1e-9;
    auto feasible = [&](const std::array<double, 3>& a) {
        for (int i = 0; i < k; ++i) {
            const double s = emb.rows[0][i] * a[0] + emb.rows[1][i] * a[1] + emb.rows[2][i] * a[2];
            if (s > y[i] + 0.5 + tol || s < y[i] - 0.5 - tol) return false;
        }
        return true;
    };
    const double n2 = emb.row_norm * emb.row_norm;
    if (feasible({dot(y, emb.rows[0]) / n2, dot(y, emb.rows[1]) / n2,
                  dot(y, emb.rows[2]) / n2}))
        return true;

    // plane p: <normal_p, a> = offset_p; planes 2i and 2i+1 bound coordinate i
    const int np = 2 * k;
    auto normal = [&](int p, int c) {
        const int i = p / 2;
        return (p % 2 == 0 ? 1.0 : -1.0) * emb.rows[c][i];
    };
    auto offset = [&](int p) {
        const int i = p / 2;
        return p % 2 == 0 ? y[i] + 0.5 : -(y[i] - 0.5);
    };
    for (int p = 0; p < np; ++p)
        for (int q = p + 1; q < np; ++q)
            for (int r = q + 1; r < np; ++r) {
                const double a00 = normal(p, 0), a01 = normal(p, 1), a02 = normal(p, 2);
                const double a10 = normal(q, 0), a11 = normal(q, 1), a12 = normal(q, 2);
                const double a20 = normal(r, 0), a21 = normal(r, 1), a22 = normal(r, 2);
                const double det = a00 * (a11 * a22 - a12 * a21) -
                                   a01 * (a10 * a22 - a12 * a20) +
                                   a02 * (a10 * a21 - a11 * a20);
                if (std::abs(det) < 1e-12) continue;
                const double b0 = offset(p), b1 = offset(q), b2 = offset(r);
                // Cramer
                const double x0 = (b0 * (a11 * a22 - a12 * a21) -
                                   a01 * (b1 * a22 - a12 * b2) +
                                   a02 * (b1 * a21 - a11 * b2)) / det;
                const double x1 = (a00 * (b1 * a22 - a12 * b2) -
                                   b0 * (a10 * a22 - a12 * a20) +
                                   a02 * (a10 * b2 - b1 * a20)) / det;
                const double x2 = (a00 * (a11 * b2 - b1 * a21) -
                                   a01 * (a10 * b2 - b1 * a20) +
                                   b0 * (a10 * a21 - a11 * a20)) / det;
                if (feasible({x0, x1, x2})) return true;
            }
    return false;
}

}  // namespace

bool slice_oracle(const Embedding& emb, const Vec& y) {
    if (static_cast<int>(y.size()) != emb.k)
        throw std::invalid_argument("slice_oracle: dimension mismatch");
    return emb.d == 2 ? slice_feasible_2d(emb, y) : slice_feasible_3d(emb, y);
}

StripSpec make_strip_spec(const Embedding& emb, Vec translation, double radius,
                          long long cap, RadiusSpace space) {
    if (static_cast<int>(translation.size()) != emb.k)
        throw std::invalid_argument("make_strip_spec: translation length must equal k");
    if (radius < 0.0) throw std::invalid_argument("make_strip_spec: radius must be >= 0");
    if (cap < 1) throw std::invalid_argument("make_strip_spec: cap must be >= 1");
    StripSpec spec;
    spec.embedding = emb;
    spec.constraints = build_constraints(emb);
    spec.translation = std::move(translation);
    spec.radius = radius;
    spec.radius_space = space;
    spec.cap = cap;
    return spec;
}

}  // namespace qpack
