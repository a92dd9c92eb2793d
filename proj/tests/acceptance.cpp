// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qpack/config.hpp"
#include "qpack/diffract.hpp"
#include "qpack/exporters.hpp"
#include "qpack/modified.hpp"
#include "qpack/verify.hpp"
#include "support.hpp"

using namespace qpack;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d [%s]: %s — %s\n", criterion, name.c_str(),
                pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

std::string root;  // source tree, for configs/ and tests/data/

// ---------------------------------------------------------------- criterion 1
void golden_standard_count() {
    const auto t0 = Clock::now();
    const RunConfig cfg = load_config(root + "/configs/fig3.json");
    const Pipeline pl = build_pipeline(cfg);
    const Pattern pat = generate_standard(pl.spec, cfg.eps_pos);
    const double dt = seconds_since(t0);

    std::vector<std::array<double, 2>> mine;
    for (const auto& p : pat.points) mine.push_back({10.0 + p.phys[0], 20.0 + p.phys[1]});
    const auto ref = testing::load_reference(root + "/tests/data/c12_standard_reference.csv");
    const int mismatches = testing::multiset_mismatches(mine, ref, 2e-5);

    char buf[512];
    if (pat.points.size() == 923) {
        std::snprintf(buf, sizeof buf, "emitted=923, runtime=%.2fs", dt);
        report(1, "standard golden count", dt <= 10.0, buf);
        return;
    }
    // The stated count (923) deviates from the golden reference point set
    // itself, which contains exactly 925 points. The criterion's
    // justification clause: the symmetric set difference against that
    // reference must be empty.
    const bool pass = mismatches == 0 && dt <= 10.0;
    std::snprintf(buf, sizeof buf,
                  "emitted=%zu (stated count 923 contradicts the golden reference set "
                  "of %zu points; symmetric difference vs that set: %d), runtime=%.2fs",
                  pat.points.size(), ref.size(), mismatches, dt);
    report(1, "standard golden count", pass, buf);
}

// ---------------------------------------------------------------- criterion 2
void golden_modified_count() {
    const RunConfig cfg = load_config(root + "/configs/fig4.json");
    const Pipeline pl = build_pipeline(cfg);
    const double dmin = min_cluster_distance(pl.cluster);

    ModifiedConfig mc;
    mc.spec = pl.spec;
    mc.p = cfg.p;
    mc.eps_pos = cfg.eps_pos;

    std::vector<double> reproducing;
    std::size_t closest = 0;
    for (double f = 0.30; f <= 0.7001; f += 0.05) {
        mc.delta = f * dmin;
        const std::size_t n = generate_modified(mc).points.size();
        if (n == 1019) reproducing.push_back(f);
        if (closest == 0 || std::llabs(static_cast<long long>(n) - 1019) <
                                std::llabs(static_cast<long long>(closest) - 1019))
            closest = n;
    }
    mc.delta = pl.delta;  // the shipped default (auto = 0.5 * dmin)
    const Pattern pat = generate_modified(mc);
    const std::size_t with_default = pat.points.size();

    std::vector<std::array<double, 2>> mine;
    for (const auto& p : pat.points) mine.push_back({10.0 + p.phys[0], 20.0 + p.phys[1]});
    const auto ref = testing::load_reference(root + "/tests/data/c12_modified_reference.csv");
    const int mismatches = testing::multiset_mismatches(mine, ref, 2e-5);

    char buf[512];
    if (reproducing.empty()) {
        std::snprintf(buf, sizeof buf,
                      "no scanned delta reproduces 1019; closest count %zu; shipped default "
                      "0.5*min_distance=%.5f emits %zu",
                      closest, pl.delta, with_default);
        report(2, "modified golden count", false, buf);
        return;
    }
    std::snprintf(buf, sizeof buf,
                  "1019 reproduced by %zu of 9 scanned deltas; shipped default "
                  "0.5*min_distance=%.5f emits %zu; reference multiset mismatches: %d",
                  reproducing.size(), pl.delta, with_default, mismatches);
    report(2, "modified golden count", with_default == 1019, buf);
}

// ---------------------------------------------------------------- criterion 3
void performance_envelope() {
    const RunConfig cfg = load_config(root + "/configs/fig3.json");
    const Pipeline pl = build_pipeline(cfg);

    auto t0 = Clock::now();
    const Pattern pat = generate_standard(pl.spec, cfg.eps_pos);
    diffraction_map(pat, cfg.grid, cfg.threshold_ratio);
    const double small = seconds_since(t0);

    t0 = Clock::now();
    StripSpec big = pl.spec;
    big.radius = 45.0;
    big.cap = 700000;
    const Pattern large = generate_standard(big, cfg.eps_pos);
    const double larger = seconds_since(t0);

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "fragment+grid %.2fs (limit 60); %zu-point run %.2fs (need >=16000 in 7200s)",
                  small, large.points.size(), larger);
    report(3, "performance envelope",
           small <= 60.0 && large.points.size() >= 16000 && larger <= 7200.0, buf);
}

// ---------------------------------------------------------------- criterion 4
void icosahedral_structure() {
    const auto t0 = Clock::now();
    const RunConfig cfg = load_config(root + "/configs/icosa3.json");
    const Pipeline pl = build_pipeline(cfg);
    const bool k_ok = pl.cluster.k() == 31;
    const bool cons_ok = pl.spec.constraints.size() == 31465;

    const Pattern capped = generate_standard(pl.spec, cfg.eps_pos);  // cap 2000
    const double dt = seconds_since(t0);
    const bool count_ok = capped.points.size() >= 400 && dt <= 600.0;

    // the stated budget never reaches 400; show where the structural
    // in-strip:analysed ratio actually gets there
    StripSpec probe = pl.spec;
    probe.cap = 2000;
    std::size_t reached_cap = 0;
    double reached_time = 0.0;
    const auto t1 = Clock::now();
    while (probe.cap <= 64000) {
        probe.cap *= 2;
        const Pattern p = generate_standard(probe, cfg.eps_pos);
        reached_time = seconds_since(t1);
        if (p.points.size() >= 400 || reached_time > 600.0) {
            reached_cap = static_cast<std::size_t>(probe.cap);
            break;
        }
    }

    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "k=%d, constraints=%zu, capped(2000) emitted=%zu in %.1fs (stated bound: "
                  ">=400; structurally unreachable at this cap — first reached at cap=%zu "
                  "in %.1fs)",
                  pl.cluster.k(), pl.spec.constraints.size(), capped.points.size(), dt,
                  reached_cap, reached_time);
    report(4, "icosahedral structure", k_ok && cons_ok && count_ok, buf);
}

// ---------------------------------------------------------------- criterion 5
void oracle_equivalence() {
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    struct Case {
        const char* name;
        GroupSpec group;
        Vec seed;
    };
    const std::vector<Case> cases = {
        {"C12 k=6", GroupSpec::cyclic(12), {1.0, 0.0}},
        {"C8 k=4", GroupSpec::cyclic(8), {1.0, 0.0}},
        {"icosahedron k=6", GroupSpec::icosahedral(), {1.0, tau, 0.0}},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const Embedding emb = embed(build_cluster(c.group, {c.seed}));
        const StripSpec spec = make_strip_spec(emb, Vec(emb.k, 0.0), 1.0, 1);
        const OracleReport rep = verify_oracle_equivalence(spec, 12000, 4242);
        ok = ok && rep.mismatches == 0 && rep.tested >= 10000;
        detail += std::string(c.name) + ": " + std::to_string(rep.tested) + " tested, " +
                  std::to_string(rep.mismatches) + " mismatches, " +
                  std::to_string(rep.guard_banded) + " guard-banded; ";
    }
    report(5, "oracle equivalence", ok, detail);
}

// ---------------------------------------------------------------- criterion 6
void embedding_invariants() {
    std::mt19937_64 rng(60660);
    double worst_cross = 0.0, worst_spread = 0.0;
    for (int t = 0; t < 20; ++t) {
        const int n = std::array{8, 10, 12}[rng() % 3];
        std::vector<Vec> seeds;
        const int ns = 1 + static_cast<int>(rng() % 3);
        for (int s = 0; s < ns; ++s)
            seeds.push_back({uniform(rng(), -2.0, 2.0), uniform(rng(), 0.05, 2.0)});
        const auto rep = verify_embedding_invariants(embed(build_cluster(GroupSpec::cyclic(n), seeds)));
        worst_cross = std::max(worst_cross, rep.max_cross);
        worst_spread = std::max(worst_spread, rep.max_spread);
    }
    for (int t = 0; t < 5; ++t) {
        std::vector<Vec> seeds;
        const int ns = 1 + static_cast<int>(rng() % 2);
        for (int s = 0; s < ns; ++s)
            seeds.push_back({uniform(rng(), 0.2, 2.0), uniform(rng(), -2.0, 2.0),
                             uniform(rng(), -2.0, 2.0)});
        const auto rep =
            verify_embedding_invariants(embed(build_cluster(GroupSpec::icosahedral(), seeds)));
        worst_cross = std::max(worst_cross, rep.max_cross);
        worst_spread = std::max(worst_spread, rep.max_spread);
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "25 randomized unions: max |<wa,wb>|/norm^2 = %.2e, max norm spread = %.2e "
                  "(tolerance 1e-9)",
                  worst_cross, worst_spread);
    report(6, "embedding invariants", worst_cross <= 1e-9 && worst_spread <= 1e-9, buf);
}

// ---------------------------------------------------------------- criterion 7
void structural_properties() {
    const RunConfig cfg3 = load_config(root + "/configs/fig3.json");
    const Pipeline pl3 = build_pipeline(cfg3);
    const Pattern pat3 = generate_standard(pl3.spec, cfg3.eps_pos);

    // neighbour-in-cluster over every lattice-adjacent pair
    long long adjacent = 0, adjacent_bad = 0;
    for (std::size_t a = 0; a < pat3.points.size(); ++a)
        for (std::size_t b = a + 1; b < pat3.points.size(); ++b) {
            int l1 = 0;
            for (int i = 0; i < 6; ++i)
                l1 += std::abs(pat3.points[a].source[i] - pat3.points[b].source[i]);
            if (l1 != 1) continue;
            ++adjacent;
            const Vec d = sub(pat3.points[b].phys, pat3.points[a].phys);
            bool matches = false;
            for (const Vec& v : pl3.cluster.reps)
                if ((std::abs(d[0] - v[0]) < 1e-9 && std::abs(d[1] - v[1]) < 1e-9) ||
                    (std::abs(d[0] + v[0]) < 1e-9 && std::abs(d[1] + v[1]) < 1e-9))
                    matches = true;
            if (!matches) ++adjacent_bad;
        }

    // completion and admission invariants on the modified pattern
    const RunConfig cfg4 = load_config(root + "/configs/fig4.json");
    const Pipeline pl4 = build_pipeline(cfg4);
    ModifiedConfig mc{pl4.spec, cfg4.p, pl4.delta, cfg4.eps_pos};
    const Pattern pat4 = generate_modified(mc);
    long long completion_bad = 0, admission_bad = 0;
    for (std::size_t i = 0; i < pat4.points.size(); ++i) {
        const auto& p = pat4.points[i];
        if (p.kind == PointKind::center) {
            for (int axis = 0; axis < 6; ++axis)
                for (int step : {-1, 1}) {
                    LatticeVec nb = p.source;
                    nb[axis] += step;
                    const Vec pos = project_physical(pl4.embedding, to_vec(nb));
                    bool present = false;
                    for (const auto& q : pat4.points)
                        if (dist(q.phys, pos) < cfg4.eps_pos) { present = true; break; }
                    if (!present) ++completion_bad;
                }
        } else if (p.kind == PointKind::admitted) {
            for (std::size_t j = 0; j < i; ++j)
                if (dist(p.phys, pat4.points[j].phys) < mc.delta) { ++admission_bad; break; }
        }
    }

    // diffraction properties on the full default grid
    const DiffractionMap map = diffraction_map(pat3, cfg3.grid, cfg3.threshold_ratio);
    const double L2 = static_cast<double>(pat3.points.size()) * pat3.points.size();
    const bool i0_ok = std::abs(map.i0 - L2) <= 1e-9 * L2;
    long long even_bad = 0, dom_bad = 0;
    for (int i = 0; i < map.grid.counts[0]; ++i)
        for (int j = 0; j < map.grid.counts[1]; ++j) {
            const auto xi = map.xi(i, j);
            const double v = map.at(i, j);
            const double vneg = intensity(pat3, {-xi[0], -xi[1]});
            if (std::abs(v - vneg) > 1e-9 * std::max(1.0, std::abs(v))) ++even_bad;
            if (v > map.i0 * (1.0 + 1e-9)) ++dom_bad;
        }

    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "%lld adjacent pairs (%lld bad); completions missing: %lld; admission "
                  "violations: %lld; i0==L^2: %s; evenness violations: %lld; dominance "
                  "violations: %lld",
                  adjacent, adjacent_bad, completion_bad, admission_bad, i0_ok ? "yes" : "no",
                  even_bad, dom_bad);
    report(7, "structural properties", adjacent > 0 && adjacent_bad == 0 && completion_bad == 0 &&
                                           admission_bad == 0 && i0_ok && even_bad == 0 &&
                                           dom_bad == 0,
           buf);
}

// ---------------------------------------------------------------- criterion 8
void bfs_box_scan_equivalence() {
    // uncapped runs never terminate (the strip is infinite along the physical
    // subspace), so "cap = infinity" is realized as emitted-set stabilization
    // across two caps far past coverage of the radius ball
    struct Case {
        const char* name;
        GroupSpec group;
        long long cap_a, cap_b;
    };
    const std::vector<Case> cases = {{"square k=2", GroupSpec::cyclic(4), 5000, 20000},
                                     {"C8 k=4", GroupSpec::cyclic(8), 20000, 60000}};
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const Embedding emb = embed(build_cluster(c.group, {{1.0, 0.0}}));
        StripSpec spec = make_strip_spec(emb, Vec(emb.k, 0.1), 6.0, c.cap_a);
        const Pattern a = generate_standard(spec);
        spec.cap = c.cap_b;
        const Pattern b = generate_standard(spec);
        std::set<LatticeVec> sa, sb, sref;
        for (const auto& p : a.points) sa.insert(p.source);
        for (const auto& p : b.points) sb.insert(p.source);
        for (const auto& x : testing::box_scan(spec)) sref.insert(x);
        const bool match = sa == sb && sb == sref;
        ok = ok && match;
        detail += std::string(c.name) + ": bfs=" + std::to_string(sa.size()) +
                  " box-scan=" + std::to_string(sref.size()) + (match ? " equal; " : " DIFFER; ");
    }
    report(8, "bfs box-scan equivalence", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    root = argc > 1 ? argv[1] : QPACK_SOURCE_DIR;
    golden_standard_count();
    golden_modified_count();
    performance_envelope();
    icosahedral_structure();
    oracle_equivalence();
    embedding_invariants();
    structural_properties();
    bfs_box_scan_equivalence();
    std::printf("%d of 8 criteria failed\n", g_failures);
    return g_failures;
}
