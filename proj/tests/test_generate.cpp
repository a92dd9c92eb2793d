#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <doctest.h>

#include "qpack/generate.hpp"
#include "support.hpp"

using namespace qpack;

namespace {

StripSpec fig3_spec(long long cap = 6000) {
    const Embedding emb = embed(build_cluster(GroupSpec::cyclic(12), {{1.0, 0.0}}));
    return make_strip_spec(emb, Vec(6, 0.1), 9.0, cap);
}

}  // namespace

TEST_CASE("walk starts at the rounded translation") {
    StripSpec spec = fig3_spec(1);
    const FragmentResult frag = enumerate_fragment(spec);
    CHECK(frag.analysed == 1);
    REQUIRE(frag.points.size() == 1);
    CHECK(frag.points[0] == LatticeVec(6, 0));

    // rounding is half away from zero
    spec.translation = Vec(6, -0.6);
    const FragmentResult away = enumerate_fragment(spec);
    CHECK(away.analysed == 1);
}

TEST_CASE("reference planar fragment: counts and origin occupancy") {
    const StripSpec spec = fig3_spec();
    const FragmentResult frag = enumerate_fragment(spec);
    CHECK(frag.analysed == 6000);
    CHECK(frag.truncated);
    CHECK(frag.points.size() == 938);  // in-strip among the analysed

    const Pattern pat = generate_standard(spec);
    CHECK(pat.points.size() == 925);  // radius-gated
    CHECK(pat.info.truncated);
    CHECK(pat.points.front().source == LatticeVec(6, 0));
    CHECK(pat.points.front().occupation == 10);

    // occupancy histogram of the fragment
    int high = 0, top = 0;
    for (const auto& p : pat.points) {
        if (p.occupation > 6) ++high;
        top = std::max(top, p.occupation);
    }
    CHECK(high == 23);
    CHECK(top == 10);
}

TEST_CASE("occupation counts strip membership of the 2k neighbours") {
    const StripSpec spec = fig3_spec();
    CHECK(occupation(spec, LatticeVec(6, 0)) == 10);

    LatticeVec far(6, 0);
    far[0] = 40;
    CHECK(occupation(spec, far) == 0);
}

TEST_CASE("occupation is centrally symmetric for the untranslated strip") {
    const Embedding emb = embed(build_cluster(GroupSpec::cyclic(12), {{1.0, 0.0}}));
    const StripSpec spec = make_strip_spec(emb, Vec(6, 0.0), 9.0, 6000);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        LatticeVec x(6), neg(6);
        for (int i = 0; i < 6; ++i) {
            x[i] = static_cast<int>(rng() % 5) - 2;
            neg[i] = -x[i];
        }
        CHECK(occupation(spec, x) == occupation(spec, neg));
    }
}

TEST_CASE("zero radius gives an empty pattern") {
    StripSpec spec = fig3_spec();
    spec.radius = 0.0;
    CHECK(generate_standard(spec).points.empty());
}

TEST_CASE("emitted sources are in the translated strip and within radius") {
    const StripSpec spec = fig3_spec();
    const Pattern pat = generate_standard(spec);
    for (const auto& p : pat.points) {
        CHECK(in_strip(spec, sub(to_vec(p.source), spec.translation)));
        CHECK(within_radius(spec, p.source));
    }
}

TEST_CASE("lattice-adjacent pattern points differ by a cluster vector") {
    const GCluster cluster = build_cluster(GroupSpec::cyclic(12), {{1.0, 0.0}});
    const StripSpec spec = fig3_spec();
    const Pattern pat = generate_standard(spec);
    int adjacent = 0;
    for (std::size_t a = 0; a < pat.points.size(); ++a)
        for (std::size_t b = a + 1; b < pat.points.size(); ++b) {
            int l1 = 0;
            for (int i = 0; i < 6; ++i)
                l1 += std::abs(pat.points[a].source[i] - pat.points[b].source[i]);
            if (l1 != 1) continue;
            ++adjacent;
            const Vec d = sub(pat.points[b].phys, pat.points[a].phys);
            bool matches = false;
            for (const Vec& v : cluster.reps)
                if ((std::abs(d[0] - v[0]) < 1e-9 && std::abs(d[1] - v[1]) < 1e-9) ||
                    (std::abs(d[0] + v[0]) < 1e-9 && std::abs(d[1] + v[1]) < 1e-9))
                    matches = true;
            CHECK(matches);
        }
    CHECK(adjacent > 1000);  // the fragment is well connected
}

TEST_CASE("runs are deterministic") {
    const StripSpec spec = fig3_spec();
    const Pattern a = generate_standard(spec);
    const Pattern b = generate_standard(spec);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].source == b.points[i].source);
        CHECK(a.points[i].phys == b.points[i].phys);
        CHECK(a.points[i].occupation == b.points[i].occupation);
    }
}

TEST_CASE("BFS emitted set equals the exhaustive box scan on toy clusters") {
    // square cluster: no constraints, the whole plane is the strip
    const Embedding sq = embed(build_cluster(GroupSpec::cyclic(4), {{1.0, 0.0}}));
    const StripSpec sqs = make_strip_spec(sq, Vec(2, 0.1), 6.0, 20000);
    const Pattern sqp = generate_standard(sqs);
    auto ref = testing::box_scan(sqs);
    CHECK(sqp.points.size() == 113);
    CHECK(ref.size() == 113);
    std::set<LatticeVec> mine, expect(ref.begin(), ref.end());
    for (const auto& p : sqp.points) mine.insert(p.source);
    CHECK(mine == expect);

    const Embedding c8 = embed(build_cluster(GroupSpec::cyclic(8), {{1.0, 0.0}}));
    const StripSpec c8s = make_strip_spec(c8, Vec(4, 0.1), 6.0, 60000);
    const Pattern c8p = generate_standard(c8s);
    ref = testing::box_scan(c8s);
    CHECK(c8p.points.size() == 270);
    CHECK(ref.size() == 270);
    mine.clear();
    expect = std::set<LatticeVec>(ref.begin(), ref.end());
    for (const auto& p : c8p.points) mine.insert(p.source);
    CHECK(mine == expect);
}

TEST_CASE("physical radius gate uses projected coordinates") {
    StripSpec spec = fig3_spec();
    spec.radius_space = RadiusSpace::physical;
    spec.radius = 3.0;
    const Pattern pat = generate_standard(spec);
    CHECK(!pat.points.empty());
    for (const auto& p : pat.points) {
        const Vec y = sub(to_vec(p.source), spec.translation);
        CHECK(norm(project_physical(spec.embedding, y)) < 3.0);
    }
}
