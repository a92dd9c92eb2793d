#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpack/cluster.hpp"
#include "qpack/diffract.hpp"
#include "qpack/modified.hpp"

namespace qpack {

// A full run description, loaded from a flat JSON file. Defaults follow the
// reference program: cap 6000, eps_pos 1e-4, threshold_ratio 1e-3, the
// standard 100x100 grid.
struct RunConfig {
    GroupSpec group;
    std::vector<Vec> seeds;

    // scalar translations broadcast to all k coordinates once k is known
    double translation_scalar = 0.0;
    std::optional<Vec> translation_vector;

    double radius = 9.0;
    RadiusSpace radius_space = RadiusSpace::superspace;
    long long cap = 6000;

    Method method = Method::standard;
    double p = 50.0;
    bool delta_auto = true;  // "auto" = 0.5 * min_cluster_distance
    double delta = 0.0;
    double eps_pos = 1e-4;

    GridSpec grid;
    double threshold_ratio = 1e-3;

    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv"};
    long long verify_samples = 10000;
};

// Parse and validate a config file. Unknown keys are rejected; every range
// or dimension violation names the offending key. Throws
// std::invalid_argument with the message.
RunConfig load_config(const std::string& path);

// Same, from an in-memory JSON string (used by tests).
RunConfig parse_config(const std::string& json_text);

// The generation pipeline a config describes, built once and reused by the
// commands: cluster, embedding, and the translated strip.
struct Pipeline {
    GCluster cluster;
    Embedding embedding;
    StripSpec spec;
    double delta = 0.0;  // resolved admission distance
};

Pipeline build_pipeline(const RunConfig& cfg);

}  // namespace qpack
