#include "qpack/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qpack {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& what) {
    throw std::invalid_argument("config: key '" + key + "' " + what);
}

double require_number(const json& j, const std::string& key) {
    if (!j.is_number()) bad(key, "must be a number");
    return j.get<double>();
}

RunConfig from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

    static const std::set<std::string> known = {
        "group", "n", "seeds", "translation", "radius", "radius_space", "cap",
        "method", "p", "delta", "eps_pos", "grid", "threshold_ratio",
        "out_dir", "formats", "verify_samples"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) bad(key, "is not recognised");

    RunConfig cfg;

    if (!j.contains("group")) bad("group", "is required");
    const std::string g = j["group"].is_string() ? j["group"].get<std::string>() : "";
    if (g == "cyclic") {
        if (!j.contains("n")) bad("n", "is required for cyclic groups");
        if (!j["n"].is_number_integer()) bad("n", "must be an integer");
        const int n = j["n"].get<int>();
        if (n < 3) bad("n", "must be >= 3");
        cfg.group = GroupSpec::cyclic(n);
    } else if (g == "icosahedral") {
        if (j.contains("n")) bad("n", "is only valid for cyclic groups");
        cfg.group = GroupSpec::icosahedral();
    } else {
        bad("group", "must be \"cyclic\" or \"icosahedral\"");
    }

    if (!j.contains("seeds") || !j["seeds"].is_array() || j["seeds"].empty())
        bad("seeds", "must be a non-empty array of points");
    const int d = cfg.group.dimension();
    for (const auto& s : j["seeds"]) {
        if (!s.is_array() || static_cast<int>(s.size()) != d)
            bad("seeds", "entries must have dimension " + std::to_string(d));
        Vec v;
        for (const auto& c : s) v.push_back(require_number(c, "seeds"));
        if (norm(v) == 0.0) bad("seeds", "entries must be nonzero");
        cfg.seeds.push_back(std::move(v));
    }

    if (j.contains("translation")) {
        const auto& t = j["translation"];
        if (t.is_number()) {
            cfg.translation_scalar = t.get<double>();
        } else if (t.is_array()) {
            Vec v;
            for (const auto& c : t) v.push_back(require_number(c, "translation"));
            cfg.translation_vector = std::move(v);
        } else {
            bad("translation", "must be a number or an array");
        }
    }

    if (j.contains("radius")) {
        cfg.radius = require_number(j["radius"], "radius");
        if (cfg.radius < 0.0) bad("radius", "must be >= 0");
    }
    if (j.contains("radius_space")) {
        const std::string s = j["radius_space"].is_string() ? j["radius_space"].get<std::string>() : "";
        if (s == "super") cfg.radius_space = RadiusSpace::superspace;
        else if (s == "physical") cfg.radius_space = RadiusSpace::physical;
        else bad("radius_space", "must be \"super\" or \"physical\"");
    }
    if (j.contains("cap")) {
        if (!j["cap"].is_number_integer()) bad("cap", "must be an integer");
        cfg.cap = j["cap"].get<long long>();
        if (cfg.cap < 1) bad("cap", "must be >= 1");
    }

    if (j.contains("method")) {
        const std::string m = j["method"].is_string() ? j["method"].get<std::string>() : "";
        if (m == "standard") cfg.method = Method::standard;
        else if (m == "modified") cfg.method = Method::modified;
        else bad("method", "must be \"standard\" or \"modified\"");
    }
    if (j.contains("p")) {
        cfg.p = require_number(j["p"], "p");
        if (cfg.p <= 0.0 || cfg.p > 100.0) bad("p", "must be in (0, 100]");
    }
    if (j.contains("delta")) {
        const auto& dl = j["delta"];
        if (dl.is_string() && dl.get<std::string>() == "auto") {
            cfg.delta_auto = true;
        } else if (dl.is_number()) {
            cfg.delta_auto = false;
            cfg.delta = dl.get<double>();
            if (cfg.delta < 0.0) bad("delta", "must be >= 0 or \"auto\"");
        } else {
            bad("delta", "must be a number or \"auto\"");
        }
    }
    if (j.contains("eps_pos")) {
        cfg.eps_pos = require_number(j["eps_pos"], "eps_pos");
        if (cfg.eps_pos <= 0.0) bad("eps_pos", "must be > 0");
    }
    if (!cfg.delta_auto && cfg.delta < cfg.eps_pos)
        bad("delta", "must be >= eps_pos (the admission rule would be vacuous)");

    if (j.contains("grid")) {
        const auto& gj = j["grid"];
        if (!gj.is_object()) bad("grid", "must be an object");
        for (const auto& [key, _] : gj.items())
            if (key != "min" && key != "step" && key != "counts") bad("grid." + key, "is not recognised");
        if (gj.contains("min")) {
            if (!gj["min"].is_array() || gj["min"].size() != 2) bad("grid.min", "must be a pair");
            cfg.grid.min = {require_number(gj["min"][0], "grid.min"),
                            require_number(gj["min"][1], "grid.min")};
        }
        if (gj.contains("step")) {
            cfg.grid.step = require_number(gj["step"], "grid.step");
            if (cfg.grid.step <= 0.0) bad("grid.step", "must be > 0");
        }
        if (gj.contains("counts")) {
            if (!gj["counts"].is_array() || gj["counts"].size() != 2) bad("grid.counts", "must be a pair");
            cfg.grid.counts = {gj["counts"][0].get<int>(), gj["counts"][1].get<int>()};
            if (cfg.grid.counts[0] < 1 || cfg.grid.counts[1] < 1) bad("grid.counts", "must be >= 1");
        }
    }
    if (j.contains("threshold_ratio")) {
        cfg.threshold_ratio = require_number(j["threshold_ratio"], "threshold_ratio");
        if (cfg.threshold_ratio <= 0.0 || cfg.threshold_ratio >= 1.0)
            bad("threshold_ratio", "must be in (0, 1)");
    }

    if (j.contains("out_dir")) {
        if (!j["out_dir"].is_string()) bad("out_dir", "must be a string");
        cfg.out_dir = j["out_dir"].get<std::string>();
    }
    if (j.contains("formats")) {
        if (!j["formats"].is_array()) bad("formats", "must be an array");
        cfg.formats.clear();
        for (const auto& f : j["formats"]) {
            const std::string s = f.is_string() ? f.get<std::string>() : "";
            if (s != "csv" && s != "svg" && s != "latex")
                bad("formats", "entries must be csv, svg or latex");
            cfg.formats.push_back(s);
        }
    }
    if (j.contains("verify_samples")) {
        if (!j["verify_samples"].is_number_integer()) bad("verify_samples", "must be an integer");
        cfg.verify_samples = j["verify_samples"].get<long long>();
        if (cfg.verify_samples < 1) bad("verify_samples", "must be >= 1");
    }
    return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: parse failure: ") + e.what());
    }
    return from_json(j);
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

Pipeline build_pipeline(const RunConfig& cfg) {
    Pipeline pl;
    pl.cluster = build_cluster(cfg.group, cfg.seeds);
    pl.embedding = embed(pl.cluster);
    const int k = pl.embedding.k;

    Vec t;
    if (cfg.translation_vector) {
        t = *cfg.translation_vector;
        if (static_cast<int>(t.size()) != k)
            throw std::invalid_argument("config: key 'translation' must have length " +
                                        std::to_string(k) + " for this cluster");
    } else {
        t.assign(k, cfg.translation_scalar);
    }
    pl.spec = make_strip_spec(pl.embedding, std::move(t), cfg.radius, cfg.cap,
                              cfg.radius_space);
    pl.delta = cfg.delta_auto ? 0.5 * min_cluster_distance(pl.cluster) : cfg.delta;
    return pl;
}

}  // namespace qpack
