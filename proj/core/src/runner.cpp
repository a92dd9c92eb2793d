#include "qpack/runner.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "qpack/exporters.hpp"
#include "qpack/verify.hpp"

namespace qpack {

namespace {

void print_vec(std::ostream& out, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
}

Pattern build_pattern(const Pipeline& pl, const RunConfig& cfg, Method method) {
    Pattern pat;
    if (method == Method::standard) {
        pat = generate_standard(pl.spec, cfg.eps_pos);
    } else {
        ModifiedConfig mc;
        mc.spec = pl.spec;
        mc.p = cfg.p;
        mc.delta = pl.delta;
        mc.eps_pos = cfg.eps_pos;
        pat = generate_modified(mc);
    }
    pat.info.cluster_seeds = cfg.seeds;
    return pat;
}

void print_pattern_summary(std::ostream& out, const Pattern& pat) {
    out << "analysed=" << pat.info.analysed << '\n'
        << "emitted=" << pat.points.size() << '\n'
        << "truncated=" << (pat.info.truncated ? "true" : "false") << '\n';
    if (pat.info.truncated)
        out << "warning=enumeration stopped by cap before the queue drained\n";
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out) {
    out << "group=" << (cfg.group.kind == GroupSpec::Kind::cyclic
                            ? "cyclic_" + std::to_string(cfg.group.n)
                            : std::string("icosahedral"))
        << '\n';
    for (std::size_t s = 0; s < cfg.seeds.size(); ++s) {
        const auto orbit = cfg.group.kind == GroupSpec::Kind::cyclic
                               ? cyclic_orbit(cfg.group.n, cfg.seeds[s])
                               : icosahedral_orbit(cfg.seeds[s]);
        out << "orbit_" << s + 1 << "_size=" << orbit.size() << '\n';
    }
    const GCluster cluster = build_cluster(cfg.group, cfg.seeds);
    out << "k=" << cluster.k() << '\n';
    for (int i = 0; i < cluster.k(); ++i) {
        out << "rep_" << i + 1 << '=';
        print_vec(out, cluster.reps[i]);
        out << '\n';
    }
    return kExitOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, Method method) {
    const Pipeline pl = build_pipeline(cfg);
    const Pattern pat = build_pattern(pl, cfg, method);
    print_pattern_summary(out, pat);
    if (method == Method::modified) out << "delta=" << pl.delta << '\n';
    for (const std::string& path :
         export_pattern(pat, cfg.out_dir, "pattern", cfg.formats))
        out << "output=" << path << '\n';
    return kExitOk;
}

int cmd_diffract(const RunConfig& cfg, std::ostream& out) {
    namespace fs = std::filesystem;
    const Pipeline pl = build_pipeline(cfg);
    const Pattern pat = build_pattern(pl, cfg, cfg.method);
    const DiffractionMap map = diffraction_map(pat, cfg.grid, cfg.threshold_ratio);
    const std::vector<Peak> peaks = extract_peaks(map);

    fs::create_directories(cfg.out_dir);
    const std::string map_path = (fs::path(cfg.out_dir) / "intensity.csv").string();
    const std::string peaks_path = (fs::path(cfg.out_dir) / "peaks.csv").string();
    {
        std::ofstream f(map_path);
        if (!f) throw std::runtime_error("cannot write " + map_path);
        write_map_csv(map, f);
    }
    {
        std::ofstream f(peaks_path);
        if (!f) throw std::runtime_error("cannot write " + peaks_path);
        write_peaks_csv(peaks, f);
    }
    out << "points=" << pat.points.size() << '\n'
        << "i0=" << map.i0 << '\n'
        << "threshold_ratio=" << map.threshold_ratio << '\n'
        << "peaks=" << peaks.size() << '\n'
        << "output=" << map_path << '\n'
        << "output=" << peaks_path << '\n';
    if (pat.info.truncated)
        out << "warning=enumeration stopped by cap before the queue drained\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Pipeline pl = build_pipeline(cfg);
    const EmbeddingReport er = verify_embedding_invariants(pl.embedding);
    const OracleReport orr = verify_oracle_equivalence(pl.spec, cfg.verify_samples);
    out << "embedding_max_cross=" << er.max_cross << '\n'
        << "embedding_max_spread=" << er.max_spread << '\n'
        << "oracle_tested=" << orr.tested << '\n'
        << "oracle_mismatches=" << orr.mismatches << '\n'
        << "oracle_guard_banded=" << orr.guard_banded << '\n';
    const bool ok = er.ok() && orr.ok();
    out << "result=" << (ok ? "pass" : "fail") << '\n';
    return ok ? kExitOk : kExitRuntime;
}

}  // namespace

Command parse_command(const std::string& name) {
    if (name == "orbit") return Command::orbit;
    if (name == "generate") return Command::generate;
    if (name == "modify") return Command::modify;
    if (name == "diffract") return Command::diffract;
    if (name == "verify") return Command::verify;
    throw std::invalid_argument("unknown command: " + name);
}

int run(Command cmd, const RunConfig& cfg, std::ostream& out) {
    try {
        switch (cmd) {
            case Command::orbit: return cmd_orbit(cfg, out);
            case Command::generate: return cmd_generate(cfg, out, Method::standard);
            case Command::modify: return cmd_generate(cfg, out, Method::modified);
            case Command::diffract: return cmd_diffract(cfg, out);
            case Command::verify: return cmd_verify(cfg, out);
        }
    } catch (const std::invalid_argument& e) {
        out << "error=" << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        out << "error=" << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitRuntime;
}

}  // namespace qpack
