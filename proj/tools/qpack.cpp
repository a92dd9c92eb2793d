// qpack — quasiperiodic point set generator and diffraction tool.
//
//   qpack <orbit|generate|modify|diffract|verify> --config <file>
//         [--out <dir>] [--format csv|svg|latex]...

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpack/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"quasiperiodic packings of G-clusters by strip projection"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> formats;

    for (const char* name : {"orbit", "generate", "modify", "diffract", "verify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "run configuration (JSON)")->required();
        sub->add_option("--out", out_dir, "output directory (overrides the config)");
        sub->add_option("--format", formats, "pattern export formats (overrides the config)")
            ->check(CLI::IsMember({"csv", "svg", "latex"}));
    }

    CLI11_PARSE(app, argc, argv);

    try {
        qpack::RunConfig cfg = qpack::load_config(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!formats.empty()) cfg.formats = formats;
        const auto cmd = qpack::parse_command(app.get_subcommands().front()->get_name());
        return qpack::run(cmd, cfg, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qpack::kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qpack::kExitRuntime;
    }
}
