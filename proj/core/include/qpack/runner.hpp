#pragma once

#include <iosfwd>
#include <string>

#include "qpack/config.hpp"

namespace qpack {

enum class Command { orbit, generate, modify, diffract, verify };

// exit codes shared by the CLI
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

// Executes one command against a loaded config, writing artifacts under
// cfg.out_dir and machine-parsable key=value summary lines to `out`.
// Returns kExitOk / kExitValidation / kExitRuntime; a truncated enumeration
// is a warning line, not a failure.
int run(Command cmd, const RunConfig& cfg, std::ostream& out);

Command parse_command(const std::string& name);

}  // namespace qpack
