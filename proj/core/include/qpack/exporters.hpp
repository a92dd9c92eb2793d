#pragma once

#include <iosfwd>
#include <string>

#include "qpack/diffract.hpp"
#include "qpack/generate.hpp"

namespace qpack {

// Fixed-width 10.5 rendering in the classic Fortran style: no leading zero
// before the decimal point (".30385", "-.77452").
std::string format_f105(double v);

// One line per point: physical coordinates, source lattice coordinates and
// occupation, full round-trip precision. Empty patterns produce the header
// only.
void write_pattern_csv(const Pattern& pattern, std::ostream& out);

// Picture-environment export, line-compatible with the reference output:
// offsets (+10, +20) on the physical coordinates, \circle*{0.2} for points
// at or below the occupancy threshold, \circle{0.4} above it. Rejects empty
// patterns.
void write_pattern_latex(const Pattern& pattern, std::ostream& out);

// Scatter plot with radii proportional to the latex circle sizes. Rejects
// empty patterns.
void write_pattern_svg(const Pattern& pattern, std::ostream& out);

// Intensity matrix, one row per x index, comma-separated.
void write_map_csv(const DiffractionMap& map, std::ostream& out);

void write_peaks_csv(const std::vector<Peak>& peaks, std::ostream& out);

// Reads a pattern csv back (the exact inverse of write_pattern_csv); used
// for round-trip checks and downstream tooling.
Pattern read_pattern_csv(std::istream& in);

// Writes one pattern file per requested format under dir with the given
// stem; returns the paths written. Throws std::runtime_error when a path is
// unwritable.
std::vector<std::string> export_pattern(const Pattern& pattern, const std::string& dir,
                                        const std::string& stem,
                                        const std::vector<std::string>& formats);

}  // namespace qpack
