#pragma once

#include <array>
#include <vector>

#include "qpack/generate.hpp"

namespace qpack {

// Rectangular evaluation grid in reciprocal space. The default reproduces
// the reference layout: 100 x 100, step 0.03, starting at -1.47 (so the
// range is [-1.47, 1.50] in both directions).
struct GridSpec {
    std::array<double, 2> min{-1.47, -1.47};
    double step = 0.03;
    std::array<int, 2> counts{100, 100};
};

struct DiffractionMap {
    GridSpec grid;
    std::vector<double> values;  // row-major, counts[0] x counts[1]
    double i0 = 0.0;             // intensity at exactly 0; equals L^2
    double threshold_ratio = 1e-3;

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.counts[1] + j]; }
    std::array<double, 2> xi(int i, int j) const {
        return {grid.min[0] + grid.step * i, grid.min[1] + grid.step * j};
    }
};

struct Peak {
    std::array<double, 2> xi;
    double value;
};

// Squared modulus of the complex exponential sum over the pattern at the
// given reciprocal vector, summed in pattern order. xi must have the
// pattern's physical dimension. Empty pattern -> 0.
double intensity(const Pattern& pattern, const Vec& xi);

// Intensity at every grid cell (xi = min + step * (i, j)); i0 is computed
// separately at exact zero. Patterns in d=3 are evaluated on the z=0
// reciprocal slice.
DiffractionMap diffraction_map(const Pattern& pattern, const GridSpec& grid,
                               double threshold_ratio = 1e-3);

// Grid cells whose intensity exceeds threshold_ratio * i0, in grid index
// order (row-major).
std::vector<Peak> extract_peaks(const DiffractionMap& map);

}  // namespace qpack
