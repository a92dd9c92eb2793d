#include "qpack/diffract.hpp"

#include <cmath>
#include <stdexcept>

namespace qpack {

double intensity(const Pattern& pattern, const Vec& xi) {
    double re = 0.0, im = 0.0;
    for (const ProjectedPoint& p : pattern.points) {
        if (p.phys.size() != xi.size())
            throw std::invalid_argument("intensity: xi dimension does not match the pattern");
        const double phase = dot(p.phys, xi);
        re += std::cos(phase);
        im += std::sin(phase);
    }
    return re * re + im * im;
}

DiffractionMap diffraction_map(const Pattern& pattern, const GridSpec& grid,
                               double threshold_ratio) {
    if (grid.counts[0] < 1 || grid.counts[1] < 1 || grid.step <= 0.0)
        throw std::invalid_argument("diffraction_map: invalid grid");
    const std::size_t d = pattern.points.empty() ? 2 : pattern.points.front().phys.size();
    DiffractionMap map;
    map.grid = grid;
    map.threshold_ratio = threshold_ratio;
    map.values.resize(static_cast<std::size_t>(grid.counts[0]) * grid.counts[1]);
    Vec xi(d, 0.0);
    for (int i = 0; i < grid.counts[0]; ++i) {
        xi[0] = grid.min[0] + grid.step * i;
        for (int j = 0; j < grid.counts[1]; ++j) {
            xi[1] = grid.min[1] + grid.step * j;
            map.values[static_cast<std::size_t>(i) * grid.counts[1] + j] = intensity(pattern, xi);
        }
    }
    map.i0 = intensity(pattern, Vec(d, 0.0));
    return map;
}

std::vector<Peak> extract_peaks(const DiffractionMap& map) {
    std::vector<Peak> peaks;
    const double cut = map.threshold_ratio * map.i0;
    for (int i = 0; i < map.grid.counts[0]; ++i)
        for (int j = 0; j < map.grid.counts[1]; ++j) {
            const double v = map.at(i, j);
            if (v > cut) peaks.push_back({map.xi(i, j), v});
        }
    return peaks;
}

}  // namespace qpack
